/*
   Copyright 2026 degenfe contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DFE_OPERATORS_HPP
#define DFE_OPERATORS_HPP

#include <utility>
#include <vector>

#include "dfe/poly.hpp"

namespace dfe {

/// A finite weighted combination of shift operators p(x) -> p(x + offset).
///
/// Every operator this library needs — (e^{lambda t} - 1)^k, g(t)^r, e^{yt},
/// and the tilde difference — acts on polynomials only, where it reduces to
/// such a finite combination. No truncated-series operator application is
/// ever required; this is what keeps every code path exact and finite.
class ShiftCombo {
public:
    ShiftCombo() = default;

    /// Adds weight * shift(offset), merging with an existing term at the
    /// same offset. Terms whose weight cancels to zero are dropped.
    void add(const Rational& weight, const Rational& offset);

    /// The single shift e^{yt}.
    static ShiftCombo shift(const Rational& y);

    /// (weight, offset) pairs, offsets strictly increasing.
    const std::vector<std::pair<Rational, Rational>>& terms() const { return terms_; }

    /// Applies the combination as an operator on p. Never raises degree.
    Poly apply(const Poly& p) const;

private:
    std::vector<std::pair<Rational, Rational>> terms_;
};

/// Umbral functional: apply the combination as an operator, evaluate at 0.
Rational functional(const ShiftCombo& c, const Poly& p);

/// k-th forward difference with step a: Delta_a^k p = sum_i C(k,i)(-1)^{k-i} p(x+ia).
Poly forward_diff(const Poly& p, const Rational& a, unsigned k);

/// k-th tilde difference: sum_i C(k,i) p(x+i); one step is p(x+1) + p(x).
Poly tilde_diff(const Poly& p, unsigned k);

/// ((e^{lambda t} - 1)/lambda)^k p = lambda^{-k} Delta_lambda^k p.
/// lambda = 0 takes the continuous limit: the k-th derivative.
Poly f_op(const Poly& p, const Rational& lambda, unsigned k);

/// ((e^t - u)/(1-u))^r p = (1-u)^{-r} sum_j C(r,j)(-u)^{r-j} p(x+j). Throws on u = 1.
Poly g_op(const Poly& p, const Rational& u, unsigned r);

}  // namespace dfe

#endif
