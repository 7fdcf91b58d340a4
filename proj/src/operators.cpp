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

#include "dfe/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace dfe {

void ShiftCombo::add(const Rational& weight, const Rational& offset) {
    if (weight == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), offset,
                               [](const auto& t, const Rational& o) { return t.second < o; });
    if (it != terms_.end() && it->second == offset) {
        it->first += weight;
        if (it->first == 0) terms_.erase(it);
    } else {
        terms_.insert(it, {weight, offset});
    }
}

ShiftCombo ShiftCombo::shift(const Rational& y) {
    ShiftCombo c;
    c.add(Rational(1), y);
    return c;
}

Poly ShiftCombo::apply(const Poly& p) const {
    Poly out;
    for (const auto& [w, o] : terms_) out += w * p.shifted(o);
    return out;
}

Rational functional(const ShiftCombo& c, const Poly& p) {
    return c.apply(p)(Rational(0));
}

Poly forward_diff(const Poly& p, const Rational& a, unsigned k) {
    ShiftCombo c;
    for (unsigned i = 0; i <= k; ++i)
        c.add(Rational(binomial(k, i)) * alt_sign(k - i), Rational(i) * a);
    return c.apply(p);
}

Poly tilde_diff(const Poly& p, unsigned k) {
    ShiftCombo c;
    for (unsigned i = 0; i <= k; ++i) c.add(Rational(binomial(k, i)), Rational(i));
    return c.apply(p);
}

Poly f_op(const Poly& p, const Rational& lambda, unsigned k) {
    if (lambda == 0) return p.derivative(k);
    return forward_diff(p, lambda, k) * rational_pow(Rational(1) / lambda, k);
}

Poly g_op(const Poly& p, const Rational& u, unsigned r) {
    if (u == 1) throw std::invalid_argument("u must not equal 1");
    ShiftCombo c;
    for (unsigned j = 0; j <= r; ++j)
        c.add(Rational(binomial(r, j)) * rational_pow(-u, r - j), Rational(j));
    return c.apply(p) * rational_pow(Rational(1) / (Rational(1) - u), r);
}

}  // namespace dfe
