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

#ifndef DFE_FAMILIES_HPP
#define DFE_FAMILIES_HPP

#include <string>
#include <vector>

#include "dfe/numbers.hpp"
#include "dfe/poly.hpp"

namespace dfe {

enum class FamilyTag {
    Bernoulli,
    Euler,
    FrobeniusEuler,
    DegenerateEuler,
    DegenerateFrobeniusEuler,
    DegenerateFallingFactorial,
};

/// Basis descriptor: a family tag plus whichever of (lambda, u, r) apply.
/// Bernoulli uses none; Euler uses r; FrobeniusEuler uses u, r; the
/// degenerate kinds add lambda; DegenerateFallingFactorial uses lambda only.
struct FamilyKind {
    FamilyTag tag{FamilyTag::DegenerateFrobeniusEuler};
    DegenParams params{};

    static FamilyKind bernoulli();
    static FamilyKind euler(unsigned r = 1);
    static FamilyKind frobenius_euler(const Rational& u, unsigned r = 1);
    static FamilyKind degenerate_euler(const Rational& lambda, unsigned r = 1);
    static FamilyKind degenerate_frobenius_euler(const Rational& lambda, const Rational& u,
                                                 unsigned r = 1);
    static FamilyKind degenerate_falling_factorial(const Rational& lambda);

    bool uses_lambda() const;
    bool uses_u() const;
    bool uses_r() const;

    /// Effective lambda for polynomial construction (0 for classical kinds).
    Rational effective_lambda() const;
    /// Effective u (-1 for the Euler kinds). Meaningless for Bernoulli and
    /// the falling-factorial kind.
    Rational effective_u() const;

    /// Throws std::invalid_argument on parameter violations (u == 1).
    void validate() const;

    std::string name() const;
};

/// (x)_{n,lambda} = x(x-lambda)...(x-(n-1)lambda); (x)_{0,lambda} = 1.
Poly falling_factorial_poly(unsigned n, const Rational& lambda);

/// The n-th member of the family, by binomial convolution of the number
/// sequence with the falling-factorial (or monomial) basis.
Poly family_poly(const FamilyKind& kind, unsigned n);

/// Members 0..n_max.
std::vector<Poly> family_table(const FamilyKind& kind, unsigned n_max);

/// Independent route: the same table read off a truncated generating-function
/// computation in PolySeries arithmetic.
std::vector<Poly> gf_oracle(const FamilyKind& kind, unsigned n_max);

}  // namespace dfe

#endif
