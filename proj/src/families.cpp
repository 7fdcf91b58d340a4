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

#include "dfe/families.hpp"

#include <stdexcept>

namespace dfe {

FamilyKind FamilyKind::bernoulli() {
    return {FamilyTag::Bernoulli, {}};
}

FamilyKind FamilyKind::euler(unsigned r) {
    return {FamilyTag::Euler, {Rational(0), Rational(-1), r}};
}

FamilyKind FamilyKind::frobenius_euler(const Rational& u, unsigned r) {
    return {FamilyTag::FrobeniusEuler, {Rational(0), u, r}};
}

FamilyKind FamilyKind::degenerate_euler(const Rational& lambda, unsigned r) {
    return {FamilyTag::DegenerateEuler, {lambda, Rational(-1), r}};
}

FamilyKind FamilyKind::degenerate_frobenius_euler(const Rational& lambda, const Rational& u,
                                                  unsigned r) {
    return {FamilyTag::DegenerateFrobeniusEuler, {lambda, u, r}};
}

FamilyKind FamilyKind::degenerate_falling_factorial(const Rational& lambda) {
    return {FamilyTag::DegenerateFallingFactorial, {lambda, Rational(-1), 0}};
}

bool FamilyKind::uses_lambda() const {
    switch (tag) {
        case FamilyTag::DegenerateEuler:
        case FamilyTag::DegenerateFrobeniusEuler:
        case FamilyTag::DegenerateFallingFactorial:
            return true;
        default:
            return false;
    }
}

bool FamilyKind::uses_u() const {
    return tag == FamilyTag::FrobeniusEuler || tag == FamilyTag::DegenerateFrobeniusEuler;
}

bool FamilyKind::uses_r() const {
    return tag != FamilyTag::Bernoulli && tag != FamilyTag::DegenerateFallingFactorial;
}

Rational FamilyKind::effective_lambda() const {
    return uses_lambda() ? params.lambda : Rational(0);
}

Rational FamilyKind::effective_u() const {
    return uses_u() ? params.u : Rational(-1);
}

void FamilyKind::validate() const {
    if (uses_u() && params.u == 1) throw std::invalid_argument("u must not equal 1");
}

std::string FamilyKind::name() const {
    switch (tag) {
        case FamilyTag::Bernoulli: return "bernoulli";
        case FamilyTag::Euler: return "euler";
        case FamilyTag::FrobeniusEuler: return "frobenius-euler";
        case FamilyTag::DegenerateEuler: return "degen-euler";
        case FamilyTag::DegenerateFrobeniusEuler: return "degen-fe";
        case FamilyTag::DegenerateFallingFactorial: return "degen-falling";
    }
    return "?";
}

Poly falling_factorial_poly(unsigned n, const Rational& lambda) {
    Poly p{Rational(1)};
    for (unsigned i = 0; i < n; ++i)
        p *= Poly(std::vector<Rational>{-Rational(i) * lambda, Rational(1)});
    return p;
}

namespace {

// Shared construction for all Euler-type kinds: the n-th member is
// sum_j C(n,j) num_{n-j} (x)_{j,lambda}, where num is the x = 0 number
// sequence of the kind and lambda is 0 for the classical kinds.
std::vector<Poly> euler_type_table(const FamilyKind& kind, unsigned n_max) {
    DegenParams p;
    p.lambda = kind.effective_lambda();
    p.u = kind.effective_u();
    p.r = kind.uses_r() ? kind.params.r : 0;
    const std::vector<Rational> nums = degen_fe_numbers(n_max, p);
    std::vector<Poly> base(n_max + 1);
    for (unsigned j = 0; j <= n_max; ++j) base[j] = falling_factorial_poly(j, p.lambda);
    std::vector<Poly> table(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
        Poly acc;
        for (unsigned j = 0; j <= n; ++j)
            acc += Rational(binomial(n, j)) * nums[n - j] * base[j];
        table[n] = std::move(acc);
    }
    return table;
}

std::vector<Poly> bernoulli_table(unsigned n_max) {
    std::vector<Poly> table(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
        Poly acc;
        for (unsigned j = 0; j <= n; ++j)
            acc += Poly::monomial(n - j, Rational(binomial(n, j)) * bernoulli_number(j));
        table[n] = std::move(acc);
    }
    return table;
}

}  // namespace

Poly family_poly(const FamilyKind& kind, unsigned n) {
    return family_table(kind, n).back();
}

std::vector<Poly> family_table(const FamilyKind& kind, unsigned n_max) {
    kind.validate();
    switch (kind.tag) {
        case FamilyTag::Bernoulli:
            return bernoulli_table(n_max);
        case FamilyTag::DegenerateFallingFactorial: {
            std::vector<Poly> table(n_max + 1);
            for (unsigned n = 0; n <= n_max; ++n)
                table[n] = falling_factorial_poly(n, kind.params.lambda);
            return table;
        }
        default:
            return euler_type_table(kind, n_max);
    }
}

std::vector<Poly> gf_oracle(const FamilyKind& kind, unsigned n_max) {
    kind.validate();
    const Rational lambda = kind.effective_lambda();

    // e_lambda^x(t): EGF term k is (x)_{k,lambda}.
    PolySeries ex(n_max);
    for (unsigned k = 0; k <= n_max; ++k) ex.set_term(k, falling_factorial_poly(k, lambda));

    PolySeries prefactor = PolySeries::unit(n_max);
    if (kind.tag == FamilyTag::Bernoulli) {
        // t/(e^t - 1): invert the series of (e^t - 1)/t, whose EGF term k is 1/(k+1).
        PolySeries g(n_max);
        for (unsigned k = 0; k <= n_max; ++k) g.set_term(k, Poly(Rational(1, k + 1)));
        prefactor = g.inverse();
    } else if (kind.tag != FamilyTag::DegenerateFallingFactorial) {
        const Rational u = kind.effective_u();
        // (1-u)/(e_lambda(t) - u), raised to the order.
        PolySeries den(n_max);
        den.set_term(0, Poly(Rational(1) - u));
        for (unsigned k = 1; k <= n_max; ++k) den.set_term(k, Poly(one_nlambda(k, lambda)));
        prefactor = den.inverse().scaled(Rational(1) - u).pow(kind.params.r);
    }

    const PolySeries full = series_mul(prefactor, ex);
    std::vector<Poly> table(n_max + 1);
    for (unsigned k = 0; k <= n_max; ++k) table[k] = full.term(k);
    return table;
}

}  // namespace dfe
