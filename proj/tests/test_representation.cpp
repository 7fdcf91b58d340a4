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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dfe/representation.hpp"

using dfe::Expansion;
using dfe::FamilyKind;
using dfe::FormulaVariant;
using dfe::Poly;
using dfe::Rational;

namespace {

Poly random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> num(-100, 100);
    std::uniform_int_distribution<int> den(1, 100);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = Rational(num(rng)) / Rational(den(rng));
    return Poly(std::move(c));
}

constexpr FormulaVariant kOrder1Variants[] = {
    FormulaVariant::OperatorForm,
    FormulaVariant::DeltaForm,
    FormulaVariant::BinomialSum,
    FormulaVariant::StirlingSum,
};

}  // namespace

TEST_CASE("variant names round-trip") {
    for (const auto v :
         {FormulaVariant::OperatorForm, FormulaVariant::DeltaForm, FormulaVariant::BinomialSum,
          FormulaVariant::StirlingSum, FormulaVariant::LadderForm})
        CHECK(dfe::parse_variant(dfe::variant_name(v)) == v);
    CHECK_THROWS_AS(dfe::parse_variant("cauchy"), std::invalid_argument);
}

TEST_CASE("simple expansions") {
    const Rational lam(1), u(-1);
    CHECK(dfe::represent_dfe(Poly(1), lam, u, FormulaVariant::OperatorForm).coeffs ==
          std::vector<Rational>{1});
    // x = E_1(x) + (1/2) E_0 in the degenerate Euler basis at lambda = 1.
    const Expansion e = dfe::represent_de(Poly::variable(), lam, FormulaVariant::BinomialSum);
    CHECK(e.coeffs == std::vector<Rational>{Rational(1, 2), 1});
    CHECK(dfe::represent_dfe(Poly(), lam, Rational(2), FormulaVariant::DeltaForm).coeffs ==
          std::vector<Rational>{0});
}

TEST_CASE("argument guards") {
    const Poly p = Poly::variable();
    CHECK_THROWS_AS(dfe::represent_dfe(p, Rational(1), Rational(1), FormulaVariant::OperatorForm),
                    std::invalid_argument);
    CHECK_THROWS_AS(dfe::represent_dfe(p, Rational(1), Rational(2), FormulaVariant::LadderForm),
                    std::invalid_argument);
    CHECK_THROWS_AS(dfe::represent_dfe(p, Rational(0), Rational(2), FormulaVariant::DeltaForm),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        dfe::represent_dfe_r(p, Rational(1), Rational(2), 0, FormulaVariant::LadderForm),
        std::invalid_argument);
    CHECK_THROWS_AS(dfe::reconstruct(Expansion{FamilyKind::bernoulli(), {}}),
                    std::invalid_argument);
}

TEST_CASE("all order-1 variants agree and reconstruct") {
    std::mt19937_64 rng(101);
    const Rational lam(1, 2), u(3);
    for (int i = 0; i < 60; ++i) {
        const Poly p = random_poly(rng, 10);
        const Expansion base = dfe::represent_dfe(p, lam, u, FormulaVariant::OperatorForm);
        for (const auto v : kOrder1Variants)
            CHECK(dfe::represent_dfe(p, lam, u, v).coeffs == base.coeffs);
        CHECK(dfe::reconstruct(base) == p);
        CHECK(dfe::basis_convert_oracle(p, base.kind).coeffs == base.coeffs);
    }
}

TEST_CASE("all order-r variants agree and reconstruct") {
    std::mt19937_64 rng(202);
    const Rational lam(-1, 3), u(1, 2);
    for (unsigned r : {1u, 2u, 3u, 4u}) {
        for (int i = 0; i < 20; ++i) {
            const Poly p = random_poly(rng, 10);
            const Expansion base =
                dfe::represent_dfe_r(p, lam, u, r, FormulaVariant::OperatorForm);
            for (const auto v :
                 {FormulaVariant::DeltaForm, FormulaVariant::BinomialSum,
                  FormulaVariant::StirlingSum, FormulaVariant::LadderForm})
                CHECK(dfe::represent_dfe_r(p, lam, u, r, v).coeffs == base.coeffs);
            CHECK(dfe::reconstruct(base) == p);
            CHECK(dfe::basis_convert_oracle(p, base.kind).coeffs == base.coeffs);
        }
    }
}

TEST_CASE("order 1 of the order-r formula is the order-1 formula") {
    std::mt19937_64 rng(303);
    const Rational lam(1, 2), u(-3);
    for (int i = 0; i < 30; ++i) {
        const Poly p = random_poly(rng, 8);
        CHECK(dfe::represent_dfe_r(p, lam, u, 1, FormulaVariant::BinomialSum).coeffs ==
              dfe::represent_dfe(p, lam, u, FormulaVariant::BinomialSum).coeffs);
    }
}

TEST_CASE("r = 0 yields falling-factorial coordinates") {
    std::mt19937_64 rng(404);
    const Rational lam(2, 3);
    for (int i = 0; i < 30; ++i) {
        const Poly p = random_poly(rng, 8);
        const Expansion e =
            dfe::represent_dfe_r(p, lam, Rational(7), 0, FormulaVariant::OperatorForm);
        const Expansion oracle =
            dfe::basis_convert_oracle(p, FamilyKind::degenerate_falling_factorial(lam));
        CHECK(e.coeffs == oracle.coeffs);
    }
}

TEST_CASE("degenerate Euler wrappers fix u = -1") {
    std::mt19937_64 rng(505);
    const Rational lam(1, 2);
    for (int i = 0; i < 20; ++i) {
        const Poly p = random_poly(rng, 8);
        CHECK(dfe::represent_de(p, lam, FormulaVariant::OperatorForm).coeffs ==
              dfe::represent_dfe(p, lam, Rational(-1), FormulaVariant::OperatorForm).coeffs);
        CHECK(dfe::represent_de_r(p, lam, 2, FormulaVariant::DeltaForm).coeffs ==
              dfe::represent_dfe_r(p, lam, Rational(-1), 2, FormulaVariant::DeltaForm).coeffs);
        CHECK(dfe::represent_de(p, lam, FormulaVariant::StirlingSum).kind.name() ==
              "degen-euler");
    }
}

TEST_CASE("lambda = 0 StirlingSum matches the classical formula") {
    std::mt19937_64 rng(606);
    for (const Rational& u : {Rational(2), Rational(-1, 2)}) {
        for (unsigned r : {1u, 2u, 3u}) {
            for (int i = 0; i < 20; ++i) {
                const Poly p = random_poly(rng, 8);
                CHECK(dfe::represent_dfe_r(p, Rational(0), u, r,
                                           FormulaVariant::StirlingSum).coeffs ==
                      dfe::represent_classical(p, u, r).coeffs);
            }
        }
    }
}

TEST_CASE("classical u = -1 expansion matches the two-point derivative formula") {
    // b_k = (1/(2 k!)) (p^(k)(1) + p^(k)(0)).
    std::mt19937_64 rng(707);
    for (int i = 0; i < 20; ++i) {
        const Poly p = random_poly(rng, 8);
        const Expansion e = dfe::represent_classical(p, Rational(-1), 1);
        for (unsigned k = 0; k < e.coeffs.size(); ++k) {
            const Poly dk = p.derivative(k);
            CHECK(e.coeffs[k] ==
                  (dk(Rational(1)) + dk(Rational(0))) / (Rational(2) * Rational(dfe::factorial(k))));
        }
        CHECK(dfe::reconstruct(e) == p);
    }
}

TEST_CASE("family members have unit coordinate vectors") {
    const FamilyKind kind =
        FamilyKind::degenerate_frobenius_euler(Rational(1, 2), Rational(2), 2);
    const auto table = dfe::family_table(kind, 6);
    for (unsigned n = 0; n <= 6; ++n) {
        const Expansion e = dfe::basis_convert_oracle(table[n], kind);
        for (unsigned k = 0; k <= n; ++k) CHECK(e.coeffs[k] == (k == n ? 1 : 0));
    }
}
