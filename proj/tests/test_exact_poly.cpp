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

#include "dfe/poly.hpp"
#include "dfe/rational.hpp"

using dfe::Poly;
using dfe::PolySeries;
using dfe::Rational;

namespace {

Poly make(std::initializer_list<Rational> cs) {
    return Poly(std::vector<Rational>(cs));
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-100, 100);
    std::uniform_int_distribution<int> den(1, 100);
    return Rational(num(rng)) / Rational(den(rng));
}

Poly random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = random_rational(rng);
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("rational parse and print round-trip") {
    CHECK(dfe::to_string(dfe::parse_rational("3/4")) == "3/4");
    CHECK(dfe::to_string(dfe::parse_rational("-6/4")) == "-3/2");
    CHECK(dfe::to_string(dfe::parse_rational("7")) == "7");
    CHECK(dfe::to_string(dfe::parse_rational("3/-4")) == "-3/4");
    CHECK(dfe::parse_rational("0/5") == 0);
    CHECK_THROWS_AS(dfe::parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(dfe::parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(dfe::parse_rational("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(dfe::parse_rational("1/"), std::invalid_argument);
}

TEST_CASE("factorial, binomial, powers") {
    CHECK(dfe::factorial(0) == 1);
    CHECK(dfe::factorial(5) == 120);
    CHECK(dfe::binomial(6, 3) == 20);
    CHECK(dfe::binomial(3, 5) == 0);
    CHECK(dfe::rational_pow(Rational(0), 0) == 1);  // 0^0 = 1 by convention
    CHECK(dfe::rational_pow(Rational(-1, 2), 3) == Rational(-1, 8));
}

TEST_CASE("polynomial ring operations") {
    const Poly x = Poly::variable();
    CHECK((x + 1) + (x - 1) == Rational(2) * x);
    CHECK(x * x == Poly::monomial(2));
    CHECK((x * x - x) * Rational(1, 2) == make({0, Rational(-1, 2), Rational(1, 2)}));
    CHECK(Poly().degree() == -1);
    CHECK((x - x).is_zero());
    CHECK(Poly(0).coeffs().empty());
}

TEST_CASE("shift") {
    const Poly x = Poly::variable();
    CHECK((x * x).shifted(1) == make({1, 2, 1}));
    CHECK((x * x * x).shifted(Rational(-1, 2)) ==
          make({Rational(-1, 8), Rational(3, 4), Rational(-3, 2), 1}));
    CHECK(Poly(5).shifted(7) == Poly(5));
}

TEST_CASE("shift composes and inverts") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 50; ++i) {
        const Poly p = random_poly(rng, 8);
        const Rational a = random_rational(rng);
        CHECK(p.shifted(a).shifted(-a) == p);
        const Rational b = random_rational(rng);
        CHECK(p.shifted(a).shifted(b) == p.shifted(a + b));
    }
}

TEST_CASE("derivative") {
    const Poly x = Poly::variable();
    CHECK((x * x * x).derivative() == Rational(3) * x * x);
    CHECK((x * x * x).derivative(4).is_zero());
    CHECK((x * x * x * x - x).derivative(2) == Rational(12) * x * x);
}

TEST_CASE("evaluation") {
    const Poly p = Poly::variable() * Poly::variable() - Poly::variable();
    CHECK(p(Rational(1)) == 0);
    CHECK(p(Rational(1, 2)) == Rational(-1, 4));
    CHECK(Poly()(Rational(17, 3)) == 0);
}

TEST_CASE("series: EGF product of two e_lambda series") {
    // terms of e_1(t) are (1)_{n,1} = 1, 1, 0, 0, ...; the EGF square has
    // terms (2)_{n,1} = 2*1*0*... : 1, 2, 2, 0.
    PolySeries e(3);
    e.set_term(0, 1);
    e.set_term(1, 1);
    const PolySeries sq = dfe::series_mul(e, e);
    CHECK(sq.term(0) == Poly(1));
    CHECK(sq.term(1) == Poly(2));
    CHECK(sq.term(2) == Poly(2));
    CHECK(sq.term(3) == Poly(0));
}

TEST_CASE("series: order-0 product and order mismatch") {
    PolySeries a(0), b(0);
    a.set_term(0, 3);
    b.set_term(0, Rational(1, 3));
    CHECK(dfe::series_mul(a, b).term(0) == Poly(1));
    CHECK_THROWS_AS(dfe::series_mul(a, PolySeries(2)), std::invalid_argument);
}

TEST_CASE("series inverse") {
    CHECK(PolySeries::unit(5).inverse() == PolySeries::unit(5));

    // e_1(t) + 1 truncated: 2, 1, 0, ...; inverse solves 2b0 = 1, 2b1 + b0 = 0.
    PolySeries s(2);
    s.set_term(0, 2);
    s.set_term(1, 1);
    const PolySeries inv = s.inverse();
    CHECK(inv.term(0) == Poly(Rational(1, 2)));
    CHECK(inv.term(1) == Poly(Rational(-1, 4)));
    CHECK(dfe::series_mul(s, inv) == PolySeries::unit(2));

    PolySeries zero_head(2);
    zero_head.set_term(1, 1);
    CHECK_THROWS_AS(zero_head.inverse(), std::invalid_argument);
}

TEST_CASE("series inverse is two-sided on random series") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        PolySeries s(6);
        Rational head = random_rational(rng);
        if (head == 0) head = 1;
        s.set_term(0, head);
        for (std::size_t k = 1; k <= 6; ++k) s.set_term(k, random_poly(rng, 2));
        CHECK(dfe::series_mul(s, s.inverse()) == PolySeries::unit(6));
        CHECK(dfe::series_mul(s.inverse(), s) == PolySeries::unit(6));
    }
}

TEST_CASE("series pow and scale") {
    PolySeries s(4);
    s.set_term(0, 1);
    s.set_term(1, Poly::variable());
    CHECK(s.pow(0) == PolySeries::unit(4));
    CHECK(s.pow(2) == dfe::series_mul(s, s));
    CHECK(s.scaled(Rational(3)).term(1) == Rational(3) * Poly::variable());
}
