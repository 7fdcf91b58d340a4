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

#include <vector>

#include "dfe/numbers.hpp"

using dfe::Rational;

namespace {

// Counts partitions of {0..n-1} into exactly k nonempty blocks by
// enumerating restricted growth strings.
unsigned long count_partitions(unsigned n, unsigned k) {
    std::vector<unsigned> rgs(n, 0);
    unsigned long count = 0;
    // Enumerate all restricted growth strings: rgs[i] <= 1 + max(prefix).
    auto rec = [&](auto&& self, unsigned i, unsigned mx) -> void {
        if (i == n) {
            if (mx + 1 == k) ++count;
            return;
        }
        for (unsigned v = 0; v <= mx + 1; ++v) {
            rgs[i] = v;
            self(self, i + 1, v > mx ? v : mx);
        }
    };
    if (n == 0) return k == 0 ? 1 : 0;
    rec(rec, 1, 0);  // rgs[0] is forced to 0
    return count;
}

}  // namespace

TEST_CASE("stirling2 fixed values") {
    CHECK(dfe::stirling2(0, 0) == 1);
    CHECK(dfe::stirling2(5, 5) == 1);
    CHECK(dfe::stirling2(4, 2) == 7);
    CHECK(dfe::stirling2(3, 0) == 0);
    CHECK(dfe::stirling2(2, 5) == 0);
}

TEST_CASE("stirling2 equals set-partition count") {
    for (unsigned n = 1; n <= 8; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(dfe::stirling2(n, k) == Rational(count_partitions(n, k)));
}

TEST_CASE("harmonic numbers") {
    CHECK(dfe::harmonic(1) == 1);
    CHECK(dfe::harmonic(2) == Rational(3, 2));
    CHECK(dfe::harmonic(3) == Rational(11, 6));
    CHECK_THROWS_AS(dfe::harmonic(0), std::invalid_argument);
}

TEST_CASE("Bernoulli numbers") {
    CHECK(dfe::bernoulli_number(0) == 1);
    CHECK(dfe::bernoulli_number(1) == Rational(-1, 2));
    CHECK(dfe::bernoulli_number(2) == Rational(1, 6));
    CHECK(dfe::bernoulli_number(3) == 0);
    CHECK(dfe::bernoulli_number(12) == Rational(-691, 2730));
    // Defining recurrence: sum_{j=0}^{m} C(m+1,j) B_j = 0 for m >= 1.
    for (unsigned m = 1; m <= 20; ++m) {
        Rational s = 0;
        for (unsigned j = 0; j <= m; ++j)
            s += Rational(dfe::binomial(m + 1, j)) * dfe::bernoulli_number(j);
        CHECK(s == 0);
    }
}

TEST_CASE("Euler numbers E_n = E_n(0)") {
    const std::vector<std::pair<unsigned, Rational>> table = {
        {0, 1},          {1, Rational(-1, 2)}, {3, Rational(1, 4)},
        {5, Rational(-1, 2)}, {7, Rational(17, 8)}, {9, Rational(-31, 2)},
    };
    for (const auto& [n, v] : table) CHECK(dfe::euler_number(n) == v);
    for (unsigned k = 1; k <= 6; ++k) CHECK(dfe::euler_number(2 * k) == 0);
}

TEST_CASE("Frobenius-Euler numbers match the closed forms") {
    for (const Rational& u : {Rational(2), Rational(1, 2), Rational(-3), Rational(5),
                              Rational(-1, 2)}) {
        const Rational d = Rational(1) - u;
        CHECK(dfe::frobenius_euler_number(0, u) == 1);
        CHECK(dfe::frobenius_euler_number(1, u) == Rational(-1) / d);
        CHECK(dfe::frobenius_euler_number(2, u) == (Rational(1) + u) / (d * d));
        CHECK(dfe::frobenius_euler_number(3, u) ==
              -(u * u + 4 * u + Rational(1)) / (d * d * d));
    }
    CHECK_THROWS_AS(dfe::frobenius_euler_number(2, Rational(1)), std::invalid_argument);
}

TEST_CASE("Frobenius-Euler u = -1 reduces to Euler") {
    for (unsigned n = 0; n <= 12; ++n)
        CHECK(dfe::frobenius_euler_number(n, Rational(-1)) == dfe::euler_number(n));
}

TEST_CASE("degenerate Frobenius-Euler numbers") {
    const dfe::DegenParams p{Rational(1, 2), Rational(2), 1};
    CHECK(dfe::degen_fe_number(0, p) == 1);
    // h_1 = -1/(1-u), independent of lambda.
    for (const Rational& lam : {Rational(0), Rational(1), Rational(-1, 3)})
        CHECK(dfe::degen_fe_number(1, {lam, Rational(2), 1}) == 1);
    // lambda = 0 reproduces the classical numbers, any order.
    for (unsigned r = 0; r <= 3; ++r)
        for (unsigned n = 0; n <= 10; ++n)
            CHECK(dfe::degen_fe_number(n, {Rational(0), Rational(1, 2), r}) ==
                  dfe::frobenius_euler_number(n, Rational(1, 2), r));
    // r = 0: the prefactor is 1, so the number sequence is delta_{n,0}.
    CHECK(dfe::degen_fe_number(0, {Rational(1), Rational(2), 0}) == 1);
    for (unsigned n = 1; n <= 6; ++n)
        CHECK(dfe::degen_fe_number(n, {Rational(1), Rational(2), 0}) == 0);
    CHECK_THROWS_AS(dfe::degen_fe_number(2, {Rational(1), Rational(1), 1}),
                    std::invalid_argument);
}

TEST_CASE("degen_fe_numbers matches point queries") {
    const dfe::DegenParams p{Rational(-1, 3), Rational(5), 3};
    const auto row = dfe::degen_fe_numbers(10, p);
    REQUIRE(row.size() == 11);
    for (unsigned n = 0; n <= 10; ++n) CHECK(row[n] == dfe::degen_fe_number(n, p));
}

TEST_CASE("one_nlambda") {
    CHECK(dfe::one_nlambda(0, Rational(7)) == 1);
    CHECK(dfe::one_nlambda(1, Rational(7)) == 1);
    CHECK(dfe::one_nlambda(2, Rational(1, 2)) == Rational(1, 2));
    CHECK(dfe::one_nlambda(3, Rational(1)) == 0);
}

TEST_CASE("delta_zero") {
    CHECK(dfe::delta_zero(0, 0, Rational(3)) == 1);  // 0^0 = 1 convention
    CHECK(dfe::delta_zero(3, 2, Rational(1)) == 6);
    // Delta_lambda^k 0^n = lambda^n k! S2(n,k).
    for (const Rational& lam : {Rational(1), Rational(-1, 2), Rational(2, 3)})
        for (unsigned n = 0; n <= 12; ++n)
            for (unsigned k = 0; k <= 12; ++k)
                CHECK(dfe::delta_zero(n, k, lam) ==
                      dfe::rational_pow(lam, n) * Rational(dfe::factorial(k)) *
                          dfe::stirling2(n, k));
}
