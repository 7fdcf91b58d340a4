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

#include "dfe/numbers.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace dfe {

namespace {

void require_u_ne_1(const Rational& u) {
    if (u == 1) throw std::invalid_argument("u must not equal 1");
}

// Order-1 degenerate Frobenius-Euler numbers h_{0..n,lambda}(u) from the
// difference-equation recurrence
//   (1-u) h_{n,lambda}(u) = -sum_{j=1}^{n} C(n,j) (1)_{j,lambda} h_{n-j,lambda}(u),
// h_0 = 1. lambda = 0 collapses to the classical sequence.
std::vector<Rational> dfe_row(unsigned n_max, const Rational& lambda, const Rational& u) {
    std::vector<Rational> h(n_max + 1);
    h[0] = 1;
    const Rational one_minus_u = Rational(1) - u;
    for (unsigned n = 1; n <= n_max; ++n) {
        Rational acc = 0;
        for (unsigned j = 1; j <= n; ++j)
            acc += Rational(binomial(n, j)) * one_nlambda(j, lambda) * h[n - j];
        h[n] = -acc / one_minus_u;
    }
    return h;
}

// EGF convolution of two number sequences: c_n = sum_k C(n,k) a_k b_{n-k}.
std::vector<Rational> egf_convolve(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> c(a.size());
    for (unsigned n = 0; n < a.size(); ++n)
        for (unsigned k = 0; k <= n; ++k)
            c[n] += Rational(binomial(n, k)) * a[k] * b[n - k];
    return c;
}

std::vector<Rational> dfe_row_order(unsigned n_max, const DegenParams& p) {
    std::vector<Rational> out(n_max + 1);
    if (p.r == 0) {
        // Order-0 generating function is e_lambda^x(t) alone, so the
        // x = 0 numbers are (0)_{n,lambda} = delta_{n,0}.
        out[0] = 1;
        return out;
    }
    std::vector<Rational> row = dfe_row(n_max, p.lambda, p.u);
    out = row;
    for (unsigned i = 1; i < p.r; ++i) out = egf_convolve(out, row);
    return out;
}

}  // namespace

Rational stirling2(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (n == 0) return 1;  // S2(0,0)
    if (k == 0) return 0;
    // Row-by-row: S2(n,k) = k S2(n-1,k) + S2(n-1,k-1).
    std::vector<Rational> row(k + 1);
    row[0] = 1;  // row n=0
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = std::min(i, k); j >= 1; --j)
            row[j] = Rational(j) * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

Rational harmonic(unsigned n) {
    if (n == 0) throw std::invalid_argument("harmonic: n must be >= 1");
    Rational h = 0;
    for (unsigned i = 1; i <= n; ++i) h += Rational(1, i);
    return h;
}

Rational bernoulli_number(unsigned n) {
    static std::mutex mu;
    static std::vector<Rational> memo{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (memo.size() <= n) {
        const unsigned m = static_cast<unsigned>(memo.size());
        // sum_{j=0}^{m} C(m+1,j) B_j = 0  for m >= 1
        Rational acc = 0;
        for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * memo[j];
        memo.push_back(-acc / Rational(m + 1));
    }
    return memo[n];
}

Rational euler_number(unsigned n) {
    return frobenius_euler_number(n, Rational(-1), 1);
}

Rational frobenius_euler_number(unsigned n, const Rational& u, unsigned r) {
    require_u_ne_1(u);
    DegenParams p;
    p.lambda = 0;
    p.u = u;
    p.r = r;
    return dfe_row_order(n, p)[n];
}

Rational degen_fe_number(unsigned n, const DegenParams& p) {
    require_u_ne_1(p.u);
    return dfe_row_order(n, p)[n];
}

std::vector<Rational> degen_fe_numbers(unsigned n_max, const DegenParams& p) {
    require_u_ne_1(p.u);
    return dfe_row_order(n_max, p);
}

Rational one_nlambda(unsigned n, const Rational& lambda) {
    Rational v = 1;
    for (unsigned i = 1; i < n; ++i) v *= Rational(1) - Rational(i) * lambda;
    return n == 0 ? Rational(1) : v;
}

Rational delta_zero(unsigned n, unsigned k, const Rational& lambda) {
    Rational acc = 0;
    for (unsigned j = 0; j <= k; ++j)
        acc += Rational(binomial(k, j)) * alt_sign(k - j) * rational_pow(Rational(j) * lambda, n);
    return acc;
}

}  // namespace dfe
