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

#ifndef DFE_NUMBERS_HPP
#define DFE_NUMBERS_HPP

#include <vector>

#include "dfe/rational.hpp"

namespace dfe {

/// Parameter tuple for the degenerate Frobenius-Euler world: degeneration
/// parameter lambda, Frobenius parameter u (u != 1 wherever a Frobenius-Euler
/// quantity is requested), and order r >= 0.
struct DegenParams {
    Rational lambda{0};
    Rational u{-1};
    unsigned r{1};
};

/// Stirling number of the second kind S2(n,k), by the triangular recurrence.
Rational stirling2(unsigned n, unsigned k);

/// Partial harmonic sum 1 + 1/2 + ... + 1/n. Rejects n = 0.
Rational harmonic(unsigned n);

/// Bernoulli number B_n = B_n(0).
Rational bernoulli_number(unsigned n);

/// Euler number E_n = E_n(0).
Rational euler_number(unsigned n);

/// Frobenius-Euler number H_n^{(r)}(u). Throws on u = 1.
/// r = 0 gives delta_{n,0}; r > 1 is the r-fold EGF convolution of r = 1.
Rational frobenius_euler_number(unsigned n, const Rational& u, unsigned r = 1);

/// Degenerate Frobenius-Euler number h_{n,lambda}^{(r)}(u). Throws on u = 1.
/// lambda = 0 reproduces frobenius_euler_number.
Rational degen_fe_number(unsigned n, const DegenParams& p);

/// Sequence h_{0..n_max,lambda}^{(r)}(u), cheaper than repeated point queries.
std::vector<Rational> degen_fe_numbers(unsigned n_max, const DegenParams& p);

/// Generalized falling factorial at 1: (1)_{n,lambda} = 1(1-lambda)...(1-(n-1)lambda).
Rational one_nlambda(unsigned n, const Rational& lambda);

/// k-th forward lambda-difference of x^n at 0:
/// Delta_lambda^k 0^n = sum_j C(k,j)(-1)^{k-j}(j lambda)^n.
Rational delta_zero(unsigned n, unsigned k, const Rational& lambda);

}  // namespace dfe

#endif
