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

#ifndef DFE_POLY_HPP
#define DFE_POLY_HPP

#include <cstddef>
#include <vector>

#include "dfe/rational.hpp"

namespace dfe {

/// Dense univariate polynomial over Rational in the formal variable x.
/// Canonical form: trailing zero coefficients are trimmed on construction.
/// The zero polynomial has an empty coefficient vector and degree() == -1,
/// the distinguished "minus infinity" marker.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);  // NOLINT: implicit constant lift is intended
    Poly(int c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs);

    static Poly variable();  // x
    static Poly monomial(std::size_t k, const Rational& c = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of x^i; zero beyond the stored range.
    const Rational& coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator-(const Poly& a) { return a * Rational(-1); }

    bool operator==(const Poly& rhs) const = default;

    /// p(x + a) by exact expansion.
    Poly shifted(const Rational& a) const;

    /// l-fold formal derivative; l > degree gives the zero polynomial.
    Poly derivative(unsigned l = 1) const;

    /// Exact Horner evaluation.
    Rational operator()(const Rational& x0) const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Truncated formal power series in t whose coefficients are Poly values,
/// in exponential-generating-function normalization: term(k) is the Poly
/// coefficient of t^k/k!. Arithmetic never consults terms beyond order().
class PolySeries {
public:
    explicit PolySeries(std::size_t order) : terms_(order + 1) {}
    PolySeries(std::size_t order, std::vector<Poly> terms);

    /// The series of e^{0*t}: term 0 is 1, the rest vanish.
    static PolySeries unit(std::size_t order);

    std::size_t order() const { return terms_.size() - 1; }
    const Poly& term(std::size_t k) const { return terms_.at(k); }
    void set_term(std::size_t k, Poly p) { terms_.at(k) = std::move(p); }

    /// Multiplicative inverse up to the truncation order, by triangular
    /// recursion. Requires term(0) to be a nonzero constant.
    PolySeries inverse() const;

    PolySeries pow(unsigned r) const;
    PolySeries scaled(const Rational& c) const;

    bool operator==(const PolySeries& rhs) const = default;

private:
    std::vector<Poly> terms_;
};

/// EGF Cauchy product: result term n = sum_k C(n,k) a_k b_{n-k},
/// truncated at the common order. Throws on order mismatch.
PolySeries series_mul(const PolySeries& a, const PolySeries& b);

}  // namespace dfe

#endif
