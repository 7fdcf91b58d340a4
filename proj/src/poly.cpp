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

#include "dfe/poly.hpp"

#include <stdexcept>
#include <utility>

namespace dfe {

namespace {
const Rational kZero{0};
}

Poly::Poly(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Poly Poly::variable() {
    return Poly(std::vector<Rational>{Rational(0), Rational(1)});
}

Poly Poly::monomial(std::size_t k, const Rational& c) {
    if (c == 0) return {};
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
}

const Rational& Poly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Poly Poly::shifted(const Rational& a) const {
    if (a == 0 || is_zero()) return *this;
    // Horner in (x + a): exact, O(deg^2).
    Poly res;
    const Poly xa(std::vector<Rational>{a, Rational(1)});
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        res *= xa;
        res += Poly(coeffs_[i]);
    }
    return res;
}

Poly Poly::derivative(unsigned l) const {
    Poly p = *this;
    for (unsigned step = 0; step < l; ++step) {
        if (p.is_zero()) return p;
        std::vector<Rational> d(p.coeffs_.size() - 1);
        for (std::size_t i = 1; i < p.coeffs_.size(); ++i) d[i - 1] = p.coeffs_[i] * Rational(i);
        p = Poly(std::move(d));
    }
    return p;
}

Rational Poly::operator()(const Rational& x0) const {
    Rational r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        r *= x0;
        r += coeffs_[i];
    }
    return r;
}

PolySeries::PolySeries(std::size_t order, std::vector<Poly> terms) : terms_(std::move(terms)) {
    if (terms_.size() != order + 1)
        throw std::invalid_argument("PolySeries: terms length must be order+1");
}

PolySeries PolySeries::unit(std::size_t order) {
    PolySeries s(order);
    s.terms_[0] = Poly(Rational(1));
    return s;
}

PolySeries series_mul(const PolySeries& a, const PolySeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series_mul: order mismatch");
    PolySeries out(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) {
        Poly t;
        for (std::size_t k = 0; k <= n; ++k)
            t += Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))) *
                 (a.term(k) * b.term(n - k));
        out.set_term(n, std::move(t));
    }
    return out;
}

PolySeries PolySeries::inverse() const {
    const Poly& head = terms_[0];
    if (head.degree() != 0)
        throw std::invalid_argument("series_inverse: constant term must be a nonzero constant");
    const Rational inv0 = Rational(1) / head.coeff(0);
    PolySeries out(order());
    out.terms_[0] = Poly(inv0);
    // sum_k C(n,k) a_k b_{n-k} = 0 for n >= 1, solved top-down for b_n.
    for (std::size_t n = 1; n <= order(); ++n) {
        Poly acc;
        for (std::size_t k = 1; k <= n; ++k)
            acc += Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))) *
                   (terms_[k] * out.terms_[n - k]);
        out.terms_[n] = -acc * inv0;
    }
    return out;
}

PolySeries PolySeries::pow(unsigned r) const {
    PolySeries out = unit(order());
    for (unsigned i = 0; i < r; ++i) out = series_mul(out, *this);
    return out;
}

PolySeries PolySeries::scaled(const Rational& c) const {
    PolySeries out(order());
    for (std::size_t k = 0; k <= order(); ++k) out.terms_[k] = terms_[k] * c;
    return out;
}

}  // namespace dfe
