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

#include "dfe/representation.hpp"

#include <stdexcept>

#include "dfe/numbers.hpp"
#include "dfe/operators.hpp"

namespace dfe {

std::string variant_name(FormulaVariant v) {
    switch (v) {
        case FormulaVariant::OperatorForm: return "operator";
        case FormulaVariant::DeltaForm: return "delta";
        case FormulaVariant::BinomialSum: return "binomial";
        case FormulaVariant::StirlingSum: return "stirling";
        case FormulaVariant::LadderForm: return "ladder";
    }
    return "?";
}

FormulaVariant parse_variant(const std::string& s) {
    if (s == "operator") return FormulaVariant::OperatorForm;
    if (s == "delta") return FormulaVariant::DeltaForm;
    if (s == "binomial") return FormulaVariant::BinomialSum;
    if (s == "stirling") return FormulaVariant::StirlingSum;
    if (s == "ladder") return FormulaVariant::LadderForm;
    throw std::invalid_argument("unknown formula variant: '" + s + "'");
}

namespace {

void require_u_ne_1(const Rational& u) {
    if (u == 1) throw std::invalid_argument("u must not equal 1");
}

void require_lambda(const Rational& lambda, FormulaVariant variant) {
    // Only StirlingSum, where lambda enters as lambda^{l-k} with l >= k,
    // admits lambda = 0.
    if (lambda == 0 && variant != FormulaVariant::StirlingSum)
        throw std::invalid_argument("lambda must be nonzero for the " + variant_name(variant) +
                                    " variant");
}

unsigned expansion_len(const Poly& p) {
    return p.is_zero() ? 1u : static_cast<unsigned>(p.degree()) + 1u;
}

}  // namespace

Expansion represent_dfe(const Poly& p, const Rational& lambda, const Rational& u,
                        FormulaVariant variant) {
    require_u_ne_1(u);
    if (variant == FormulaVariant::LadderForm)
        throw std::invalid_argument("ladder variant applies to the order-r expansion only");
    require_lambda(lambda, variant);

    const unsigned len = expansion_len(p);
    const unsigned n = len - 1;
    const Rational one_minus_u = Rational(1) - u;
    std::vector<Rational> a(len);

    switch (variant) {
        case FormulaVariant::OperatorForm: {
            const Poly ap = p.shifted(1) - u * p;
            for (unsigned k = 0; k < len; ++k)
                a[k] = f_op(ap, lambda, k)(Rational(0)) / (one_minus_u * Rational(factorial(k)));
            break;
        }
        case FormulaVariant::DeltaForm: {
            // Decomposition a(x) = tilde(p)(x) - (1+u) p(x); note the
            // -(1+u) coefficient (it vanishes at u = -1, matching the
            // dedicated degenerate-Euler formula).
            const Poly tdp = tilde_diff(p, 1);
            for (unsigned k = 0; k < len; ++k) {
                const Rational num = forward_diff(tdp, lambda, k)(Rational(0)) -
                                     (Rational(1) + u) * forward_diff(p, lambda, k)(Rational(0));
                a[k] = num / (one_minus_u * Rational(factorial(k)) * rational_pow(lambda, k));
            }
            break;
        }
        case FormulaVariant::BinomialSum: {
            for (unsigned k = 0; k < len; ++k) {
                Rational acc = 0;
                for (unsigned j = 0; j <= k; ++j) {
                    const Rational jl = Rational(j) * lambda;
                    acc += Rational(binomial(k, j)) * alt_sign(k - j) *
                           (p(Rational(1) + jl) - u * p(jl));
                }
                a[k] = acc / (one_minus_u * Rational(factorial(k)) * rational_pow(lambda, k));
            }
            break;
        }
        case FormulaVariant::StirlingSum: {
            for (unsigned k = 0; k < len; ++k) {
                Rational acc = 0;
                for (unsigned l = k; l <= n; ++l) {
                    const Poly dl = p.derivative(l);
                    acc += stirling2(l, k) * rational_pow(lambda, l - k) / Rational(factorial(l)) *
                           (dl(Rational(1)) - u * dl(Rational(0)));
                }
                a[k] = acc / one_minus_u;
            }
            break;
        }
        case FormulaVariant::LadderForm:
            break;  // unreachable
    }
    return {FamilyKind::degenerate_frobenius_euler(lambda, u, 1), std::move(a)};
}

Expansion represent_de(const Poly& p, const Rational& lambda, FormulaVariant variant) {
    Expansion e = represent_dfe(p, lambda, Rational(-1), variant);
    e.kind = FamilyKind::degenerate_euler(lambda, 1);
    return e;
}

Expansion represent_dfe_r(const Poly& p, const Rational& lambda, const Rational& u, unsigned r,
                          FormulaVariant variant) {
    require_u_ne_1(u);
    if (variant == FormulaVariant::LadderForm && r == 0)
        throw std::invalid_argument("ladder variant requires r >= 1");
    require_lambda(lambda, variant);

    const unsigned len = expansion_len(p);
    const unsigned n = len - 1;
    const Rational inv_1mu_r = rational_pow(Rational(1) / (Rational(1) - u), r);
    std::vector<Rational> a(len);

    switch (variant) {
        case FormulaVariant::OperatorForm: {
            for (unsigned k = 0; k < len; ++k)
                a[k] = g_op(f_op(p, lambda, k), u, r)(Rational(0)) / Rational(factorial(k));
            break;
        }
        case FormulaVariant::DeltaForm: {
            for (unsigned k = 0; k < len; ++k) {
                const Poly dk = forward_diff(p, lambda, k);
                Rational acc = 0;
                for (unsigned j = 0; j <= r; ++j)
                    acc += Rational(binomial(r, j)) * rational_pow(-u, r - j) * dk(Rational(j));
                a[k] = acc * inv_1mu_r / (Rational(factorial(k)) * rational_pow(lambda, k));
            }
            break;
        }
        case FormulaVariant::BinomialSum: {
            for (unsigned k = 0; k < len; ++k) {
                Rational acc = 0;
                for (unsigned j = 0; j <= r; ++j)
                    for (unsigned l = 0; l <= k; ++l)
                        acc += Rational(binomial(r, j)) * Rational(binomial(k, l)) *
                               rational_pow(-u, r - j) * alt_sign(k - l) *
                               p(Rational(l) * lambda + Rational(j));
                a[k] = acc * inv_1mu_r / (Rational(factorial(k)) * rational_pow(lambda, k));
            }
            break;
        }
        case FormulaVariant::LadderForm: {
            for (unsigned k = 0; k < len; ++k) {
                Rational acc = 0;
                for (unsigned j = 0; j + 1 <= r; ++j) {
                    const Poly aj = p.shifted(Rational(j) + 1) - u * p.shifted(Rational(j));
                    acc += Rational(binomial(r - 1, j)) * rational_pow(-u, r - 1 - j) *
                           forward_diff(aj, lambda, k)(Rational(0));
                }
                a[k] = acc * inv_1mu_r / (Rational(factorial(k)) * rational_pow(lambda, k));
            }
            break;
        }
        case FormulaVariant::StirlingSum: {
            for (unsigned k = 0; k < len; ++k) {
                Rational acc = 0;
                for (unsigned l = k; l <= n; ++l) {
                    const Poly dl = p.derivative(l);
                    Rational inner = 0;
                    for (unsigned j = 0; j <= r; ++j)
                        inner += Rational(binomial(r, j)) * rational_pow(-u, r - j) *
                                 dl(Rational(j));
                    acc += rational_pow(lambda, l - k) / Rational(factorial(l)) *
                           stirling2(l, k) * inner;
                }
                a[k] = acc * inv_1mu_r;
            }
            break;
        }
    }
    return {FamilyKind::degenerate_frobenius_euler(lambda, u, r), std::move(a)};
}

Expansion represent_de_r(const Poly& p, const Rational& lambda, unsigned r,
                         FormulaVariant variant) {
    Expansion e = represent_dfe_r(p, lambda, Rational(-1), r, variant);
    e.kind = FamilyKind::degenerate_euler(lambda, r);
    return e;
}

Expansion represent_classical(const Poly& p, const Rational& u, unsigned r) {
    require_u_ne_1(u);
    const unsigned len = expansion_len(p);
    const Rational inv_1mu_r = rational_pow(Rational(1) / (Rational(1) - u), r);
    std::vector<Rational> a(len);
    for (unsigned k = 0; k < len; ++k) {
        const Poly dk = p.derivative(k);
        Rational acc = 0;
        for (unsigned j = 0; j <= r; ++j)
            acc += Rational(binomial(r, j)) * rational_pow(-u, r - j) * dk(Rational(j));
        a[k] = acc * inv_1mu_r / Rational(factorial(k));
    }
    return {FamilyKind::frobenius_euler(u, r), std::move(a)};
}

Poly reconstruct(const Expansion& e) {
    if (e.coeffs.empty()) throw std::invalid_argument("reconstruct: empty coefficient sequence");
    const auto table = family_table(e.kind, static_cast<unsigned>(e.coeffs.size() - 1));
    Poly acc;
    for (std::size_t k = 0; k < e.coeffs.size(); ++k) acc += e.coeffs[k] * table[k];
    return acc;
}

Expansion basis_convert_oracle(const Poly& p, const FamilyKind& kind) {
    kind.validate();
    const unsigned len = p.is_zero() ? 1u : static_cast<unsigned>(p.degree()) + 1u;
    const auto table = family_table(kind, len - 1);
    std::vector<Rational> a(len);
    Poly residual = p;
    for (unsigned k = len; k-- > 0;) {
        if (residual.degree() == static_cast<int>(k)) {
            a[k] = residual.coeff(k) / table[k].coeff(k);
            residual -= a[k] * table[k];
        }
    }
    if (!residual.is_zero())
        throw std::logic_error("basis_convert_oracle: residual did not vanish");
    return {kind, std::move(a)};
}

}  // namespace dfe
