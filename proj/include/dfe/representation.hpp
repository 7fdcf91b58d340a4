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

#ifndef DFE_REPRESENTATION_HPP
#define DFE_REPRESENTATION_HPP

#include <string>
#include <vector>

#include "dfe/families.hpp"
#include "dfe/poly.hpp"

namespace dfe {

/// One of the equivalent coefficient formulas. LadderForm exists only for
/// the order-r expansions and requires r >= 1.
enum class FormulaVariant {
    OperatorForm,
    DeltaForm,
    BinomialSum,
    StirlingSum,
    LadderForm,
};

std::string variant_name(FormulaVariant v);
FormulaVariant parse_variant(const std::string& s);

/// A polynomial expressed in a family basis: p = sum_k coeffs[k] * member_k.
/// coeffs has length deg(p)+1; the zero polynomial yields the single
/// coefficient [0].
struct Expansion {
    FamilyKind kind;
    std::vector<Rational> coeffs;
};

/// Expansion of p in the h_{k,lambda}(x|u) basis (order 1).
Expansion represent_dfe(const Poly& p, const Rational& lambda, const Rational& u,
                        FormulaVariant variant);

/// Expansion of p in the degenerate Euler basis (the u = -1 specialization).
Expansion represent_de(const Poly& p, const Rational& lambda, FormulaVariant variant);

/// Expansion of p in the order-r basis h_{k,lambda}^{(r)}(x|u).
/// r = 0 yields the coefficients of p in the (x)_{k,lambda} basis.
Expansion represent_dfe_r(const Poly& p, const Rational& lambda, const Rational& u, unsigned r,
                          FormulaVariant variant);

/// Order-r degenerate Euler expansion (u = -1).
Expansion represent_de_r(const Poly& p, const Rational& lambda, unsigned r,
                         FormulaVariant variant);

/// Classical (lambda -> 0) Frobenius-Euler expansion of order r:
/// a_k = (1-u)^{-r} / k! * sum_j C(r,j)(-u)^{r-j} p^{(k)}(j).
Expansion represent_classical(const Poly& p, const Rational& u, unsigned r);

/// sum_k coeffs[k] * family member k, exact.
Poly reconstruct(const Expansion& e);

/// Independent change-of-basis route: upper-triangular back-substitution
/// against the family table. Valid for every kind here since member k has
/// degree k.
Expansion basis_convert_oracle(const Poly& p, const FamilyKind& kind);

}  // namespace dfe

#endif
