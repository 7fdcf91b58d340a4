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

#ifndef DFE_IDENTITIES_HPP
#define DFE_IDENTITIES_HPP

#include <string>
#include <vector>

#include "dfe/poly.hpp"
#include "dfe/representation.hpp"

namespace dfe {

/// Parameters for an identity check; each identity reads the fields it needs.
struct IdentityParams {
    unsigned n = 2;
    unsigned m = 1;
    unsigned r = 1;
    Rational lambda{1};
    Rational u{2};
    Rational v{3};
};

/// Outcome of one exact identity check. holds iff discrepancy (lhs - rhs)
/// is the zero polynomial.
struct IdentityReport {
    std::string name;
    IdentityParams params;
    Poly lhs;
    Poly rhs;
    bool holds = false;
    Poly discrepancy;
};

IdentityReport make_report(std::string name, const IdentityParams& p, Poly lhs, Poly rhs);

/// The quadratic Bernoulli convolution identity (Miki/FPZ variant), n >= 2.
/// Both sides are built from Bernoulli polynomials, Bernoulli numbers, and
/// harmonic numbers; the check is exact polynomial equality.
IdentityReport check_miki_variant(unsigned n);

/// The classical identity cited in example (a)..(f), checked exactly.
IdentityReport sec5_classical(char name, const IdentityParams& p);

/// The degenerate re-expansion displayed in example (a)..(f): the
/// sum_k (1/(k! lambda^k)) {...} basis_k form, reconstructed through the
/// family tables and compared with the left-hand side.
IdentityReport sec5_degenerate(char name, const IdentityParams& p);

/// Runs both checks for one example; holds iff both hold.
IdentityReport check_sec5(char name, const IdentityParams& p);

/// Expansion of p*q in the given basis, cross-checked against the
/// triangular oracle (and, for order r >= 1 Frobenius-Euler kinds, against
/// the ladder route). Throws std::logic_error if the routes disagree.
Expansion expand_product_in_basis(const Poly& p, const Poly& q, const FamilyKind& kind);

}  // namespace dfe

#endif
