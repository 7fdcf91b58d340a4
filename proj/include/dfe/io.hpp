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

#ifndef DFE_IO_HPP
#define DFE_IO_HPP

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "dfe/identities.hpp"
#include "dfe/poly.hpp"
#include "dfe/representation.hpp"

namespace dfe {

using Json = nlohmann::ordered_json;

/// Polynomial as a JSON array of "num/den" strings, index = power.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// Parses "c0,c1,..." comma-separated ascending coefficients, "@file.json"
/// (JSON array form), or "-" for the same JSON read from stdin.
Poly parse_poly_input(const std::string& text);

Json expansion_to_json(const Expansion& e);
Json report_to_json(const IdentityReport& r);
Json params_to_json(const FamilyKind& kind);

/// "\frac{p}{q}" (plain integer when the denominator is 1).
std::string latex_rational(const Rational& q);

/// Descending powers, rationals as \frac{p}{q}, e.g. "x^{2} - \frac{1}{2} x".
std::string latex_poly(const Poly& p);

}  // namespace dfe

#endif
