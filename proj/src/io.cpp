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

#include "dfe/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace dfe {

Json poly_to_json(const Poly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
    if (p.is_zero()) arr.push_back("0");
    return arr;
}

Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<Rational> c;
    for (const auto& item : j) {
        if (item.is_number_integer())
            c.push_back(Rational(item.get<long long>()));
        else if (item.is_string())
            c.push_back(parse_rational(item.get<std::string>()));
        else
            throw std::invalid_argument("polynomial coefficients must be strings or integers");
    }
    return Poly(std::move(c));
}

Poly parse_poly_input(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty polynomial input");
    if (text == "-") {
        Json j;
        std::cin >> j;
        return poly_from_json(j);
    }
    if (text[0] == '@') {
        std::ifstream in(text.substr(1));
        if (!in) throw std::invalid_argument("cannot open polynomial file: " + text.substr(1));
        Json j;
        in >> j;
        return poly_from_json(j);
    }
    std::vector<Rational> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(parse_rational(item));
    return Poly(std::move(c));
}

Json params_to_json(const FamilyKind& kind) {
    Json p = Json::object();
    if (kind.uses_lambda()) p["lambda"] = to_string(kind.params.lambda);
    if (kind.uses_u()) p["u"] = to_string(kind.params.u);
    if (kind.uses_r()) p["r"] = kind.params.r;
    return p;
}

Json expansion_to_json(const Expansion& e) {
    Json j = Json::object();
    j["basis"] = e.kind.name();
    j["params"] = params_to_json(e.kind);
    Json coeffs = Json::array();
    for (const auto& c : e.coeffs) coeffs.push_back(to_string(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

Json report_to_json(const IdentityReport& r) {
    Json j = Json::object();
    j["identity"] = r.name;
    Json params = Json::object();
    params["n"] = r.params.n;
    params["m"] = r.params.m;
    params["r"] = r.params.r;
    params["lambda"] = to_string(r.params.lambda);
    params["u"] = to_string(r.params.u);
    params["v"] = to_string(r.params.v);
    j["params"] = std::move(params);
    j["holds"] = r.holds;
    j["lhs"] = poly_to_json(r.lhs);
    j["rhs"] = poly_to_json(r.rhs);
    if (!r.holds) j["discrepancy"] = poly_to_json(r.discrepancy);
    return j;
}

std::string latex_rational(const Rational& q) {
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    if (num < 0) return "-\\frac{" + Integer(-num).str() + "}{" + den.str() + "}";
    return "\\frac{" + num.str() + "}{" + den.str() + "}";
}

std::string latex_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& c = p.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        const Rational mag = c < 0 ? Rational(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const bool unit = (mag == 1);
        if (i == 0) {
            out += latex_rational(mag);
        } else {
            if (!unit) out += latex_rational(mag) + " ";
            out += (i == 1) ? "x" : "x^{" + std::to_string(i) + "}";
        }
    }
    return out;
}

}  // namespace dfe
