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

#ifndef DFE_RATIONAL_HPP
#define DFE_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dfe {

/// Exact arbitrary-precision rational, always reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// base^e with the convention 0^0 = 1.
Rational rational_pow(const Rational& base, unsigned e);

/// (-1)^e as a Rational.
inline Rational alt_sign(unsigned e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

/// Renders "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "p/q", or "-p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view s);

}  // namespace dfe

#endif
