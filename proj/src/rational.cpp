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

#include "dfe/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace dfe {

Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer c = 1;
    for (unsigned i = 0; i < k; ++i) {
        c *= n - i;
        c /= i + 1;  // exact at every step
    }
    return c;
}

Rational rational_pow(const Rational& base, unsigned e) {
    Rational r = 1;
    Rational b = base;
    while (e > 0) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string to_string(const Rational& q) {
    return q.str();
}

Rational parse_rational(std::string_view s) {
    auto bad = [&] { throw std::invalid_argument("malformed rational: '" + std::string(s) + "'"); };
    if (s.empty()) bad();
    const auto slash = s.find('/');
    auto check_int = [&](std::string_view part) {
        if (part.empty()) bad();
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) bad();
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) bad();
    };
    if (slash == std::string_view::npos) {
        check_int(s);
        return Rational(Integer(std::string(s)));
    }
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    Integer d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in rational: '" + std::string(s) + "'");
    Integer n{std::string(num)};
    return Rational(n) / Rational(d);
}

}  // namespace dfe
