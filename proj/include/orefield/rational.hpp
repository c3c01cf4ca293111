/*
   Copyright 2026 The orefield Authors

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

#ifndef OREFIELD_RATIONAL_HPP
#define OREFIELD_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "error.hpp"

namespace orefield {

using Integer = mpz_class;
using Rational = mpq_class;

/// Accepts "p" or "p/q" with an optional leading sign; the result is canonical.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto valid = [](const std::string& part) {
        if (part.empty()) return false;
        std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size()) return false;
        for (std::size_t i = start; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+')
        throw Error(Errc::InvalidArgument, "malformed rational '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    Integer n(num), d(den);
    if (d == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator '" + s + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace orefield

#endif  // OREFIELD_RATIONAL_HPP
