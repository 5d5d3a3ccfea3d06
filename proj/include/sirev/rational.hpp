#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "sirev/errors.hpp"

namespace sirev {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

// Accepts "p/q", "p" or a signed decimal such as "-0.25" (converted exactly).
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw Error("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            if (den == 0) throw Error("zero denominator in '" + s + "'");
            return Rational(num, den);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(BigInt(s));
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        bool neg = false;
        if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
            neg = digits[0] == '-';
            digits.erase(0, 1);
        }
        // strip leading zeros: cpp_int would read "025" as octal
        size_t nz = digits.find_first_not_of('0');
        digits = (nz == std::string::npos) ? "0" : digits.substr(nz);
        BigInt den = 1;
        for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
        BigInt num(digits);
        return Rational(neg ? -num : num, den);
    } catch (const std::runtime_error&) {
        throw Error("bad rational literal '" + s + "'");
    }
}

inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

}  // namespace sirev
