#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "starcore/error.hpp"

namespace starcore {

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator. GMP maintains the canonical form through arithmetic; values
// built from a numerator/denominator pair go through make_rational.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DivisionByZero();
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

} // namespace detail

// rational := ['-'] digits ['/' digits]
inline Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && s.front() == '-') {
        negative = true;
        s.remove_prefix(1);
    }
    std::string_view num = s;
    std::string_view den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!detail::all_digits(num) || !detail::all_digits(den))
        throw ParseError("malformed rational: '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline std::string format_rational(const Rational& q) {
    return q.get_str(10);
}

} // namespace starcore
