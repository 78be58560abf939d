#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace flagheight {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using RationalVector = std::vector<Rational>;

/// "a/b" for non-integers, "a" otherwise. Always in lowest terms.
inline std::string to_string(const Rational& r) { return r.str(); }

/// Parses "a", "-a", "a/b". Throws ValidationError on malformed text or b == 0.
inline Rational parse_rational(std::string_view text) {
    auto bad = [&] { return ValidationError("malformed rational: '" + std::string(text) + "'"); };
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) throw bad();
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw bad();
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') throw bad();
        return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

inline Rational dot(const RationalVector& a, const RationalVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RationalVector to_rational(const std::vector<std::int64_t>& v) {
    return RationalVector(v.begin(), v.end());
}

/// p^n as an exact rational.
inline Rational rational_power(std::int64_t p, unsigned n) {
    BigInt r = 1;
    for (unsigned i = 0; i < n; ++i) r *= p;
    return Rational(r);
}

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace flagheight
