#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace diffuse {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return numerator(q); }
inline BigInt den(const Rational& q) { return denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Parse "p/q" or "p". Throws on malformed input or q == 0.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt p(s.substr(0, slash)), q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rational(p, q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

inline std::string to_string(const Rational& q) {
    std::string s = num(q).str();
    if (!is_integer(q)) s += "/" + den(q).str();
    return s;
}

/// Largest integer with n^2 <= v (v >= 0).
inline BigInt isqrt_floor(const BigInt& v) {
    if (v < 0) throw std::domain_error("isqrt of negative");
    return boost::multiprecision::sqrt(v);
}

/// floor(p/q) for a rational, exact.
inline BigInt floor_int(const Rational& q) {
    BigInt n = num(q), d = den(q);
    BigInt t = n / d;
    if (n < 0 && n % d != 0) --t;
    return t;
}

inline BigInt ceil_int(const Rational& q) { return -floor_int(-q); }

/// Double approximation; exact when the value is a small dyadic.
inline double to_double(const Rational& q) {
    return q.convert_to<double>();
}

inline Rational pow_rational(Rational base, unsigned e) {
    Rational r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace diffuse
