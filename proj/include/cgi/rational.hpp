#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "cgi/errors.hpp"

namespace cgi {

using Int = boost::multiprecision::mpz_int;
// Always stored canonically: gcd(num, den) = 1, den >= 1 (maintained by GMP).
using Rational = boost::multiprecision::mpq_rational;

inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational b = base;
    if (e < 0) {
        if (is_zero(b)) throw MalformedInput("rational_pow: zero to a negative power");
        b = Rational(1) / b;
        e = -e;
    }
    Rational acc(1);
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

// Serialized form is "a" when the denominator is 1, "a/b" otherwise.
inline std::string to_string(const Rational& x) {
    const Int num = numerator(x);
    const Int den = denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw MalformedInput("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        const Int num(s.substr(0, slash));
        const Int den(s.substr(slash + 1));
        if (den == 0) throw MalformedInput("rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::exception&) {
        throw MalformedInput("bad rational literal: " + s);
    }
}

}  // namespace cgi
