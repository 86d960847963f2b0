#pragma once

#include <string>

#include "cgi/errors.hpp"

namespace cgi {

// Element of F_p for a word-sized prime p. A default-constructed value is the
// "modulus-free" zero, absorbed into whichever field it first meets; this lets
// generic matrix code zero-fill before the modulus is known.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(long v, long p) : p_(p) {
        if (p <= 1) throw MalformedInput("Fp: modulus must be >= 2");
        v_ = v % p;
        if (v_ < 0) v_ += p;
    }

    long value() const { return v_; }
    long modulus() const { return p_; }

    friend bool is_zero(const Fp& a) { return a.v_ == 0; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        const long p = joint(a, b);
        if (p == 0) return Fp();
        return Fp(a.v_ + b.v_, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        const long p = joint(a, b);
        if (p == 0) return Fp();
        return Fp(a.v_ - b.v_, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        const long p = joint(a, b);
        if (p == 0) return Fp();
        return Fp(a.v_ * b.v_, p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    Fp operator-() const { return p_ == 0 ? Fp() : Fp(-v_, p_); }

    Fp inverse() const {
        if (p_ == 0 || v_ == 0) throw MalformedInput("Fp: division by zero");
        // extended Euclid
        long t = 0, nt = 1, r = p_, nr = v_;
        while (nr != 0) {
            const long q = r / nr;
            long tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        return Fp(t, p_);
    }

    friend bool operator==(const Fp& a, const Fp& b) {
        if (a.p_ == 0 || b.p_ == 0) return a.v_ == 0 && b.v_ == 0;
        return a.p_ == b.p_ && a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

private:
    // Common modulus; 0 means both operands are modulus-free zeros.
    static long joint(const Fp& a, const Fp& b) {
        if (a.p_ == 0) return b.p_;
        if (b.p_ == 0) return a.p_;
        if (a.p_ != b.p_) throw MalformedInput("Fp: mixed moduli");
        return a.p_;
    }

    long v_;
    long p_;
};

inline Fp zero_like(const Fp& a) { return a.modulus() ? Fp(0, a.modulus()) : Fp(); }
inline Fp one_like(const Fp& a) {
    if (a.modulus() == 0) throw MalformedInput("Fp: one_like of modulus-free zero");
    return Fp(1, a.modulus());
}
inline std::string to_string(const Fp& a) { return std::to_string(a.value()); }

}  // namespace cgi
