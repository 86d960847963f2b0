#pragma once

#include <span>
#include <string>

#include "cgi/laurent.hpp"

namespace cgi {

// Element of the fraction field of Q[x1^{+-1},...,xr^{+-1}].
//
// For r <= 1 values are kept fully reduced (univariate gcd cancelled, monic
// denominator with minimal exponent 0), so equality is structural. For r > 1
// only the content and a monomial unit of the denominator are normalized and
// equality is decided by cross-multiplication.
class Frac {
public:
    Frac() : num_(0), den_(0, Rational(1)) {}
    explicit Frac(int nvars) : num_(nvars), den_(nvars, Rational(1)) {}
    Frac(int nvars, const Rational& c) : num_(nvars, c), den_(nvars, Rational(1)) {}
    Frac(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw MalformedInput("Frac: zero denominator");
        normalize();
    }
    explicit Frac(Laurent num) : num_(std::move(num)), den_(num_.vars(), Rational(1)) {
        normalize();
    }

    int vars() const { return num_.vars(); }
    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend Frac operator+(const Frac& a, const Frac& b) {
        return Frac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        return Frac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return Frac(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.is_zero()) throw MalformedInput("Frac: division by zero");
        return Frac(a.num_ * b.den_, a.den_ * b.num_);
    }
    Frac operator-() const {
        Frac out = *this;
        out.num_ = -out.num_;
        return out;
    }

    friend bool operator==(const Frac& a, const Frac& b) {
        if (a.num_.is_zero() || b.num_.is_zero()) return a.num_.is_zero() && b.num_.is_zero();
        if (a.vars() <= 1 && b.vars() <= 1) return a.num_ == b.num_ && a.den_ == b.den_;
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

    Rational eval(std::span<const Rational> point) const {
        const Rational d = den_.eval(point);
        if (cgi::is_zero(d)) throw MalformedInput("Frac::eval: denominator vanishes");
        return num_.eval(point) / d;
    }

private:
    void normalize() {
        const int r = num_.vars();
        if (num_.is_zero()) {
            den_ = Laurent(r, Rational(1));
            return;
        }
        if (r == 0) {
            num_ = Laurent(0, num_.constant_term() / den_.constant_term());
            den_ = Laurent(0, Rational(1));
            return;
        }
        if (r == 1) {
            const Laurent g = gcd_univar(num_, den_);
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
            // unit-normalize the denominator: monic, minimal exponent 0
            const int s = den_.lo_deg();
            const Rational lc = den_.shifted({-s}).coeff_at(den_.hi_deg() - s);
            den_ = den_.shifted({-s}) * (Rational(1) / lc);
            num_ = num_.shifted({-s}) * (Rational(1) / lc);
            return;
        }
        // r > 1: shift so den has min exponent 0, divide out den's content
        Laurent::Expo m = den_.min_expo();
        for (auto& x : m) x = -x;
        num_ = num_.shifted(m);
        den_ = den_.shifted(m);
        const Rational c = den_.content();
        num_ = num_ * (Rational(1) / c);
        den_ = den_ * (Rational(1) / c);
    }

    Laurent num_;
    Laurent den_;
};

inline bool is_zero(const Frac& a) { return a.is_zero(); }
inline Frac zero_like(const Frac& a) { return Frac(a.vars()); }
inline Frac one_like(const Frac& a) { return Frac(a.vars(), Rational(1)); }

inline std::string to_string(const Frac& a) {
    if (a.den() == Laurent(a.vars(), Rational(1))) return to_string(a.num());
    return "(" + to_string(a.num()) + ")/(" + to_string(a.den()) + ")";
}

}  // namespace cgi
