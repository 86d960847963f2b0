#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cgi/errors.hpp"
#include "cgi/rational.hpp"

namespace cgi {

// Multivariate Laurent polynomial over Q: a finite map from exponent vectors
// in Z^r to nonzero rational coefficients. r = 0 degenerates to a rational.
class Laurent {
public:
    using Expo = std::vector<int>;
    using TermMap = std::map<Expo, Rational>;

    Laurent() : nvars_(0) {}
    explicit Laurent(int nvars) : nvars_(nvars) {}
    Laurent(int nvars, const Rational& c) : nvars_(nvars) {
        if (!cgi::is_zero(c)) terms_[Expo(static_cast<size_t>(nvars), 0)] = c;
    }

    static Laurent monomial(int nvars, Expo e, const Rational& c) {
        if (static_cast<int>(e.size()) != nvars)
            throw MalformedInput("Laurent::monomial: exponent arity mismatch");
        Laurent out(nvars);
        if (!cgi::is_zero(c)) out.terms_[std::move(e)] = c;
        return out;
    }

    int vars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() != 1) return false;
        const Expo& e = terms_.begin()->first;
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }
    Rational constant_term() const {
        const auto it = terms_.find(Expo(static_cast<size_t>(nvars_), 0));
        return it == terms_.end() ? Rational(0) : it->second;
    }
    bool is_monomial() const { return terms_.size() == 1; }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        Laurent out(joint_vars(a, b));
        out.terms_ = a.terms_;
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) {
        Laurent out(joint_vars(a, b));
        out.terms_ = a.terms_;
        for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
        return out;
    }
    Laurent operator-() const {
        Laurent out(nvars_);
        for (const auto& [e, c] : terms_) out.terms_[e] = -c;
        return out;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent out(joint_vars(a, b));
        Expo e(static_cast<size_t>(out.nvars_), 0);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }
    friend Laurent operator*(const Laurent& a, const Rational& c) {
        Laurent out(a.nvars_);
        if (cgi::is_zero(c)) return out;
        for (const auto& [e, cc] : a.terms_) out.terms_[e] = cc * c;
        return out;
    }
    friend Laurent operator*(const Rational& c, const Laurent& a) { return a * c; }

    friend bool operator==(const Laurent& a, const Laurent& b) {
        if (a.nvars_ != b.nvars_) {
            // zero compares equal across arities; anything else must match
            return a.terms_.empty() && b.terms_.empty();
        }
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    // Multiply by the monomial x^shift.
    Laurent shifted(const Expo& shift) const {
        if (static_cast<int>(shift.size()) != nvars_)
            throw MalformedInput("Laurent::shifted: arity mismatch");
        Laurent out(nvars_);
        for (const auto& [e, c] : terms_) {
            Expo ne = e;
            for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += shift[i];
            out.terms_[std::move(ne)] = c;
        }
        return out;
    }

    // Componentwise minimum exponent over the support; zero polynomial -> all 0.
    Expo min_expo() const {
        Expo m(static_cast<size_t>(nvars_), 0);
        bool first = true;
        for (const auto& [e, c] : terms_) {
            (void)c;
            if (first) { m = e; first = false; continue; }
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
        }
        return m;
    }

    Rational eval(std::span<const Rational> point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw MalformedInput("Laurent::eval: point arity mismatch");
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < e.size(); ++i) t *= rational_pow(point[i], e[i]);
            acc += t;
        }
        return acc;
    }

    // leading term in lex order (largest exponent vector); poly must be nonzero
    std::pair<Expo, Rational> leading() const {
        if (terms_.empty()) throw MalformedInput("Laurent::leading of zero");
        const auto it = std::prev(terms_.end());
        return {it->first, it->second};
    }

    // gcd of numerators / lcm of denominators, signed by the lex-leading coefficient
    Rational content() const {
        if (terms_.empty()) return Rational(0);
        Int g(0), l(1);
        for (const auto& [e, c] : terms_) {
            (void)e;
            g = gcd(g, Int(abs(numerator(c))));
            l = lcm(l, denominator(c));
        }
        Rational out(g, l);
        if (leading().second < 0) out = -out;
        return out;
    }

    // --- univariate accessors (vars() == 1) ---
    int lo_deg() const { return univar_deg(false); }
    int hi_deg() const { return univar_deg(true); }
    Rational coeff_at(int e) const {
        const auto it = terms_.find(Expo{e});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    static Laurent from_coeffs(const std::vector<Rational>& coeffs, int shift) {
        Laurent out(1);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (!cgi::is_zero(coeffs[i])) out.terms_[Expo{static_cast<int>(i) + shift}] = coeffs[i];
        return out;
    }

    void add_term(const Expo& e, const Rational& c) {
        if (cgi::is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (cgi::is_zero(it->second)) terms_.erase(it);
        }
    }

private:
    static int joint_vars(const Laurent& a, const Laurent& b) {
        if (a.nvars_ == b.nvars_) return a.nvars_;
        if (a.terms_.empty()) return b.nvars_;
        if (b.terms_.empty()) return a.nvars_;
        throw MalformedInput("Laurent: mixed variable counts");
    }
    int univar_deg(bool hi) const {
        if (nvars_ != 1) throw UnsupportedRing("Laurent: univariate accessor on r != 1");
        if (terms_.empty()) return 0;
        return hi ? std::prev(terms_.end())->first[0] : terms_.begin()->first[0];
    }

    int nvars_;
    TermMap terms_;
};

inline bool is_zero(const Laurent& a) { return a.is_zero(); }
inline Laurent zero_like(const Laurent& a) { return Laurent(a.vars()); }
inline Laurent one_like(const Laurent& a) { return Laurent(a.vars(), Rational(1)); }

std::string to_string(const Laurent& a);

// Exact quotient a / b in the Laurent ring; throws Falsification when the
// division is not exact (callers only use it where exactness is guaranteed).
Laurent exact_div(const Laurent& a, const Laurent& b);

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

// --- univariate (r = 1) helpers, used by the SNF and gcd kernels ---

// a = q*b + r with width(r) < width(b), all Laurent in one variable.
struct DivMod {
    Laurent quo, rem;
};
DivMod divmod_univar(const Laurent& a, const Laurent& b);

// monic gcd with minimal exponent 0 (the canonical generator in Q[t^{+-1}])
Laurent gcd_univar(const Laurent& a, const Laurent& b);

// strip the unit c*t^a: returns the normalization with min exponent 0 and
// leading coefficient 1; zero stays zero.
Laurent unit_normalize_univar(const Laurent& a);

}  // namespace cgi
