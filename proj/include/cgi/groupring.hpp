#pragma once

#include <cstdint>
#include <map>

#include "cgi/group.hpp"
#include "cgi/primefield.hpp"
#include "cgi/rep.hpp"

namespace cgi {

// Finite formal sum of group elements with rational coefficients. Maps of
// free left modules Z[Gamma]^a -> Z[Gamma]^b are a x b matrices of these,
// acting on row vectors from the right, so composition is matrix product.
class GroupRingElem {
public:
    GroupRingElem() = default;

    const std::map<GroupElement, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_integral() const;

    void add_term(const GroupElement& g, const Rational& c);

    friend GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b);
    friend GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b);
    friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
    GroupRingElem operator-() const;
    friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const GroupRingElem& a, const GroupRingElem& b) { return !(a == b); }

    Rational augment() const;  // sum of coefficients
    Fp augment_mod(long p) const;

    static GroupRingElem single(const GroupElement& g, const Rational& c = Rational(1));

private:
    std::map<GroupElement, Rational> terms_;
};

class GroupRingMatrix {
public:
    GroupRingMatrix() = default;
    GroupRingMatrix(const RealizedGroup* G, std::size_t rows, std::size_t cols)
        : G_(G), m_(rows, cols, GroupRingElem()) {}

    static GroupRingMatrix identity(const RealizedGroup& G, std::size_t n);

    const RealizedGroup& group() const { return *G_; }
    std::size_t rows() const { return m_.rows(); }
    std::size_t cols() const { return m_.cols(); }
    GroupRingElem& at(std::size_t i, std::size_t j) { return m_.at(i, j); }
    const GroupRingElem& at(std::size_t i, std::size_t j) const { return m_.at(i, j); }

    friend GroupRingMatrix operator*(const GroupRingMatrix& a, const GroupRingMatrix& b);
    friend GroupRingMatrix operator+(const GroupRingMatrix& a, const GroupRingMatrix& b);
    friend bool operator==(const GroupRingMatrix& a, const GroupRingMatrix& b) {
        return a.m_ == b.m_;
    }

    bool is_integral() const;

private:
    const RealizedGroup* G_ = nullptr;
    Matrix<GroupRingElem> m_;
};

Matrix<Rational> augment(const GroupRingMatrix& m);
Matrix<Fp> augment_mod_p(const GroupRingMatrix& m, long p);

// Block substitution g -> alpha(g) * x^{phi(g)}: the (a*k) x (b*k) matrix of
// Id (x) f on Q[H]^k (x) Z[Gamma]^a, row-vector convention.
Matrix<Laurent> specialize_map(const GroupRingMatrix& m, const TensorRep& rep);

// Injectivity of the induced map on the F_p / Frac(Q[H]) shadows: full rank
// on the domain side.
bool injective_mod_p(const GroupRingMatrix& m, long p);
bool injective_over_qh(const GroupRingMatrix& m, const TensorRep& rep);

struct TheoremVerdict {
    bool p_power = false;        // |P| is a power of p
    bool eps_injective = false;  // Z_p (x) f injective
    bool hypothesis_holds = false;
    bool conclusion_holds = false;  // Q[H]^k (x) f injective
    bool consistent = false;        // !hypothesis || conclusion
    std::size_t rank_mod_p = 0, domain_rank_mod_p = 0;
    std::size_t rank_qh = 0, domain_rank_qh = 0;
};

TheoremVerdict check_main_theorem(const GroupRingMatrix& m, const TensorRep& rep, long p);

// Deterministic pseudorandom a x b map over Z[Gamma] with at most `support`
// short-word terms per entry and coefficients bounded by coeff_bound,
// resampled until the mod-p augmentation is injective (p from the group tag).
GroupRingMatrix random_map(const RealizedGroup& G, std::size_t a, std::size_t b,
                           std::size_t support, long coeff_bound, std::uint64_t seed,
                           std::size_t max_retries = 64);

}  // namespace cgi
