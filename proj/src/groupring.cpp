#include "cgi/groupring.hpp"

#include <random>

#include "cgi/errors.hpp"
#include "cgi/linalg.hpp"

namespace cgi {

bool GroupRingElem::is_integral() const {
    for (const auto& [g, c] : terms_) {
        (void)g;
        if (denominator(c) != 1) return false;
    }
    return true;
}

void GroupRingElem::add_term(const GroupElement& g, const Rational& c) {
    if (cgi::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (cgi::is_zero(it->second)) terms_.erase(it);
    }
}

GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b) {
    GroupRingElem out = a;
    for (const auto& [g, c] : b.terms_) out.add_term(g, c);
    return out;
}

GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b) {
    GroupRingElem out = a;
    for (const auto& [g, c] : b.terms_) out.add_term(g, -c);
    return out;
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
    GroupRingElem out;
    for (const auto& [ga, ca] : a.terms_)
        for (const auto& [gb, cb] : b.terms_) out.add_term(ga * gb, ca * cb);
    return out;
}

GroupRingElem GroupRingElem::operator-() const {
    GroupRingElem out;
    for (const auto& [g, c] : terms_) out.terms_[g] = -c;
    return out;
}

Rational GroupRingElem::augment() const {
    Rational acc(0);
    for (const auto& [g, c] : terms_) {
        (void)g;
        acc += c;
    }
    return acc;
}

Fp GroupRingElem::augment_mod(long p) const {
    const Rational a = augment();
    if (denominator(a) != 1)
        throw MalformedInput("augment_mod: non-integral coefficient sum");
    return Fp(static_cast<long>(numerator(a) % p), p);
}

GroupRingElem GroupRingElem::single(const GroupElement& g, const Rational& c) {
    GroupRingElem out;
    out.add_term(g, c);
    return out;
}

GroupRingMatrix GroupRingMatrix::identity(const RealizedGroup& G, std::size_t n) {
    GroupRingMatrix m(&G, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = GroupRingElem::single(G.identity());
    return m;
}

GroupRingMatrix operator*(const GroupRingMatrix& a, const GroupRingMatrix& b) {
    if (a.cols() != b.rows()) throw MalformedInput("group-ring matrix product: shape mismatch");
    GroupRingMatrix out(a.G_ ? a.G_ : b.G_, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) = out.at(i, j) + a.at(i, k) * b.at(k, j);
        }
    return out;
}

GroupRingMatrix operator+(const GroupRingMatrix& a, const GroupRingMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw MalformedInput("group-ring matrix sum: shape mismatch");
    GroupRingMatrix out(a.G_ ? a.G_ : b.G_, a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
    return out;
}

bool GroupRingMatrix::is_integral() const {
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j)
            if (!at(i, j).is_integral()) return false;
    return true;
}

Matrix<Rational> augment(const GroupRingMatrix& m) {
    Matrix<Rational> out(m.rows(), m.cols(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).augment();
    return out;
}

Matrix<Fp> augment_mod_p(const GroupRingMatrix& m, long p) {
    Matrix<Fp> out(m.rows(), m.cols(), Fp(0, p));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).augment_mod(p);
    return out;
}

Matrix<Laurent> specialize_map(const GroupRingMatrix& m, const TensorRep& rep) {
    const std::size_t k = rep.dim();
    const int r = static_cast<int>(rep.group().r);
    Matrix<Laurent> out(m.rows() * k, m.cols() * k, Laurent(r));
    std::exception_ptr eptr = nullptr;
#pragma omp parallel for collapse(2) schedule(dynamic) if (m.rows() * m.cols() > 4)
    for (long long i = 0; i < static_cast<long long>(m.rows()); ++i)
        for (long long j = 0; j < static_cast<long long>(m.cols()); ++j) {
            try {
                const auto& entry = m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                for (const auto& [g, c] : entry.terms()) {
                    const Matrix<Laurent> block = rep.specialize(g);
                    for (std::size_t a = 0; a < k; ++a)
                        for (std::size_t b = 0; b < k; ++b)
                            out.at(static_cast<std::size_t>(i) * k + a,
                                   static_cast<std::size_t>(j) * k + b) =
                                out.at(static_cast<std::size_t>(i) * k + a,
                                       static_cast<std::size_t>(j) * k + b) +
                                block.at(a, b) * c;
                }
            } catch (...) {
#pragma omp critical
                eptr = std::current_exception();
            }
        }
    if (eptr) std::rethrow_exception(eptr);
    return out;
}

bool injective_mod_p(const GroupRingMatrix& m, long p) {
    return rank_gauss(augment_mod_p(m, p)) == m.rows();
}

bool injective_over_qh(const GroupRingMatrix& m, const TensorRep& rep) {
    return rank_over_fraction_field(specialize_map(m, rep)) == m.rows() * rep.dim();
}

TheoremVerdict check_main_theorem(const GroupRingMatrix& m, const TensorRep& rep, long p) {
    TheoremVerdict v;
    std::size_t n = rep.group().kernel.size();
    while (n % static_cast<std::size_t>(p) == 0) n /= static_cast<std::size_t>(p);
    v.p_power = (n == 1);

    v.domain_rank_mod_p = m.rows();
    v.rank_mod_p = rank_gauss(augment_mod_p(m, p));
    v.eps_injective = v.rank_mod_p == v.domain_rank_mod_p;
    v.hypothesis_holds = v.p_power && v.eps_injective;

    v.domain_rank_qh = m.rows() * rep.dim();
    v.rank_qh = rank_over_fraction_field(specialize_map(m, rep));
    v.conclusion_holds = v.rank_qh == v.domain_rank_qh;

    v.consistent = !v.hypothesis_holds || v.conclusion_holds;
    return v;
}

GroupRingMatrix random_map(const RealizedGroup& G, std::size_t a, std::size_t b,
                           std::size_t support, long coeff_bound, std::uint64_t seed,
                           std::size_t max_retries) {
    if (a > b) throw MalformedInput("random_map: need rows <= cols for injectivity");
    if (support == 0 || coeff_bound <= 0) throw MalformedInput("random_map: empty support");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
    std::uniform_int_distribution<std::size_t> nterms(1, support);
    std::uniform_int_distribution<std::size_t> wlen(0, 3);
    std::uniform_int_distribution<int> sign(0, 1);
    const std::size_t nletters = G.alphabet_size();
    std::uniform_int_distribution<std::size_t> letter(0, nletters ? nletters - 1 : 0);

    for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
        GroupRingMatrix m(&G, a, b);
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = 0; j < b; ++j) {
                const std::size_t t = nterms(rng);
                for (std::size_t s = 0; s < t; ++s) {
                    GroupElement g = G.identity();
                    if (nletters > 0) {
                        const std::size_t len = wlen(rng);
                        for (std::size_t w = 0; w < len; ++w)
                            g = g * ge_pow(G.letter(letter(rng)), sign(rng) ? 1 : -1);
                    }
                    long c = coeff(rng);
                    if (c == 0) c = 1;
                    m.at(i, j).add_term(g, Rational(c));
                }
            }
        if (injective_mod_p(m, G.prime)) return m;
    }
    throw SearchExhausted("random_map: retry budget exhausted without mod-p injectivity");
}

}  // namespace cgi
