#include "cgi/keystep.hpp"

#include <random>

#include "cgi/errors.hpp"

namespace cgi {

namespace {

LaurentVec zero_vec(std::size_t k, int r) { return LaurentVec(k, Laurent(r)); }

// row vector times a rational matrix
LaurentVec vec_mat(const LaurentVec& v, const Matrix<Rational>& m) {
    LaurentVec out(m.cols(), Laurent(v.empty() ? 0 : v[0].vars()));
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Laurent acc(v.empty() ? 0 : v[0].vars());
        for (std::size_t i = 0; i < v.size(); ++i) acc = acc + v[i] * m.at(i, j);
        out[j] = acc;
    }
    return out;
}

Laurent monomial_of(const RealizedGroup& G, const IntVec& h, const Rational& c) {
    Laurent::Expo e(G.r);
    for (std::size_t i = 0; i < G.r; ++i) e[i] = static_cast<int>(h[i]);
    return Laurent::monomial(static_cast<int>(G.r), e, c);
}

}  // namespace

bool operator==(const InducedVector& a, const InducedVector& b) {
    return a.blocks == b.blocks;
}

LaurentVec qh_act(const TensorRep& rep, const LaurentVec& v, const GroupElement& g) {
    const Matrix<Laurent> s = rep.specialize(g);
    LaurentVec out(s.cols(), Laurent(static_cast<int>(rep.group().r)));
    for (std::size_t j = 0; j < s.cols(); ++j) {
        Laurent acc(static_cast<int>(rep.group().r));
        for (std::size_t i = 0; i < v.size(); ++i) acc = acc + v[i] * s.at(i, j);
        out[j] = acc;
    }
    return out;
}

LaurentVec theta_map(const RealizedGroup& G, const SplittingCertificate& cert,
                     const InducedVector& iv) {
    LaurentVec out = zero_vec(G.k, static_cast<int>(G.r));
    for (std::size_t i = 0; i < cert.coset_reps.size(); ++i) {
        const GroupElement& t = cert.coset_reps[i];
        const Laurent mono = monomial_of(G, t.h, Rational(1));
        const LaurentVec moved = vec_mat(iv.blocks[i], t.mat);
        for (std::size_t c = 0; c < G.k; ++c) out[c] = out[c] + moved[c] * mono;
    }
    return out;
}

InducedVector rho_map(const RealizedGroup& G, const SplittingCertificate& cert,
                      const LaurentVec& v) {
    if (v.size() != G.k) throw MalformedInput("rho_map: vector has wrong length");
    const std::size_t l = cert.coset_reps.size();
    InducedVector iv;
    iv.blocks.assign(l, zero_vec(G.k, static_cast<int>(G.r)));
    // split each coordinate over the basis {phi(t_i)}: b_ic gathers the
    // Q[F]-part of coordinate c lying in coset i
    for (std::size_t c = 0; c < G.k; ++c) {
        for (const auto& [e, coeff] : v[c].terms()) {
            IntVec h(e.begin(), e.end());
            const auto [i, f] = cert.coset_of(h);
            iv.blocks[i][c] = iv.blocks[i][c] + monomial_of(G, f, coeff);
        }
    }
    // then twist by alpha(t_i^{-1})
    for (std::size_t i = 0; i < l; ++i) {
        const auto inv = inverse(cert.coset_reps[i].mat);
        if (!inv) throw Falsification("rho_map: singular coset matrix");
        iv.blocks[i] = vec_mat(iv.blocks[i], *inv);
    }
    return iv;
}

InducedVector induced_act(const RealizedGroup& G, const SplittingCertificate& cert,
                          const InducedVector& iv, const GroupElement& g) {
    const std::size_t l = cert.coset_reps.size();
    InducedVector out;
    out.blocks.assign(l, zero_vec(G.k, static_cast<int>(G.r)));
    for (std::size_t i = 0; i < l; ++i) {
        const auto dec = cert.decompose(G, cert.coset_reps[i] * g);
        // w (x) t_i . g = w.(alpha(b) x^{phi(b)}) (x) t_j
        const Laurent mono = monomial_of(G, dec.b.h, Rational(1));
        const LaurentVec moved = vec_mat(iv.blocks[i], dec.b.mat);
        for (std::size_t c = 0; c < G.k; ++c)
            out.blocks[dec.j][c] = out.blocks[dec.j][c] + moved[c] * mono;
    }
    return out;
}

bool theta_rho_roundtrip(const RealizedGroup& G, const SplittingCertificate& cert,
                         const std::vector<GroupElement>& element_samples, std::uint64_t seed,
                         std::size_t trials) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-3, 3);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<std::size_t> nterm(1, 3);

    auto random_lattice_monomial = [&](const IntMat& basis, const IntVec& offset_rows_ambient) {
        IntVec v(G.r, 0);
        (void)offset_rows_ambient;
        for (const auto& row : basis) {
            const int c = coord(rng);
            for (std::size_t i = 0; i < G.r; ++i) v[i] += c * row[i];
        }
        return v;
    };
    auto random_qh_vec = [&]() {
        LaurentVec v = zero_vec(G.k, static_cast<int>(G.r));
        for (std::size_t c = 0; c < G.k; ++c) {
            const std::size_t terms = nterm(rng);
            for (std::size_t t = 0; t < terms; ++t) {
                const IntVec e = random_lattice_monomial(G.im_phi.basis, {});
                v[c].add_term(Laurent::Expo(e.begin(), e.end()), Rational(coeff(rng)));
            }
        }
        return v;
    };
    auto random_induced = [&]() {
        InducedVector iv;
        iv.blocks.assign(cert.coset_reps.size(), zero_vec(G.k, static_cast<int>(G.r)));
        for (auto& block : iv.blocks)
            for (std::size_t c = 0; c < G.k; ++c) {
                const std::size_t terms = nterm(rng);
                for (std::size_t t = 0; t < terms; ++t) {
                    const IntVec e = random_lattice_monomial(cert.F_basis, {});
                    block[c].add_term(Laurent::Expo(e.begin(), e.end()), Rational(coeff(rng)));
                }
            }
        return iv;
    };

    const TensorRep taut = TensorRep::tautological(G);
    for (std::size_t t = 0; t < trials; ++t) {
        const LaurentVec v = random_qh_vec();
        if (theta_map(G, cert, rho_map(G, cert, v)) != v) return false;
        const InducedVector iv = random_induced();
        if (rho_map(G, cert, theta_map(G, cert, iv)) != iv) return false;
        for (const auto& g : element_samples) {
            // theta preserves the right module structure
            if (theta_map(G, cert, induced_act(G, cert, iv, g)) !=
                qh_act(taut, theta_map(G, cert, iv), g))
                return false;
        }
    }
    return true;
}

}  // namespace cgi
