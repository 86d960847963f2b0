#include "cgi/complex.hpp"

#include <numeric>

#include "cgi/errors.hpp"
#include "cgi/linalg.hpp"

namespace cgi {

void ChainComplex::validate() const {
    if (ranks.empty()) throw MalformedInput("chain complex: no degrees");
    if (boundaries.size() + 1 != ranks.size())
        throw MalformedInput("chain complex: boundary count mismatch");
    for (std::size_t i = 0; i < boundaries.size(); ++i)
        if (boundaries[i].rows() != ranks[i + 1] || boundaries[i].cols() != ranks[i])
            throw MalformedInput("chain complex: boundary shape mismatch at degree " +
                                 std::to_string(i + 1));
    for (std::size_t i = 0; i + 1 < boundaries.size(); ++i) {
        const GroupRingMatrix prod = boundaries[i + 1] * boundaries[i];
        for (std::size_t a = 0; a < prod.rows(); ++a)
            for (std::size_t b = 0; b < prod.cols(); ++b)
                if (!prod.at(a, b).is_zero())
                    throw MalformedInput("chain complex: d.d != 0 at degree " +
                                         std::to_string(i + 2));
    }
}

ChainComplex make_complex(const RealizedGroup& G, std::vector<std::size_t> ranks,
                          std::vector<GroupRingMatrix> boundaries) {
    ChainComplex c{&G, std::move(ranks), std::move(boundaries)};
    c.validate();
    return c;
}

namespace {

template <class T>
std::vector<std::size_t> dims_from_ranks(const std::vector<std::size_t>& ranks,
                                         const std::vector<Matrix<T>>& d, std::size_t k,
                                         std::size_t (*rank_fn)(const Matrix<T>&)) {
    const std::size_t n = ranks.size();
    std::vector<std::size_t> rk(n + 1, 0);
    for (std::size_t i = 0; i < d.size(); ++i) rk[i + 1] = rank_fn(d[i]);
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = ranks[i] * k - rk[i] - rk[i + 1];
    return out;
}

std::size_t rank_fp(const Matrix<Fp>& m) { return rank_gauss(m); }

}  // namespace

std::vector<std::size_t> homology_dims_fp(const ChainComplex& c, long p) {
    std::vector<Matrix<Fp>> d;
    d.reserve(c.boundaries.size());
    for (const auto& b : c.boundaries) d.push_back(augment_mod_p(b, p));
    return dims_from_ranks(c.ranks, d, 1, rank_fp);
}

std::vector<std::size_t> homology_dims_qh(const ChainComplex& c, const TensorRep& rep) {
    std::vector<Matrix<Laurent>> d;
    d.reserve(c.boundaries.size());
    for (const auto& b : c.boundaries) d.push_back(specialize_map(b, rep));
    return dims_from_ranks(c.ranks, d, rep.dim(), rank_over_fraction_field);
}

std::variant<Contraction, NotAcyclic> chain_contraction_mod_p(const ChainComplex& c, long p) {
    const std::size_t n = c.top_degree();
    const Fp zero(0, p), one(1, p);

    // B[i] = matrix of d_i: C_i -> C_{i-1} over F_p (B[0] unused)
    std::vector<Matrix<Fp>> B(n + 2);
    for (std::size_t i = 1; i <= n; ++i) B[i] = augment_mod_p(c.boundaries[i - 1], p);
    B[0] = Matrix<Fp>(c.ranks[0], 0, zero);
    B[n + 1] = Matrix<Fp>(0, c.ranks[n], zero);

    // acyclic over F_p <=> dim ker(d_i) = rank(d_{i+1}) in every degree
    std::vector<std::size_t> rho(n + 2, 0);
    for (std::size_t i = 1; i <= n; ++i) rho[i] = rank_gauss(B[i]);
    for (std::size_t i = 0; i <= n; ++i)
        if (c.ranks[i] - rho[i] != rho[i + 1]) return NotAcyclic{i};

    // independent row choices S_i with the images of e_{S_i} spanning im(d_i)
    std::vector<std::vector<std::size_t>> S(n + 2);
    for (std::size_t i = 1; i <= n; ++i) {
        Matrix<Fp> ech(rho[i], B[i].cols(), zero);
        std::size_t got = 0;
        for (std::size_t r = 0; r < B[i].rows() && got < rho[i]; ++r) {
            // copy row r, reduce against the echelon collected so far
            std::vector<Fp> v(B[i].cols(), zero);
            for (std::size_t j = 0; j < B[i].cols(); ++j) v[j] = B[i].at(r, j);
            for (std::size_t e = 0; e < got; ++e) {
                std::size_t lead = 0;
                while (lead < B[i].cols() && is_zero(ech.at(e, lead))) ++lead;
                if (lead == B[i].cols() || is_zero(v[lead])) continue;
                const Fp f = v[lead] / ech.at(e, lead);
                for (std::size_t j = 0; j < B[i].cols(); ++j)
                    v[j] = v[j] - f * ech.at(e, j);
            }
            bool nonzero = false;
            for (const auto& x : v) nonzero = nonzero || !is_zero(x);
            if (!nonzero) continue;
            for (std::size_t j = 0; j < B[i].cols(); ++j) ech.at(got, j) = v[j];
            S[i].push_back(r);
            ++got;
        }
    }

    // Z_i basis (kernel of B[i]); whole space at degree 0
    std::vector<Matrix<Fp>> Z(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        Z[i] = (i == 0) ? Matrix<Fp>::identity(c.ranks[0], one, zero)
                        : left_kernel_basis(B[i], one, zero);

    Contraction out;
    out.p = p;
    out.gamma.assign(n + 1, Matrix<Fp>());
    out.gamma[n] = Matrix<Fp>(c.ranks[n], 0, zero);

    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t dimz = Z[i].rows();
        // change of basis: rows of M are [Z_i; e_{S_i}]
        Matrix<Fp> M(c.ranks[i], c.ranks[i], zero);
        for (std::size_t r = 0; r < dimz; ++r)
            for (std::size_t j = 0; j < c.ranks[i]; ++j) M.at(r, j) = Z[i].at(r, j);
        for (std::size_t r = 0; r < S[i].size(); ++r) M.at(dimz + r, S[i][r]) = one;
        const auto Minv = inverse(M);
        if (!Minv) throw Falsification("contraction: basis change is singular");

        // z-part of each standard basis vector: first dimz columns of M^{-1}
        Matrix<Fp> zpart(c.ranks[i], c.ranks[i], zero);
        for (std::size_t t = 0; t < c.ranks[i]; ++t)
            for (std::size_t j = 0; j < c.ranks[i]; ++j) {
                Fp acc = zero;
                for (std::size_t s = 0; s < dimz; ++s)
                    acc = acc + Minv->at(t, s) * Z[i].at(s, j);
                zpart.at(t, j) = acc;
            }

        // sigma: solve zpart = C * B[i+1][S_{i+1}] and scatter into C_{i+1}
        Matrix<Fp> bsub(S[i + 1].size(), c.ranks[i], zero);
        for (std::size_t s = 0; s < S[i + 1].size(); ++s)
            for (std::size_t j = 0; j < c.ranks[i]; ++j)
                bsub.at(s, j) = B[i + 1].at(S[i + 1][s], j);
        const auto sol = solve_linear(bsub.transpose(), zpart.transpose());
        if (!sol) throw Falsification("contraction: cycle is not a boundary");
        out.gamma[i] = Matrix<Fp>(c.ranks[i], c.ranks[i + 1], zero);
        for (std::size_t t = 0; t < c.ranks[i]; ++t)
            for (std::size_t s = 0; s < S[i + 1].size(); ++s)
                out.gamma[i].at(t, S[i + 1][s]) = sol->at(s, t);
    }

    // exact identity check in every degree
    for (std::size_t i = 0; i <= n; ++i) {
        Matrix<Fp> id = Matrix<Fp>::identity(c.ranks[i], one, zero);
        Matrix<Fp> lhs(c.ranks[i], c.ranks[i], zero);
        if (i < n) lhs = lhs + mul(out.gamma[i], B[i + 1], zero);
        if (i > 0) lhs = lhs + mul(B[i], out.gamma[i - 1], zero);
        if (c.ranks[i] > 0 && lhs != id)
            throw Falsification("contraction identity d.gamma + gamma.d = Id failed");
    }
    return out;
}

std::vector<GroupRingMatrix> lift_contraction(const Contraction& gamma,
                                              const RealizedGroup& G) {
    std::vector<GroupRingMatrix> out;
    out.reserve(gamma.gamma.size());
    const GroupElement e = G.identity();
    for (const auto& g : gamma.gamma) {
        GroupRingMatrix lifted(&G, g.rows(), g.cols());
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j)
                if (!is_zero(g.at(i, j)))
                    lifted.at(i, j) = GroupRingElem::single(e, Rational(g.at(i, j).value()));
        out.push_back(std::move(lifted));
    }
    return out;
}

Prop41Report prop41_pipeline(const ChainComplex& c, const TensorRep& rep, long p) {
    Prop41Report rep41;

    std::size_t n_kernel = rep.group().kernel.size();
    while (n_kernel % static_cast<std::size_t>(p) == 0)
        n_kernel /= static_cast<std::size_t>(p);
    rep41.hypothesis_p_group = (n_kernel == 1);
    if (!rep41.hypothesis_p_group)
        throw HypothesisViolation("prop41_pipeline: kernel of the representation's group is not a " +
                                  std::to_string(p) + "-group");

    const auto contraction = chain_contraction_mod_p(c, p);
    if (std::holds_alternative<NotAcyclic>(contraction)) {
        rep41.acyclic_mod_p = false;
        rep41.failing_degree = std::get<NotAcyclic>(contraction).degree;
        return rep41;
    }
    rep41.acyclic_mod_p = true;
    const auto lifted = lift_contraction(std::get<Contraction>(contraction), *c.G);

    const std::size_t n = c.top_degree();
    // f_i = gamma~_i d_{i+1} + d_i gamma~_{i-1} : C_i -> C_i over Z[Gamma]
    std::vector<GroupRingMatrix> f(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        GroupRingMatrix acc(c.G, c.ranks[i], c.ranks[i]);
        if (i < n) acc = acc + lifted[i] * c.boundaries[i];
        if (i > 0) acc = acc + c.boundaries[i - 1] * lifted[i - 1];
        f[i] = std::move(acc);
    }

    rep41.eps_identity = true;
    for (std::size_t i = 0; i <= n; ++i) {
        const Matrix<Fp> eps = augment_mod_p(f[i], p);
        if (eps != Matrix<Fp>::identity(c.ranks[i], Fp(1, p), Fp(0, p)))
            rep41.eps_identity = false;
    }

    rep41.chain_map = true;
    for (std::size_t i = 1; i <= n; ++i) {
        // d_i f_{i-1} = f_i d_i as maps C_i -> C_{i-1}
        if (!(c.boundaries[i - 1] * f[i - 1] == f[i] * c.boundaries[i - 1]))
            rep41.chain_map = false;
    }
    if (!rep41.eps_identity || !rep41.chain_map)
        throw Falsification("prop41_pipeline: provable identity failed on f = d.gamma~ + gamma~.d");

    rep41.specialized_invertible.assign(n + 1, false);
    rep41.all_invertible = true;
    for (std::size_t i = 0; i <= n; ++i) {
        const Matrix<Laurent> s = specialize_map(f[i], rep);
        const bool inv = rank_over_fraction_field(s) == c.ranks[i] * rep.dim();
        rep41.specialized_invertible[i] = inv;
        rep41.all_invertible = rep41.all_invertible && inv;
    }

    rep41.qh_dims = homology_dims_qh(c, rep);
    rep41.homology_all_zero =
        std::all_of(rep41.qh_dims.begin(), rep41.qh_dims.end(),
                    [](std::size_t d) { return d == 0; });

    rep41.consistent = rep41.all_invertible == rep41.homology_all_zero;
    if (!rep41.consistent)
        throw Falsification("prop41_pipeline: invertibility route and direct rank route disagree");
    return rep41;
}

}  // namespace cgi
