#include "cgi/splitting.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "cgi/automorphisms.hpp"
#include "cgi/errors.hpp"

namespace cgi {

namespace {

GroupElement comm(const GroupElement& a, const GroupElement& b) {
    return a * b * ge_inverse(a) * ge_inverse(b);
}

IntVec ambient_from_im(const ZBasis& im_phi, const IntVec& coords, std::size_t dim) {
    IntVec v(dim, 0);
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (std::size_t c = 0; c < dim; ++c) v[c] += coords[i] * im_phi.basis[i][c];
    return v;
}

Perm perm_pow(const Perm& p, long e) {
    Perm acc(p.size());
    std::iota(acc.begin(), acc.end(), 0);
    Perm base = p;
    for (long n = e; n > 0; n >>= 1) {
        if (n & 1) acc = perm_mul(acc, base);
        base = perm_mul(base, base);
    }
    return acc;
}

// subgroup of the table generated by the given indices
std::vector<int> table_closure(const FiniteGroupTable& t, std::vector<int> gens) {
    std::set<int> seen{t.identity};
    std::deque<int> todo{t.identity};
    for (const int g : gens)
        if (seen.insert(g).second) todo.push_back(g);
    while (!todo.empty()) {
        const int x = todo.front();
        todo.pop_front();
        std::vector<int> cur(seen.begin(), seen.end());
        for (const int y : cur) {
            for (const int z : {t.at(x, y), t.at(y, x), t.inv[static_cast<std::size_t>(x)]})
                if (seen.insert(z).second) todo.push_back(z);
        }
    }
    return {seen.begin(), seen.end()};
}

FiniteGroupTable subquotient_table(const FiniteGroupTable& t, const std::vector<int>& big,
                                   const std::vector<int>& small) {
    // coset of x in big modulo small, canonically the least member
    auto coset_rep = [&](int x) {
        int best = -1;
        for (const int s : small) {
            const int y = t.at(x, s);
            if (best < 0 || y < best) best = y;
        }
        return best;
    };
    std::vector<int> reps;
    for (const int x : big)
        if (coset_rep(x) == x) reps.push_back(x);
    FiniteGroupTable q;
    q.n = static_cast<int>(reps.size());
    q.mul.assign(reps.size() * reps.size(), 0);
    q.inv.assign(reps.size(), 0);
    auto idx_of = [&](int rep) {
        const auto it = std::lower_bound(reps.begin(), reps.end(), rep);
        return static_cast<int>(it - reps.begin());
    };
    q.identity = idx_of(coset_rep(t.identity));
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j)
            q.mul[i * reps.size() + j] = idx_of(coset_rep(t.at(reps[i], reps[j])));
    for (std::size_t i = 0; i < reps.size(); ++i)
        q.inv[i] = idx_of(coset_rep(t.inv[static_cast<std::size_t>(reps[i])]));
    q.verify();
    return q;
}

std::vector<long> abelian_invariants(const FiniteGroupTable& t) {
    if (t.n == 1) return {};
    for (int a = 0; a < t.n; ++a)
        for (int b = 0; b < t.n; ++b)
            if (t.at(a, b) != t.at(b, a))
                throw MalformedInput("abelian_invariants: group is not abelian");
    int best = t.identity, best_ord = 1;
    for (int x = 0; x < t.n; ++x) {
        const int o = t.order_of(x);
        if (o > best_ord) {
            best = x;
            best_ord = o;
        }
    }
    std::vector<int> all(static_cast<std::size_t>(t.n));
    std::iota(all.begin(), all.end(), 0);
    const FiniteGroupTable q = subquotient_table(t, all, table_closure(t, {best}));
    std::vector<long> out{static_cast<long>(best_ord)};
    for (const long d : abelian_invariants(q)) out.push_back(d);
    return out;
}

}  // namespace

std::string abelian_type(const FiniteGroupTable& t) {
    const auto inv = abelian_invariants(t);
    if (inv.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < inv.size(); ++i) {
        if (i) os << " x ";
        os << "Z/" << inv[i];
    }
    return os.str();
}

std::pair<std::size_t, IntVec> SplittingCertificate::coset_of(const IntVec& v) const {
    const auto coords = z_coords(im_phi, v);
    if (!coords) throw DecompositionError("h-vector outside im(phi)");
    const std::size_t j = quotient.rep_index(*coords);
    IntVec f = v;
    for (std::size_t c = 0; c < f.size(); ++c) f[c] -= coset_hvecs[j][c];
    return {j, f};
}

GroupElement SplittingCertificate::section_of(const IntVec& f) const {
    const auto z = z_solve(F_basis, f, f.size());
    if (!z) throw DecompositionError("vector outside F");
    GroupElement acc = identity_elt;
    for (std::size_t i = 0; i < sections.size(); ++i)
        if ((*z)[i] != 0) acc = acc * ge_pow(sections[i], (*z)[i]);
    return acc;
}

SplittingCertificate::Decomposition SplittingCertificate::decompose(const RealizedGroup& G,
                                                                    const GroupElement& g) const {
    const auto [j, f] = coset_of(g.h);
    const GroupElement b = g * ge_inverse(coset_reps[j]);
    const GroupElement q = ge_inverse(section_of(f)) * b;
    const auto qi = G.kernel_index(q);
    if (!qi) throw DecompositionError("element does not decompose over Psi(F x P)");
    return {f, *qi, j, b};
}

SplittingCertificate splitting_subgroup(const RealizedGroup& G) {
    SplittingCertificate cert;
    cert.im_phi = G.im_phi;
    cert.identity_elt = G.identity();
    const std::size_t rp = G.im_phi.basis.size();

    // inner automorphisms as permutations of kernel indices, with a
    // representative kernel element for each
    std::set<Perm> inner_set;
    std::vector<std::pair<Perm, int>> inner_with_elt;
    for (std::size_t qi = 0; qi < G.kernel.size(); ++qi) {
        Perm p = G.conj_perm(G.kernel[qi]);
        if (inner_set.insert(p).second) inner_with_elt.emplace_back(std::move(p), static_cast<int>(qi));
    }
    auto inner_correction = [&](const Perm& p) -> std::optional<int> {
        for (const auto& [ip, qi] : inner_with_elt)
            if (ip == p) return qi;
        return std::nullopt;
    };
    auto class_rep = [&](const Perm& p) {
        Perm best = p;
        for (const auto& ip : inner_set) best = std::min(best, perm_mul(ip, p));
        return best;
    };

    // conjugation classes of the lattice basis
    std::vector<GroupElement> basis_elts;
    std::vector<Perm> basis_perms;
    for (std::size_t i = 0; i < rp; ++i) {
        basis_elts.push_back(G.element_for_lattice(G.im_phi.basis[i]));
        basis_perms.push_back(G.conj_perm(basis_elts.back()));
    }

    // order of the image in Aut(P)/Inn(P)
    std::set<Perm> quotient_elems{class_rep(G.conj_perm(G.identity()))};
    std::deque<Perm> todo(quotient_elems.begin(), quotient_elems.end());
    while (!todo.empty()) {
        const Perm x = todo.front();
        todo.pop_front();
        for (const auto& a : basis_perms) {
            Perm y = class_rep(perm_mul(x, a));
            if (quotient_elems.insert(y).second) todo.push_back(std::move(y));
        }
    }
    const long n_quot = static_cast<long>(quotient_elems.size());

    // sublattice of im(phi)-coordinates acting by inner automorphisms
    IntMat l_rows;
    if (rp > 0) {
        IntVec c(rp, 0);
        for (;;) {
            Perm prod(G.kernel.size());
            std::iota(prod.begin(), prod.end(), 0);
            for (std::size_t i = 0; i < rp; ++i)
                if (c[i] != 0) prod = perm_mul(prod, perm_pow(basis_perms[i], c[i]));
            bool nonzero = std::any_of(c.begin(), c.end(), [](long x) { return x != 0; });
            if (nonzero && inner_set.count(prod)) l_rows.push_back(c);
            std::size_t i = 0;
            for (; i < rp; ++i) {
                if (++c[i] < n_quot) break;
                c[i] = 0;
            }
            if (i == rp) break;
        }
        for (std::size_t i = 0; i < rp; ++i) {
            IntVec e(rp, 0);
            e[i] = n_quot;
            l_rows.push_back(e);
        }
    }

    for (int attempt = 0;; ++attempt) {
        if (attempt > 4)
            throw SearchExhausted("splitting_subgroup: no commuting section system found");
        const ZBasis l_basis = z_row_basis(l_rows, rp);

        cert.F_basis.clear();
        cert.sections.clear();
        bool ok = true;
        long scale_needed = 1;
        for (const auto& row : l_basis.basis) {
            const IntVec f = ambient_from_im(G.im_phi, row, G.r);
            const GroupElement w = G.element_for_lattice(f);
            const auto qi = inner_correction(G.conj_perm(w));
            if (!qi) throw Falsification("splitting_subgroup: lattice class is not inner");
            cert.F_basis.push_back(f);
            cert.sections.push_back(ge_inverse(G.kernel[static_cast<std::size_t>(*qi)]) * w);
        }
        // sections must commute pairwise; otherwise scale the lattice by the
        // l.c.m. of the central commutator orders and retry
        for (std::size_t i = 0; i < cert.sections.size() && ok; ++i)
            for (std::size_t j = i + 1; j < cert.sections.size() && ok; ++j) {
                const GroupElement c = comm(cert.sections[i], cert.sections[j]);
                const auto ci = G.kernel_index(c);
                if (!ci) throw Falsification("splitting_subgroup: commutator outside P");
                if (*ci != 0) {
                    ok = false;
                    scale_needed = std::lcm(scale_needed,
                                            static_cast<long>(G.ptable.order_of(*ci)));
                }
            }
        if (ok) break;
        for (auto& row : l_rows)
            for (auto& x : row) x *= scale_needed;
    }

    // quotient and coset data in im(phi)-coordinates
    IntMat f_in_im;
    for (const auto& f : cert.F_basis) {
        const auto coords = z_coords(G.im_phi, f);
        if (!coords) throw Falsification("splitting_subgroup: F outside im(phi)");
        f_in_im.push_back(*coords);
    }
    cert.quotient = z_quotient(f_in_im, rp);
    cert.index = cert.quotient.index;
    for (const auto& rep : cert.quotient.reps) {
        const IntVec v = ambient_from_im(G.im_phi, rep, G.r);
        cert.coset_hvecs.push_back(v);
        cert.coset_reps.push_back(G.element_for_lattice(v));
    }

    verify_certificate(G, cert);
    return cert;
}

void verify_certificate(const RealizedGroup& G, const SplittingCertificate& cert) {
    if (cert.F_basis.size() != cert.sections.size())
        throw CertificateInvalid("certificate: basis/section size mismatch");
    for (std::size_t i = 0; i < cert.sections.size(); ++i) {
        if (cert.sections[i].h != cert.F_basis[i])
            throw CertificateInvalid("certificate: section h-vector differs from basis vector");
        for (const auto& q : G.kernel)
            if (cert.sections[i] * q != q * cert.sections[i])
                throw CertificateInvalid("certificate: section does not centralize P");
        for (std::size_t j = i + 1; j < cert.sections.size(); ++j)
            if (cert.sections[i] * cert.sections[j] != cert.sections[j] * cert.sections[i])
                throw CertificateInvalid("certificate: sections do not commute");
    }
    if (static_cast<long>(cert.coset_reps.size()) != cert.index)
        throw CertificateInvalid("certificate: coset count differs from index");
    if (!(cert.coset_reps.empty()) && cert.coset_reps[0] != G.identity())
        throw CertificateInvalid("certificate: t_0 is not the identity");

    // Psi(F x P) = ker(Gamma -> H -> H/F), checked on coset representatives:
    // every t_i * letter decomposes as b * t_j with b = psi(f) * q
    for (const auto& t : cert.coset_reps) {
        for (std::size_t id = 0; id < G.alphabet_size(); ++id) {
            const auto dec = cert.decompose(G, t * G.letter(id));
            (void)dec;
        }
    }

    // Psi injectivity on a small enumeration box
    const std::size_t rp = cert.F_basis.size();
    IntVec c(rp, -2);
    for (;;) {
        IntVec f(G.r, 0);
        for (std::size_t i = 0; i < rp; ++i)
            for (std::size_t k = 0; k < G.r; ++k) f[k] += c[i] * cert.F_basis[i][k];
        const GroupElement psi_f = cert.section_of(f);
        for (const auto& q : G.kernel) {
            if (psi_f * q == G.identity()) {
                const bool trivial =
                    std::all_of(f.begin(), f.end(), [](long x) { return x == 0; }) &&
                    q == G.identity();
                if (!trivial) throw CertificateInvalid("certificate: Psi is not injective");
            }
        }
        if (rp == 0) break;
        std::size_t i = 0;
        for (; i < rp; ++i) {
            if (++c[i] <= 2) break;
            c[i] = -2;
        }
        if (i == rp) break;
    }
}

std::vector<GroupElement> coset_representatives(const RealizedGroup& G,
                                                const SplittingCertificate& cert) {
    verify_certificate(G, cert);
    return cert.coset_reps;
}

DZpCertificate d_zp_certificate(const RealizedGroup& G) {
    DZpCertificate out;
    out.p = G.prime;
    out.top_desc = G.im_phi.basis.empty()
                       ? "trivial"
                       : "Z^" + std::to_string(G.im_phi.basis.size()) + " (free abelian)";
    std::vector<int> current(G.kernel.size());
    std::iota(current.begin(), current.end(), 0);
    const FiniteGroupTable& t = G.ptable;
    while (current.size() > 1) {
        // next term of the lower central series: [P, current]
        std::vector<int> gens;
        for (const int y : current)
            for (int x = 0; x < t.n; ++x) {
                const int c = t.at(t.at(x, y), t.at(t.inv[static_cast<std::size_t>(x)],
                                                    t.inv[static_cast<std::size_t>(y)]));
                if (c != t.identity) gens.push_back(c);
            }
        std::vector<int> next = table_closure(t, gens);
        if (next.size() >= current.size())
            throw CertificateInvalid("d_zp_certificate: lower central series does not descend");

        NormalSeriesLevel level;
        level.subgroup = next;
        level.quotient_order = static_cast<long>(current.size() / next.size());
        // abelian: commutators of the level land in the next term
        level.abelian = true;
        std::set<int> next_set(next.begin(), next.end());
        for (const int a : current)
            for (const int b : current) {
                const int c = t.at(t.at(a, b), t.at(t.inv[static_cast<std::size_t>(a)],
                                                    t.inv[static_cast<std::size_t>(b)]));
                if (!next_set.count(c)) level.abelian = false;
            }
        long q = level.quotient_order;
        while (q % G.prime == 0) q /= G.prime;
        level.p_power = (q == 1);
        level.quotient_desc = abelian_type(subquotient_table(t, current, next));
        if (!level.abelian || !level.p_power)
            throw CertificateInvalid("d_zp_certificate: quotient fails the series condition");
        out.levels.push_back(std::move(level));
        current = std::move(next);
    }
    out.verified = true;
    return out;
}

}  // namespace cgi
