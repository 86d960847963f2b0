#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "cgi/automorphisms.hpp"
#include "cgi/profiles.hpp"
#include "cgi/splitting.hpp"

using namespace cgi;

namespace {

// brute-force count of invertible 2x2 matrices over F_2
int gl2_f2_order() {
    int count = 0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    if ((a * d + b * c) % 2 == 1) ++count;
    return count;
}

}  // namespace

TEST_CASE("build_realized_group: Gamma = Z with trivial kernel") {
    const auto prof = make_profile("z");
    CHECK(prof.group.kernel.size() == 1);
    CHECK(prof.group.ptable.n == 1);
    CHECK(prof.group.im_phi.basis.size() == 1);
}

TEST_CASE("build_realized_group: dihedral-type closure enumerates exactly Z/3") {
    const auto prof = make_profile("dihedral3");
    const auto& G = prof.group;
    CHECK(G.kernel.size() == 3);
    CHECK(G.k == 3);
    // A(h) R(q) A(h)^{-1} = R(action(q)) made alpha x phi faithful: check the
    // conjugation permutation of the generator is the inversion
    const Perm p = G.conj_perm(G.generators[0]);
    CHECK(p == Perm{0, 2, 1});
}

TEST_CASE("build_realized_group rejects kernels of the wrong order") {
    // regular representation of Z/6: order 6 is not a power of 3
    const auto p6 = FiniteGroupTable::cyclic(6);
    const auto reg = regular_rep(p6);
    CHECK_THROWS_AS(build_realized_group(6, 0, {}, {GroupElement{reg[1], {}}}, 3, 64),
                    HypothesisViolation);
    // and a cap that is too small reports non-finiteness
    const auto p9 = FiniteGroupTable::cyclic(9);
    const auto reg9 = regular_rep(p9);
    CHECK_THROWS_AS(build_realized_group(9, 0, {}, {GroupElement{reg9[1], {}}}, 3, 4),
                    KernelNotFinite);
}

TEST_CASE("h-vector projection is a homomorphism with kernel exactly P") {
    const auto prof = make_profile("dihedral3_rank2");
    const auto& G = prof.group;
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> letter(0, G.alphabet_size() - 1);
    std::uniform_int_distribution<int> exp(-2, 2);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<std::pair<int, int>> word;
        for (int i = 0; i < 5; ++i) word.emplace_back(static_cast<int>(letter(rng)), exp(rng));
        const GroupElement g = G.eval_word(word);
        IntVec sum(G.r, 0);
        for (const auto& [id, e] : word)
            for (std::size_t c = 0; c < G.r; ++c)
                sum[c] += e * G.letter(static_cast<std::size_t>(id)).h[c];
        CHECK(g.h == sum);
        const bool trivial_h = std::all_of(g.h.begin(), g.h.end(), [](long x) { return x == 0; });
        CHECK(trivial_h == G.kernel_index(g).has_value());
    }
}

TEST_CASE("automorphism groups by brute force") {
    CHECK(automorphism_group(FiniteGroupTable::trivial()).size() == 1);
    CHECK(automorphism_group(FiniteGroupTable::cyclic(3)).size() == 2);
    CHECK(automorphism_group(FiniteGroupTable::cyclic(9)).size() == 6);

    const auto v4 = FiniteGroupTable::direct_product(FiniteGroupTable::cyclic(2),
                                                     FiniteGroupTable::cyclic(2));
    const auto auts = automorphism_group(v4);
    CHECK(static_cast<int>(auts.size()) == gl2_f2_order());

    CHECK(automorphism_group(FiniteGroupTable::quaternion8()).size() == 24);

    CHECK_THROWS_AS(automorphism_group(FiniteGroupTable::cyclic(9), 8), TooLarge);
}

TEST_CASE("automorphism output is closed under composition and inverse") {
    const auto q8 = FiniteGroupTable::quaternion8();
    const auto auts = automorphism_group(q8);
    std::set<Perm> all(auts.begin(), auts.end());
    for (const auto& a : auts) {
        CHECK(all.count(perm_inv(a)) == 1);
        for (const auto& b : auts) CHECK(all.count(perm_mul(a, b)) == 1);
    }
}

TEST_CASE("splitting: dihedral-type certificate has F = 2Z of index 2") {
    const auto prof = make_profile("dihedral3");
    const auto& G = prof.group;
    const auto cert = splitting_subgroup(G);
    REQUIRE(cert.F_basis.size() == 1);
    CHECK(cert.F_basis[0] == IntVec{2});
    CHECK(cert.index == 2);
    // section is t^2 = (A^2, 2) = (Id, 2)
    CHECK(cert.sections[0] == ge_pow(G.generators[0], 2));
    // minimality: t itself does not centralize P, so index 1 is impossible
    bool t_centralizes = true;
    for (const auto& q : G.kernel)
        if (G.generators[0] * q != q * G.generators[0]) t_centralizes = false;
    CHECK_FALSE(t_centralizes);
    // the Remark's fallback bound l = |Aut(P)| is attained here
    CHECK(cert.index == static_cast<long>(automorphism_group(G.ptable).size()));

    const auto reps = coset_representatives(G, cert);
    REQUIRE(reps.size() == 2);
    CHECK(reps[0] == G.identity());
    CHECK(reps[1] == G.generators[0]);
}

TEST_CASE("splitting: trivial action gives index 1") {
    // Z x Z/3: generator acts trivially
    const auto p3 = FiniteGroupTable::cyclic(3);
    Perm id{0, 1, 2};
    const auto G = make_semidirect(p3, {id}, {1}, 3, 64);
    const auto cert = splitting_subgroup(G);
    CHECK(cert.index == 1);
    CHECK(cert.F_basis[0] == IntVec{1});
    CHECK(coset_representatives(G, cert) == std::vector<GroupElement>{G.identity()});
}

TEST_CASE("splitting: rank-2 lattice, both generators act by inversion") {
    const auto prof = make_profile("dihedral3_rank2");
    const auto cert = splitting_subgroup(prof.group);
    CHECK(cert.index == 2);
    // F = {(a,b) : a+b even}: both basis vectors have even coordinate sum
    for (const auto& row : cert.F_basis) CHECK((row[0] + row[1]) % 2 == 0);
    // (1,1) and (2,0) lie in F, (1,0) does not
    CHECK(cert.quotient.contains(*z_coords(cert.im_phi, {1, 1})));
    CHECK(cert.quotient.contains(*z_coords(cert.im_phi, {2, 0})));
    CHECK_FALSE(cert.quotient.contains(*z_coords(cert.im_phi, {1, 0})));
}

TEST_CASE("splitting: rank-0 group degenerates to index 1") {
    const auto prof = make_profile("cyclic9");
    const auto cert = splitting_subgroup(prof.group);
    CHECK(cert.index == 1);
    CHECK(cert.F_basis.empty());
    CHECK(cert.coset_reps.size() == 1);
}

TEST_CASE("splitting: unique decomposition over cosets on random words") {
    const auto prof = make_profile("swap22");
    const auto& G = prof.group;
    const auto cert = splitting_subgroup(G);
    CHECK(cert.index == 2);
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::size_t> letter(0, G.alphabet_size() - 1);
    std::uniform_int_distribution<int> exp(-2, 2);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::pair<int, int>> word;
        for (int i = 0; i < 4; ++i) word.emplace_back(static_cast<int>(letter(rng)), exp(rng));
        const GroupElement g = G.eval_word(word);
        const auto dec = cert.decompose(G, g);
        // g = psi(f) * q * t_j reassembles exactly
        const GroupElement re =
            cert.section_of(dec.f) * G.kernel[static_cast<std::size_t>(dec.q_index)] *
            cert.coset_reps[dec.j];
        CHECK(re == g);
    }
}

TEST_CASE("d_zp certificate: Z, dihedral-type, and a quaternion kernel") {
    const auto z = make_profile("z");
    auto c = d_zp_certificate(z.group);
    CHECK(c.verified);
    CHECK(c.levels.empty());
    CHECK(c.top_desc == "Z^1 (free abelian)");

    const auto d3 = make_profile("dihedral3");
    c = d_zp_certificate(d3.group);
    CHECK(c.verified);
    REQUIRE(c.levels.size() == 1);
    CHECK(c.levels[0].quotient_desc == "Z/3");
    CHECK(c.levels[0].abelian);
    CHECK(c.levels[0].p_power);

    // Z x Q8 with p = 2: lower central series Q8 > {1,-1} > 1
    const auto q8 = FiniteGroupTable::quaternion8();
    Perm id(8);
    std::iota(id.begin(), id.end(), 0);
    const auto G = make_semidirect(q8, {id}, minimal_generators(q8), 2, 64);
    CHECK(G.kernel.size() == 8);
    c = d_zp_certificate(G);
    CHECK(c.verified);
    REQUIRE(c.levels.size() == 2);
    CHECK(c.levels[0].quotient_desc == "Z/2 x Z/2");
    CHECK(c.levels[0].quotient_order == 4);
    CHECK(c.levels[1].quotient_desc == "Z/2");
}

TEST_CASE("semidirect conjugation identity") {
    // A(h) R(q) A(h)^{-1} = R(sigma_h(q)) for the swap action on (Z/2)^2
    const auto prof = make_profile("swap22");
    const auto& G = prof.group;
    const GroupElement& t = G.generators[0];
    for (std::size_t q = 0; q < G.kernel.size(); ++q) {
        const GroupElement lhs = t * G.kernel[q] * ge_inverse(t);
        const auto idx = G.kernel_index(lhs);
        REQUIRE(idx.has_value());
        // swap action: indices (a*2+b) -> (b*2+a)
        const Perm swap{0, 2, 1, 3};
        const GroupElement& rhs = G.kernel[static_cast<std::size_t>(
            swap[q])];
        CHECK(lhs == rhs);
    }
}
