#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cgi/keystep.hpp"
#include "cgi/linalg.hpp"
#include "cgi/maschke.hpp"
#include "cgi/profiles.hpp"

using namespace cgi;

TEST_CASE("regular representation: permutation matrices and trace identity") {
    const auto p3 = FiniteGroupTable::cyclic(3);
    const auto reg = regular_rep(p3);
    CHECK(reg[0] == Matrix<Rational>::identity(3, Rational(1), Rational(0)));
    // generator acts as a 3-cycle
    CHECK(reg[1].at(0, 1) == Rational(1));
    CHECK(reg[1].at(1, 2) == Rational(1));
    CHECK(reg[1].at(2, 0) == Rational(1));
    // trace alpha(q) = |P| for q = e, 0 otherwise
    for (int q = 0; q < p3.n; ++q) {
        Rational tr(0);
        for (std::size_t i = 0; i < 3; ++i) tr += reg[static_cast<std::size_t>(q)].at(i, i);
        CHECK(tr == (q == p3.identity ? Rational(3) : Rational(0)));
    }
    // trivial group
    CHECK(regular_rep(FiniteGroupTable::trivial())[0].rows() == 1);
}

TEST_CASE("specialize: identity, generator monomial, multiplicativity") {
    const auto prof = make_profile("dihedral3");
    const auto& G = prof.group;
    const TensorRep rep = TensorRep::tautological(G);

    CHECK(rep.specialize(G.identity()) ==
          Matrix<Laurent>::identity(3, Laurent(1, Rational(1)), Laurent(1)));

    // g = t: inversion permutation matrix times x^1
    const auto st = rep.specialize(G.generators[0]);
    CHECK(st.at(0, 0) == Laurent::monomial(1, {1}, Rational(1)));
    CHECK(st.at(1, 2) == Laurent::monomial(1, {1}, Rational(1)));
    CHECK(st.at(1, 1).is_zero());

    // specialize(t^2) = specialize(t)^2
    const auto st2 = rep.specialize(ge_pow(G.generators[0], 2));
    CHECK(st2 == mul(st, st, Laurent(1)));
}

TEST_CASE("specialize is multiplicative on random words") {
    const auto prof = make_profile("swap22");
    const auto& G = prof.group;
    const TensorRep rep = TensorRep::tautological(G);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::size_t> letter(0, G.alphabet_size() - 1);
    std::uniform_int_distribution<int> exp(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::pair<int, int>> wa, wb;
        for (int i = 0; i < 3; ++i) {
            wa.emplace_back(static_cast<int>(letter(rng)), exp(rng));
            wb.emplace_back(static_cast<int>(letter(rng)), exp(rng));
        }
        const GroupElement a = G.eval_word(wa), b = G.eval_word(wb);
        CHECK(mul(rep.specialize(a), rep.specialize(b), Laurent(2)) == rep.specialize(a * b));
    }
}

TEST_CASE("induced representation: index 1 is the base, dimensions multiply") {
    const auto triv = make_profile("z");
    const auto cert1 = splitting_subgroup(triv.group);
    const TensorRep ind1 = TensorRep::induced(triv.group, cert1);
    CHECK(ind1.dim() == 1);
    CHECK(ind1.alpha(triv.group.generators[0]) == triv.group.generators[0].mat);

    const auto prof = make_profile("dihedral3");
    const auto cert = splitting_subgroup(prof.group);
    const TensorRep ind = TensorRep::induced(prof.group, cert);
    CHECK(ind.dim() == 3 * 2);
}

TEST_CASE("inducing the trivial representation of F x P swaps coordinates") {
    const auto prof = make_profile("dihedral3");
    const auto& G = prof.group;
    const auto cert = splitting_subgroup(G);
    const auto one = [](const GroupElement&) {
        return Matrix<Rational>::identity(1, Rational(1), Rational(0));
    };
    const TensorRep ind = TensorRep::induced_custom(G, cert, 1, one);
    CHECK(ind.dim() == 2);
    Matrix<Rational> swap(2, 2, Rational(0));
    swap.at(0, 1) = Rational(1);
    swap.at(1, 0) = Rational(1);
    CHECK(ind.alpha(G.generators[0]) == swap);
    CHECK(ind.alpha(G.identity()) == Matrix<Rational>::identity(2, Rational(1), Rational(0)));
}

TEST_CASE("theta/rho: dihedral-type splits Q[t] over Q[t^2] with basis {1, t}") {
    const auto prof = make_profile("dihedral3");
    const auto& G = prof.group;
    const auto cert = splitting_subgroup(G);

    // v = (1 + x, x^2, 0): even/odd split against coset monomials {1, x}
    LaurentVec v(3, Laurent(1));
    v[0] = Laurent(1, Rational(1)) + Laurent::monomial(1, {1}, Rational(1));
    v[1] = Laurent::monomial(1, {2}, Rational(1));
    const auto iv = rho_map(G, cert, v);
    CHECK(theta_map(G, cert, iv) == v);
    // block 0 collects the even parts
    CHECK(iv.blocks[0][0] == Laurent(1, Rational(1)));
    CHECK(iv.blocks[0][1] == Laurent::monomial(1, {2}, Rational(1)));

    std::vector<GroupElement> samples{G.generators[0], G.p_generators[0],
                                      G.generators[0] * G.p_generators[0]};
    CHECK(theta_rho_roundtrip(G, cert, samples, 2024, 50));
}

TEST_CASE("theta/rho: trivial group and rank-2 profile") {
    const auto z = make_profile("z");
    const auto certz = splitting_subgroup(z.group);
    CHECK(theta_rho_roundtrip(z.group, certz, {z.group.generators[0]}, 1, 10));

    const auto r2 = make_profile("dihedral3_rank2");
    const auto cert2 = splitting_subgroup(r2.group);
    std::vector<GroupElement> samples{r2.group.generators[0], r2.group.generators[1],
                                      r2.group.p_generators[0]};
    CHECK(theta_rho_roundtrip(r2.group, cert2, samples, 7, 25));
}

TEST_CASE("maschke: trivial isotypic component of Q[Z/3]") {
    const auto p3 = FiniteGroupTable::cyclic(3);
    // V = span(1 + g + g^2), the all-ones vector
    Matrix<Frac> basis(1, 3, Frac(0, Rational(1)));
    const auto w = maschke_complement(basis, p3, 3, 0);
    // complement of the trivial isotypic is the augmentation ideal
    CHECK(w.rows() == 2);
    for (std::size_t i = 0; i < w.rows(); ++i) {
        Frac sum(0);
        for (std::size_t j = 0; j < 3; ++j) sum = sum + w.at(i, j);
        CHECK(sum.is_zero());
    }
}

TEST_CASE("maschke: whole module and zero module") {
    const auto p3 = FiniteGroupTable::cyclic(3);
    const auto id = Matrix<Frac>::identity(3, Frac(0, Rational(1)), Frac(0));
    CHECK(maschke_complement(id, p3, 3, 0).rows() == 0);
    Matrix<Frac> empty(0, 3, Frac(0));
    CHECK(maschke_complement(empty, p3, 3, 0).rows() == 3);
}

TEST_CASE("maschke: klein four group over Q(t), and non-invariant input") {
    const auto v4 = FiniteGroupTable::direct_product(FiniteGroupTable::cyclic(2),
                                                     FiniteGroupTable::cyclic(2));
    Matrix<Frac> basis(1, 4, Frac(1, Rational(1)));
    const auto w = maschke_complement(basis, v4, 4, 1);
    CHECK(w.rows() == 3);

    // a coordinate line is not invariant under the regular action
    Matrix<Frac> bad(1, 4, Frac(1));
    bad.at(0, 0) = Frac(1, Rational(1));
    CHECK_THROWS_AS(maschke_complement(bad, v4, 4, 1), InvarianceViolation);
}

TEST_CASE("maschke: complement of a 2-block invariant subspace in Q[Z/3]^2") {
    const auto p3 = FiniteGroupTable::cyclic(3);
    // V = (all-ones, 0) + (0, all-ones) block diagonal inside Q[P]^2
    Matrix<Frac> basis(2, 6, Frac(0));
    for (std::size_t j = 0; j < 3; ++j) {
        basis.at(0, j) = Frac(0, Rational(1));
        basis.at(1, 3 + j) = Frac(0, Rational(1));
    }
    const auto w = maschke_complement(basis, p3, 6, 0);
    CHECK(w.rows() == 4);
}
