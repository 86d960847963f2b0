#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cgi/lattice.hpp"
#include "cgi/linalg.hpp"
#include "cgi/matrix.hpp"
#include "cgi/rational.hpp"

namespace cgi {

// An element of a realized group: a pair (invertible rational matrix, vector
// in Z^r). Equality is componentwise exact equality.
struct GroupElement {
    Matrix<Rational> mat;
    IntVec h;
};

GroupElement ge_identity(std::size_t k, std::size_t r);
GroupElement operator*(const GroupElement& a, const GroupElement& b);
GroupElement ge_inverse(const GroupElement& g);
GroupElement ge_pow(const GroupElement& g, long e);
bool operator==(const GroupElement& a, const GroupElement& b);
bool operator!=(const GroupElement& a, const GroupElement& b);
bool operator<(const GroupElement& a, const GroupElement& b);  // lex on (h, mat)

// Finite group as an explicit multiplication table.
struct FiniteGroupTable {
    int n = 1;
    std::vector<int> mul = {0};  // n*n row-major
    int identity = 0;
    std::vector<int> inv = {0};

    int at(int i, int j) const { return mul[static_cast<std::size_t>(i) * n + j]; }
    int order_of(int i) const;
    void verify() const;  // associativity, identity, inverses

    static FiniteGroupTable trivial();
    static FiniteGroupTable cyclic(int n);
    static FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b);
    static FiniteGroupTable quaternion8();
};

// Greedy small generating set (indices), deterministic.
std::vector<int> minimal_generators(const FiniteGroupTable& t);

// Permutations of {0..n-1} as index vectors.
using Perm = std::vector<int>;
Perm perm_mul(const Perm& a, const Perm& b);  // (a*b)(x) = a(b(x))
Perm perm_inv(const Perm& a);

// A finitely generated group realized inside GL(k,Q) x Z^r, with the finite
// kernel P of the projection to Z^r enumerated explicitly.
class RealizedGroup {
public:
    std::size_t k = 1, r = 0;
    long prime = 2;
    std::size_t cap = 64;
    std::vector<GroupElement> generators;    // named g1..gm
    std::vector<GroupElement> p_generators;  // named q1..qs, hvec = 0
    std::vector<GroupElement> kernel;        // P, kernel[0] = identity
    FiniteGroupTable ptable;                 // multiplication table of kernel
    ZBasis im_phi;                           // lattice image of the h-projection

    GroupElement identity() const { return ge_identity(k, r); }
    std::optional<int> kernel_index(const GroupElement& g) const;
    // conjugation action q -> g q g^{-1} as a permutation of kernel indices
    Perm conj_perm(const GroupElement& g) const;

    // word handling: ids 0..m-1 are generators, m..m+s-1 are p_generators
    std::size_t alphabet_size() const { return generators.size() + p_generators.size(); }
    const GroupElement& letter(std::size_t id) const;
    std::string letter_name(std::size_t id) const;
    std::optional<std::size_t> letter_id(const std::string& name) const;
    GroupElement eval_word(const std::vector<std::pair<int, int>>& word) const;

    // a preimage under the h-projection of a lattice vector in im(phi)
    GroupElement element_for_lattice(const IntVec& v) const;

    void rebuild_index();

private:
    std::map<GroupElement, int> kernel_idx_;
};

// Enumerates the kernel subgroup generated by p_generators, closed under
// multiplication, inverse and conjugation by the generators; verifies
// normality and that |P| is a power of `prime`.
RealizedGroup build_realized_group(std::size_t k, std::size_t r,
                                   std::vector<GroupElement> generators,
                                   std::vector<GroupElement> p_generators, long prime,
                                   std::size_t cap);

// Synthetic semidirect product Z^r acting on P: the i-th basis vector of Z^r
// acts by the commuting automorphisms action[i]; elements (q, h) are realized
// as R(q) * A(h) with R the right regular representation. P is generated by
// the table positions in p_gen_indices.
RealizedGroup make_semidirect(const FiniteGroupTable& P, const std::vector<Perm>& action,
                              const std::vector<int>& p_gen_indices, long prime,
                              std::size_t cap);

// Right regular representation matrices: R(q)[x][y] = 1 iff y = x*q.
std::vector<Matrix<Rational>> regular_rep(const FiniteGroupTable& t);

}  // namespace cgi
