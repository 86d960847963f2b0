#pragma once

#include <variant>
#include <vector>

#include "cgi/groupring.hpp"
#include "cgi/snf.hpp"

namespace cgi {

// Finite free chain complex over Z[Gamma]. boundaries[i] is the matrix of
// d_{i+1}: C_{i+1} -> C_i (shape ranks[i+1] x ranks[i], row convention), so
// d compose d = 0 reads boundaries[i+1] * boundaries[i] = 0; this is checked
// exactly over Z[Gamma] at construction.
struct ChainComplex {
    const RealizedGroup* G = nullptr;
    std::vector<std::size_t> ranks;           // C_0..C_n
    std::vector<GroupRingMatrix> boundaries;  // size n

    std::size_t top_degree() const { return ranks.size() - 1; }
    void validate() const;  // shapes and d.d = 0
};

ChainComplex make_complex(const RealizedGroup& G, std::vector<std::size_t> ranks,
                          std::vector<GroupRingMatrix> boundaries);

// dim H_i with F_p coefficients through the augmentation, or with
// Frac(Q[H])^k coefficients through a representation.
std::vector<std::size_t> homology_dims_fp(const ChainComplex& c, long p);
std::vector<std::size_t> homology_dims_qh(const ChainComplex& c, const TensorRep& rep);

// Degreewise gamma_i: C_i -> C_{i+1} over F_p with d gamma + gamma d = Id.
struct Contraction {
    long p = 2;
    std::vector<Matrix<Fp>> gamma;  // gamma[i]: ranks[i] x ranks[i+1]; top entry empty
};

struct NotAcyclic {
    std::size_t degree = 0;
};

std::variant<Contraction, NotAcyclic> chain_contraction_mod_p(const ChainComplex& c, long p);

// Least-nonnegative-representative lift of each F_p entry times the identity
// group element; augment_mod_p of the result returns gamma.
std::vector<GroupRingMatrix> lift_contraction(const Contraction& gamma, const RealizedGroup& G);

struct Prop41Report {
    bool acyclic_mod_p = false;
    std::size_t failing_degree = 0;  // meaningful when !acyclic_mod_p
    bool hypothesis_p_group = false;
    bool eps_identity = false;
    bool chain_map = false;
    std::vector<bool> specialized_invertible;
    bool all_invertible = false;
    std::vector<std::size_t> qh_dims;
    bool homology_all_zero = false;
    bool consistent = false;  // the two acyclicity routes agree
};

// f = d gamma~ + gamma~ d; checks eps_p(f) = Id, d f = f d over Z[Gamma],
// invertibility of the specialization in every degree, and cross-validates
// against directly computed homology dimensions. Disagreement between the
// two routes throws Falsification.
Prop41Report prop41_pipeline(const ChainComplex& c, const TensorRep& rep, long p);

}  // namespace cgi
