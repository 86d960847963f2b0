#pragma once

#include <cstdint>
#include <vector>

#include "cgi/rep.hpp"

namespace cgi {

// Executable form of the module isomorphism
//   theta: (Q^k (x) Q[F]) (x)_{Z[FxP]} Z[Gamma]  ->  Q[H]^k,  p (x) g -> p.g
// with inverse rho built from the unique decomposition of Q[H] over the free
// Q[F]-basis {phi(t_i)}. Elements of the induced module are kept in the
// canonical form sum_i w_i (x) t_i with w_i in Q[F]^k.

using LaurentVec = std::vector<Laurent>;

struct InducedVector {
    std::vector<LaurentVec> blocks;  // one Q[F]^k row per coset representative
};

bool operator==(const InducedVector& a, const InducedVector& b);

// v . (alpha(g) x^{phi(g)}) on a Q[H]^k row vector
LaurentVec qh_act(const TensorRep& rep, const LaurentVec& v, const GroupElement& g);

LaurentVec theta_map(const RealizedGroup& G, const SplittingCertificate& cert,
                     const InducedVector& iv);

InducedVector rho_map(const RealizedGroup& G, const SplittingCertificate& cert,
                      const LaurentVec& v);

// right Z[Gamma]-action on the induced module in canonical form
InducedVector induced_act(const RealizedGroup& G, const SplittingCertificate& cert,
                          const InducedVector& iv, const GroupElement& g);

// Checks theta(rho(v)) = v, rho(theta(w)) = w, and theta-equivariance on
// `trials` pseudorandom samples (plus the supplied group elements for the
// equivariance check). Returns false only on an implementation bug.
bool theta_rho_roundtrip(const RealizedGroup& G, const SplittingCertificate& cert,
                         const std::vector<GroupElement>& element_samples, std::uint64_t seed,
                         std::size_t trials);

}  // namespace cgi
