#pragma once

#include "cgi/fracfield.hpp"
#include "cgi/group.hpp"
#include "cgi/matrix.hpp"

namespace cgi {

// P-invariant complement of an invariant subspace V inside the free module
// F[P]^n (F the fraction field, module_dim = n * |P|), by averaging the
// coordinate projection onto V over the group: pi = (1/|P|) sum_q
// rho(q)^{-1} pi_0 rho(q). Rows of the result span W with V + W = total,
// V intersect W = 0, both P-stable. Throws InvarianceViolation when the
// input rows do not span an invariant subspace.
Matrix<Frac> maschke_complement(const Matrix<Frac>& submodule_basis, const FiniteGroupTable& P,
                                std::size_t module_dim, int nvars);

// Right multiplication by table element q on F[P]^n as a permutation matrix.
Matrix<Frac> maschke_action(const FiniteGroupTable& P, std::size_t n, int q, int nvars);

}  // namespace cgi
