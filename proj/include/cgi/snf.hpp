#pragma once

#include <optional>
#include <vector>

#include "cgi/laurent.hpp"
#include "cgi/matrix.hpp"

namespace cgi {

// Smith normal form over Q[t^{+-1}] (univariate Laurent polynomials, a PID
// whose units are c*t^a). invariants holds min(rows, cols) entries, the
// divisibility chain d_1 | d_2 | ... with unit-normalized nonzero entries
// first and zeros padded at the end. U tracks the row transform:
// U * M * V = diag(invariants) for some untracked unimodular V, and
// U * Uinv = I. The rows of U with index >= rank form a basis of the left
// kernel {x : x*M = 0}.
struct SnfResult {
    std::vector<Laurent> invariants;
    std::size_t rank = 0;
    Matrix<Laurent> U, Uinv;
};

SnfResult snf_univariate(const Matrix<Laurent>& m);

// dim_Q of coker(x -> x*M) in R^cols; nullopt when infinite-dimensional.
std::optional<std::size_t> cokernel_q_dim(const SnfResult& snf, std::size_t cols);

// Q-dimension of one homology group of a complex of free Q[t^{+-1}]-modules.
struct QDim {
    bool finite = true;
    std::size_t dim = 0;
};

// ranks: rank of C_0..C_n; d[i] is the matrix of d_{i+1}: C_{i+1} -> C_i
// (shape ranks[i+1] x ranks[i]) acting on row vectors from the right.
// Requires d_i of d_{i+1} to compose to zero; returns H_0..H_n.
std::vector<QDim> laurent_complex_homology(const std::vector<std::size_t>& ranks,
                                           const std::vector<Matrix<Laurent>>& d);

}  // namespace cgi
