#pragma once

#include <cstdlib>
#include <optional>
#include <vector>

#include "cgi/errors.hpp"

namespace cgi {

// Small exact integer-lattice utilities (rank, HNF, membership, quotients).
// Dimensions here are tiny (the rank r of H), so everything is plain long
// arithmetic with overflow-safe magnitudes by construction.

using IntVec = std::vector<long>;
using IntMat = std::vector<IntVec>;

struct ZBasis {
    IntMat basis;      // echelon basis rows (pivot columns strictly increasing)
    IntMat transform;  // transform[i] dot input rows = basis[i]
    std::vector<std::size_t> pivot_cols;
};

// Row-style echelon basis over Z of the lattice spanned by the input rows.
ZBasis z_row_basis(const IntMat& rows, std::size_t dim);

// Integer solution x of  x * rows = target  (row combination), if one exists.
std::optional<IntVec> z_solve(const IntMat& rows, const IntVec& target, std::size_t dim);

// Coordinates of v in an echelon basis (as produced by z_row_basis), if v lies
// in the lattice it spans.
std::optional<IntVec> z_coords(const ZBasis& basis, const IntVec& v);

// Z^dim modulo a full-rank sublattice: canonical residues and reduction.
struct ZQuotient {
    std::size_t dim = 0;
    IntMat hnf;     // full-rank, hnf[i] has pivot at column i, positive diagonal
    long index = 1; // product of the diagonal
    std::vector<IntVec> reps;

    IntVec reduce(IntVec v) const;
    std::size_t rep_index(const IntVec& v) const;  // index into reps of reduce(v)
    bool contains(const IntVec& v) const;          // v in the sublattice
};

ZQuotient z_quotient(const IntMat& sublattice_rows, std::size_t dim);

}  // namespace cgi
