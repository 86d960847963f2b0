#include "cgi/lattice.hpp"

#include <map>

namespace cgi {

namespace {

long floordiv(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

void axpy(IntVec& dst, long c, const IntVec& src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
}

}  // namespace

ZBasis z_row_basis(const IntMat& rows, std::size_t dim) {
    IntMat work = rows;
    IntMat tf(rows.size(), IntVec(rows.size(), 0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (work[i].size() != dim) throw MalformedInput("z_row_basis: dimension mismatch");
        tf[i][i] = 1;
    }
    ZBasis out;
    std::size_t top = 0;
    for (std::size_t col = 0; col < dim && top < work.size(); ++col) {
        // gcd-reduce the column below `top` by repeated remainder steps
        for (;;) {
            std::size_t best = work.size();
            for (std::size_t i = top; i < work.size(); ++i) {
                if (work[i][col] == 0) continue;
                if (best == work.size() ||
                    std::abs(work[i][col]) < std::abs(work[best][col]))
                    best = i;
            }
            if (best == work.size()) break;
            std::swap(work[top], work[best]);
            std::swap(tf[top], tf[best]);
            bool clean = true;
            for (std::size_t i = top + 1; i < work.size(); ++i) {
                if (work[i][col] == 0) continue;
                const long q = floordiv(work[i][col], work[top][col]);
                axpy(work[i], -q, work[top]);
                axpy(tf[i], -q, tf[top]);
                if (work[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (work[top][col] == 0) continue;
        if (work[top][col] < 0) {
            for (auto& x : work[top]) x = -x;
            for (auto& x : tf[top]) x = -x;
        }
        // reduce the rows above modulo the pivot
        for (std::size_t i = 0; i < top; ++i) {
            const long q = floordiv(work[i][col], work[top][col]);
            if (q != 0) {
                axpy(work[i], -q, work[top]);
                axpy(tf[i], -q, tf[top]);
            }
        }
        out.pivot_cols.push_back(col);
        ++top;
    }
    out.basis.assign(work.begin(), work.begin() + static_cast<long>(top));
    out.transform.assign(tf.begin(), tf.begin() + static_cast<long>(top));
    return out;
}

std::optional<IntVec> z_coords(const ZBasis& basis, const IntVec& v) {
    IntVec rem = v;
    IntVec coords(basis.basis.size(), 0);
    for (std::size_t i = 0; i < basis.basis.size(); ++i) {
        const std::size_t c = basis.pivot_cols[i];
        const long p = basis.basis[i][c];
        if (rem[c] % p != 0) return std::nullopt;
        const long q = rem[c] / p;
        coords[i] = q;
        axpy(rem, -q, basis.basis[i]);
    }
    for (long x : rem)
        if (x != 0) return std::nullopt;
    return coords;
}

std::optional<IntVec> z_solve(const IntMat& rows, const IntVec& target, std::size_t dim) {
    const ZBasis b = z_row_basis(rows, dim);
    const auto coords = z_coords(b, target);
    if (!coords) return std::nullopt;
    IntVec x(rows.size(), 0);
    for (std::size_t i = 0; i < coords->size(); ++i)
        axpy(x, (*coords)[i], b.transform[i]);
    return x;
}

IntVec ZQuotient::reduce(IntVec v) const {
    for (std::size_t i = 0; i < dim; ++i) {
        const long q = floordiv(v[i], hnf[i][i]);
        if (q != 0) axpy(v, -q, hnf[i]);
    }
    return v;
}

std::size_t ZQuotient::rep_index(const IntVec& v) const {
    const IntVec red = reduce(v);
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (reps[i] == red) return i;
    throw Falsification("ZQuotient: residue missing from enumeration");
}

bool ZQuotient::contains(const IntVec& v) const {
    const IntVec red = reduce(v);
    for (long x : red)
        if (x != 0) return false;
    return true;
}

ZQuotient z_quotient(const IntMat& sublattice_rows, std::size_t dim) {
    ZQuotient out;
    out.dim = dim;
    if (dim == 0) {
        out.index = 1;
        out.reps = {IntVec{}};
        return out;
    }
    const ZBasis b = z_row_basis(sublattice_rows, dim);
    if (b.basis.size() != dim)
        throw MalformedInput("z_quotient: sublattice is not of finite index");
    out.hnf = b.basis;
    out.index = 1;
    for (std::size_t i = 0; i < dim; ++i) out.index *= out.hnf[i][i];
    // residues: the box prod [0, d_i) is a transversal for a triangular basis
    IntVec v(dim, 0);
    for (;;) {
        out.reps.push_back(out.reduce(v));
        std::size_t i = 0;
        for (; i < dim; ++i) {
            if (++v[i] < out.hnf[i][i]) break;
            v[i] = 0;
        }
        if (i == dim) break;
    }
    if (static_cast<long>(out.reps.size()) != out.index)
        throw Falsification("z_quotient: residue count disagrees with index");
    return out;
}

}  // namespace cgi
