#pragma once

#include <optional>
#include <vector>

#include "cgi/fracfield.hpp"
#include "cgi/laurent.hpp"
#include "cgi/matrix.hpp"
#include "cgi/primefield.hpp"
#include "cgi/rational.hpp"

namespace cgi {

// Elimination pivoting is deterministic everywhere: first nonzero entry in
// column order, rows scanned top-down. OpenMP only parallelizes the row
// updates below a chosen pivot; those writes are disjoint, so parallel and
// serial kernels produce identical results.

template <class T>
std::size_t rank_gauss(Matrix<T> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pr = rank;
        while (pr < rows && is_zero(m.at(pr, col))) ++pr;
        if (pr == rows) continue;
        m.swap_rows(rank, pr);
        const T pivot = m.at(rank, col);
        std::exception_ptr eptr = nullptr;
#pragma omp parallel for schedule(dynamic) if (rows - rank > 8)
        for (long long ii = static_cast<long long>(rank) + 1;
             ii < static_cast<long long>(rows); ++ii) {
            try {
                const auto i = static_cast<std::size_t>(ii);
                if (is_zero(m.at(i, col))) continue;
                const T f = m.at(i, col) / pivot;
                for (std::size_t j = col; j < cols; ++j)
                    m.at(i, j) = m.at(i, j) - f * m.at(rank, j);
            } catch (...) {
#pragma omp critical
                eptr = std::current_exception();
            }
        }
        if (eptr) std::rethrow_exception(eptr);
        ++rank;
    }
    return rank;
}

// Fraction-free elimination over an integral domain (Bareiss one-step).
// Intermediate entries are minors of the input, so every division is exact.
template <class T>
std::size_t rank_bareiss(Matrix<T> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (m.empty()) return 0;
    std::size_t rank = 0;
    T prev = one_like(m.at(0, 0));
    const T zero = zero_like(m.at(0, 0));
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pr = rank;
        while (pr < rows && is_zero(m.at(pr, col))) ++pr;
        if (pr == rows) continue;
        m.swap_rows(rank, pr);
        std::exception_ptr eptr = nullptr;
#pragma omp parallel for schedule(dynamic) if (rows - rank > 4)
        for (long long ii = static_cast<long long>(rank) + 1;
             ii < static_cast<long long>(rows); ++ii) {
            try {
                const auto i = static_cast<std::size_t>(ii);
                for (std::size_t j = col + 1; j < cols; ++j)
                    m.at(i, j) = exact_div(
                        m.at(rank, col) * m.at(i, j) - m.at(i, col) * m.at(rank, j), prev);
                m.at(i, col) = zero;
            } catch (...) {
#pragma omp critical
                eptr = std::current_exception();
            }
        }
        if (eptr) std::rethrow_exception(eptr);
        prev = m.at(rank, col);
        ++rank;
    }
    return rank;
}

// Determinant by fraction-free elimination; square input.
template <class T>
T det_bareiss(Matrix<T> m) {
    if (m.rows() != m.cols()) throw MalformedInput("det: matrix not square");
    if (m.rows() == 0) throw MalformedInput("det: empty matrix");
    const std::size_t n = m.rows();
    T prev = one_like(m.at(0, 0));
    const T zero = zero_like(m.at(0, 0));
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pr = k;
        while (pr < n && is_zero(m.at(pr, k))) ++pr;
        if (pr == n) return zero;
        if (pr != k) {
            m.swap_rows(k, pr);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = exact_div(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
            m.at(i, k) = zero;
        }
        prev = m.at(k, k);
    }
    const T d = m.at(n - 1, n - 1);
    return negate ? zero - d : d;
}

// One exact solution of m·x = rhs (columns of rhs solved jointly), or nullopt.
template <class T>
std::optional<Matrix<T>> solve_linear(const Matrix<T>& m, const Matrix<T>& rhs) {
    if (m.rows() != rhs.rows()) throw MalformedInput("solve_linear: shape mismatch");
    const std::size_t rows = m.rows(), cols = m.cols(), rcols = rhs.cols();
    if (rows == 0) {
        Matrix<T> x;
        x.resize_raw(cols, rcols);
        if (cols > 0 && m.cols() > 0) { /* unreachable; rows==0 implies no entries */ }
        if (cols > 0 && rcols > 0) {
            // no constraints: the zero solution needs a typed zero
            throw MalformedInput("solve_linear: cannot type zero solution of empty system");
        }
        return x;
    }
    const T zero = zero_like(m.at(0, 0));
    Matrix<T> w(rows, cols + rcols, zero);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) w.at(i, j) = m.at(i, j);
        for (std::size_t j = 0; j < rcols; ++j) w.at(i, cols + j) = rhs.at(i, j);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pr = rank;
        while (pr < rows && is_zero(w.at(pr, col))) ++pr;
        if (pr == rows) continue;
        w.swap_rows(rank, pr);
        const T pivot = w.at(rank, col);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || is_zero(w.at(i, col))) continue;
            const T f = w.at(i, col) / pivot;
            for (std::size_t j = col; j < cols + rcols; ++j)
                w.at(i, j) = w.at(i, j) - f * w.at(rank, j);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t i = rank; i < rows; ++i)
        for (std::size_t j = 0; j < rcols; ++j)
            if (!is_zero(w.at(i, cols + j))) return std::nullopt;
    Matrix<T> x(cols, rcols, zero);
    for (std::size_t k = 0; k < rank; ++k)
        for (std::size_t j = 0; j < rcols; ++j)
            x.at(pivot_col[k], j) = w.at(k, cols + j) / w.at(k, pivot_col[k]);
    return x;
}

// Basis of {x : x·m = 0} as rows; (rows()-rank) many.
template <class T>
Matrix<T> left_kernel_basis(const Matrix<T>& m, const T& one, const T& zero) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Matrix<T> w(rows, cols + rows, zero);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) w.at(i, j) = m.at(i, j);
        w.at(i, cols + i) = one;
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pr = rank;
        while (pr < rows && is_zero(w.at(pr, col))) ++pr;
        if (pr == rows) continue;
        w.swap_rows(rank, pr);
        const T pivot = w.at(rank, col);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (is_zero(w.at(i, col))) continue;
            const T f = w.at(i, col) / pivot;
            for (std::size_t j = col; j < cols + rows; ++j)
                w.at(i, j) = w.at(i, j) - f * w.at(rank, j);
        }
        ++rank;
    }
    Matrix<T> basis(rows - rank, rows, zero);
    for (std::size_t i = rank; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j) basis.at(i - rank, j) = w.at(i, cols + j);
    return basis;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw MalformedInput("inverse: matrix not square");
    if (m.rows() == 0) return Matrix<T>();
    const T zero = zero_like(m.at(0, 0));
    const T one = one_like(m.at(0, 0));
    return solve_linear(m, Matrix<T>::identity(m.rows(), one, zero));
}

namespace serial {

template <class T>
std::size_t rank_gauss(Matrix<T> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pr = rank;
        while (pr < rows && is_zero(m.at(pr, col))) ++pr;
        if (pr == rows) continue;
        m.swap_rows(rank, pr);
        const T pivot = m.at(rank, col);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (is_zero(m.at(i, col))) continue;
            const T f = m.at(i, col) / pivot;
            for (std::size_t j = col; j < cols; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

template <class T>
std::size_t rank_bareiss(Matrix<T> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (m.empty()) return 0;
    std::size_t rank = 0;
    T prev = one_like(m.at(0, 0));
    const T zero = zero_like(m.at(0, 0));
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pr = rank;
        while (pr < rows && is_zero(m.at(pr, col))) ++pr;
        if (pr == rows) continue;
        m.swap_rows(rank, pr);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m.at(i, j) =
                    exact_div(m.at(rank, col) * m.at(i, j) - m.at(i, col) * m.at(rank, j), prev);
            m.at(i, col) = zero;
        }
        prev = m.at(rank, col);
        ++rank;
    }
    return rank;
}

}  // namespace serial

// Rank over the fraction field of the Laurent ring. r = 0 collapses to Q.
inline std::size_t rank_over_fraction_field(const Matrix<Laurent>& m) {
    if (m.empty()) return 0;
    if (m.at(0, 0).vars() == 0)
        return rank_gauss(m.map([](const Laurent& a) { return a.constant_term(); }));
    return rank_bareiss(m);
}

// matrix_rank: field scalars only (Rational, Fp, Frac).
inline std::size_t matrix_rank(const Matrix<Rational>& m) { return rank_gauss(m); }
inline std::size_t matrix_rank(const Matrix<Fp>& m) { return rank_gauss(m); }

// Frac entries: clear denominators columnwise, then fraction-free elimination.
inline std::size_t matrix_rank(const Matrix<Frac>& m) {
    if (m.empty()) return 0;
    const int r = m.at(0, 0).vars();
    Matrix<Laurent> cleared(m.rows(), m.cols(), Laurent(r));
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Laurent common(r, Rational(1));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const Laurent& d = m.at(i, j).den();
            common = (r == 1) ? exact_div(common * d, gcd_univar(common, d)) : common * d;
        }
        for (std::size_t i = 0; i < m.rows(); ++i)
            cleared.at(i, j) = m.at(i, j).num() * exact_div(common, m.at(i, j).den());
    }
    return rank_over_fraction_field(cleared);
}

// Evaluate a Laurent matrix at a point (coordinates must avoid the poles of
// negative exponents); used by the randomized evaluation cross-check.
inline std::optional<Matrix<Rational>> eval_matrix(const Matrix<Laurent>& m,
                                                   std::span<const Rational> point) {
    Matrix<Rational> out(m.rows(), m.cols(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).eval(point);
    return out;
}

inline std::optional<Matrix<Rational>> eval_matrix(const Matrix<Frac>& m,
                                                   std::span<const Rational> point) {
    Matrix<Rational> out(m.rows(), m.cols(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (is_zero(m.at(i, j).den().eval(point))) return std::nullopt;
            out.at(i, j) = m.at(i, j).eval(point);
        }
    return out;
}

}  // namespace cgi
