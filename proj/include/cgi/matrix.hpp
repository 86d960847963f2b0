#pragma once

#include <cstddef>
#include <exception>
#include <utility>
#include <vector>

#include "cgi/errors.hpp"

namespace cgi {

// Dense matrix over one scalar kind. All kernels use deterministic scan
// orders, so results are reproducible regardless of thread count.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Matrix identity(std::size_t n, const T& one, const T& zero) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }

    Matrix transpose() const {
        if (empty()) {
            Matrix m;
            m.rows_ = cols_;
            m.cols_ = rows_;
            m.a_.clear();
            m.a_.resize(rows_ * cols_);
            return m;
        }
        Matrix m(cols_, rows_, a_[0]);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw MalformedInput("matrix add: shape mismatch");
        Matrix out = a;
        for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = out.a_[i] + b.a_[i];
        return out;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw MalformedInput("matrix sub: shape mismatch");
        Matrix out = a;
        for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = out.a_[i] - b.a_[i];
        return out;
    }

    template <class Fn>
    auto map(Fn&& fn) const -> Matrix<decltype(fn(std::declval<const T&>()))> {
        using U = decltype(fn(std::declval<const T&>()));
        Matrix<U> out;
        out.resize_raw(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = fn(at(i, j));
        return out;
    }

    // internal: allocate without a fill value (entries default-constructed)
    void resize_raw(std::size_t rows, std::size_t cols) {
        rows_ = rows;
        cols_ = cols;
        a_.assign(rows * cols, T());
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> a_;
};

// a*b with an explicit zero so empty inner dimensions are well defined
template <class T>
Matrix<T> mul(const Matrix<T>& a, const Matrix<T>& b, const T& zero) {
    if (a.cols() != b.rows()) throw MalformedInput("matrix mul: shape mismatch");
    Matrix<T> out(a.rows(), b.cols(), zero);
    std::exception_ptr eptr = nullptr;
#pragma omp parallel for schedule(dynamic) if (a.rows() * b.cols() > 16)
    for (long long i = 0; i < static_cast<long long>(a.rows()); ++i) {
        try {
            for (std::size_t k = 0; k < a.cols(); ++k) {
                const T& aik = a.at(static_cast<std::size_t>(i), k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols(); ++j)
                    out.at(static_cast<std::size_t>(i), j) =
                        out.at(static_cast<std::size_t>(i), j) + aik * b.at(k, j);
            }
        } catch (...) {
#pragma omp critical
            eptr = std::current_exception();
        }
    }
    if (eptr) std::rethrow_exception(eptr);
    return out;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() > 0 && a.cols() > 0) return mul(a, b, zero_like(a.at(0, 0)));
    if (b.rows() > 0 && b.cols() > 0) return mul(a, b, zero_like(b.at(0, 0)));
    Matrix<T> out;
    out.resize_raw(a.rows(), b.cols());
    return out;
}

namespace serial {

// reference multiply, kept for kernel cross-checks and the benchmark
template <class T>
Matrix<T> mul(const Matrix<T>& a, const Matrix<T>& b, const T& zero) {
    if (a.cols() != b.rows()) throw MalformedInput("matrix mul: shape mismatch");
    Matrix<T> out(a.rows(), b.cols(), zero);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a.at(i, k);
            if (is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) = out.at(i, j) + aik * b.at(k, j);
        }
    return out;
}

}  // namespace serial

}  // namespace cgi
