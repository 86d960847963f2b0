#include "cgi/snf.hpp"

#include "cgi/errors.hpp"

namespace cgi {

namespace {

int width(const Laurent& a) { return a.is_zero() ? 0 : a.hi_deg() - a.lo_deg(); }

struct Worker {
    Matrix<Laurent> m, u, uinv;
    std::size_t rows, cols;

    explicit Worker(const Matrix<Laurent>& in)
        : m(in),
          u(Matrix<Laurent>::identity(in.rows(), Laurent(1, Rational(1)), Laurent(1))),
          uinv(u),
          rows(in.rows()),
          cols(in.cols()) {}

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        m.swap_rows(a, b);
        u.swap_rows(a, b);
        for (std::size_t i = 0; i < rows; ++i) std::swap(uinv.at(i, a), uinv.at(i, b));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap(m.at(i, a), m.at(i, b));
    }
    // row_i -= q * row_k
    void row_axpy(std::size_t i, std::size_t k, const Laurent& q) {
        if (q.is_zero()) return;
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = m.at(i, j) - q * m.at(k, j);
        for (std::size_t j = 0; j < rows; ++j) u.at(i, j) = u.at(i, j) - q * u.at(k, j);
        for (std::size_t j = 0; j < rows; ++j)
            uinv.at(j, k) = uinv.at(j, k) + q * uinv.at(j, i);
    }
    // col_j -= q * col_k (V untracked)
    void col_axpy(std::size_t j, std::size_t k, const Laurent& q) {
        if (q.is_zero()) return;
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = m.at(i, j) - q * m.at(i, k);
    }
    // row_i *= unit
    void scale_row(std::size_t i, const Laurent& unit) {
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = unit * m.at(i, j);
        for (std::size_t j = 0; j < rows; ++j) u.at(i, j) = unit * u.at(i, j);
        const Laurent inv = exact_div(Laurent(1, Rational(1)), unit);
        for (std::size_t j = 0; j < rows; ++j) uinv.at(j, i) = inv * uinv.at(j, i);
    }
};

}  // namespace

SnfResult snf_univariate(const Matrix<Laurent>& in) {
    for (std::size_t i = 0; i < in.rows(); ++i)
        for (std::size_t j = 0; j < in.cols(); ++j)
            if (!in.at(i, j).is_zero() && in.at(i, j).vars() != 1)
                throw UnsupportedRing("snf_univariate: entries must be univariate (r = 1)");

    Worker w(in);
    const std::size_t bound = std::min(w.rows, w.cols);
    std::size_t pos = 0;
    while (pos < bound) {
        // minimal-width nonzero entry of the trailing submatrix
        std::size_t bi = w.rows, bj = w.cols;
        for (std::size_t i = pos; i < w.rows; ++i)
            for (std::size_t j = pos; j < w.cols; ++j) {
                if (w.m.at(i, j).is_zero()) continue;
                if (bi == w.rows || width(w.m.at(i, j)) < width(w.m.at(bi, bj))) {
                    bi = i;
                    bj = j;
                }
            }
        if (bi == w.rows) break;
        w.swap_rows(pos, bi);
        w.swap_cols(pos, bj);

        for (;;) {
            bool restart = false;
            for (std::size_t i = 0; i < w.rows && !restart; ++i) {
                if (i == pos || w.m.at(i, pos).is_zero()) continue;
                const DivMod dm = divmod_univar(w.m.at(i, pos), w.m.at(pos, pos));
                w.row_axpy(i, pos, dm.quo);
                if (!w.m.at(i, pos).is_zero()) {
                    w.swap_rows(pos, i);  // remainder is strictly narrower
                    restart = true;
                }
            }
            if (restart) continue;
            for (std::size_t j = 0; j < w.cols && !restart; ++j) {
                if (j == pos || w.m.at(pos, j).is_zero()) continue;
                const DivMod dm = divmod_univar(w.m.at(pos, j), w.m.at(pos, pos));
                w.col_axpy(j, pos, dm.quo);
                if (!w.m.at(pos, j).is_zero()) {
                    w.swap_cols(pos, j);
                    restart = true;
                }
            }
            if (restart) continue;
            // pivot must divide the whole trailing submatrix
            for (std::size_t i = pos + 1; i < w.rows && !restart; ++i)
                for (std::size_t j = pos + 1; j < w.cols && !restart; ++j) {
                    if (w.m.at(i, j).is_zero()) continue;
                    if (!divmod_univar(w.m.at(i, j), w.m.at(pos, pos)).rem.is_zero()) {
                        w.row_axpy(pos, i, -Laurent(1, Rational(1)));  // row_pos += row_i
                        restart = true;
                    }
                }
            if (!restart) break;
        }
        ++pos;
    }

    // strip Laurent units: make each pivot monic with minimal exponent 0
    for (std::size_t k = 0; k < pos; ++k) {
        const Laurent& d = w.m.at(k, k);
        const Laurent lead =
            Laurent::monomial(1, {d.lo_deg()}, d.shifted({-d.lo_deg()}).coeff_at(width(d)));
        w.scale_row(k, exact_div(Laurent(1, Rational(1)), lead));
    }

    SnfResult out;
    out.rank = pos;
    out.U = std::move(w.u);
    out.Uinv = std::move(w.uinv);
    out.invariants.reserve(bound);
    for (std::size_t k = 0; k < bound; ++k)
        out.invariants.push_back(k < pos ? w.m.at(k, k) : Laurent(1));
    return out;
}

std::optional<std::size_t> cokernel_q_dim(const SnfResult& snf, std::size_t cols) {
    if (snf.rank < cols) return std::nullopt;
    std::size_t dim = 0;
    for (std::size_t k = 0; k < snf.rank; ++k)
        dim += static_cast<std::size_t>(width(snf.invariants[k]));
    return dim;
}

std::vector<QDim> laurent_complex_homology(const std::vector<std::size_t>& ranks,
                                           const std::vector<Matrix<Laurent>>& d) {
    const std::size_t n = ranks.size();
    if (d.size() + 1 != n) throw MalformedInput("laurent_complex_homology: shape mismatch");
    std::vector<QDim> out(n);
    const Laurent zero(1);
    for (std::size_t deg = 0; deg < n; ++deg) {
        if (ranks[deg] == 0) {
            out[deg] = {true, 0};
            continue;
        }
        // kernel of the outgoing map in coordinates given by SNF row transform
        std::size_t rank_out = 0;
        Matrix<Laurent> uinv;
        if (deg > 0) {
            const SnfResult s = snf_univariate(d[deg - 1]);
            rank_out = s.rank;
            uinv = s.Uinv;
        } else {
            uinv = Matrix<Laurent>::identity(ranks[0], Laurent(1, Rational(1)), zero);
        }
        const std::size_t kappa = ranks[deg] - rank_out;
        if (deg + 1 < n) {
            // express each image row of the incoming map over the kernel basis
            const Matrix<Laurent>& a = d[deg];
            Matrix<Laurent> z(ranks[deg + 1], kappa, zero);
            for (std::size_t r = 0; r < a.rows(); ++r) {
                for (std::size_t c = 0; c < ranks[deg]; ++c) {
                    Laurent acc(1);
                    for (std::size_t k = 0; k < ranks[deg]; ++k)
                        acc = acc + a.at(r, k) * uinv.at(k, c);
                    if (c < rank_out) {
                        if (!acc.is_zero())
                            throw Falsification(
                                "laurent_complex_homology: image not contained in kernel");
                    } else {
                        z.at(r, c - rank_out) = acc;
                    }
                }
            }
            const auto dim = cokernel_q_dim(snf_univariate(z), kappa);
            out[deg] = dim ? QDim{true, *dim} : QDim{false, 0};
        } else {
            out[deg] = kappa == 0 ? QDim{true, 0} : QDim{false, 0};
        }
    }
    return out;
}

}  // namespace cgi
