#include "cgi/maschke.hpp"

#include "cgi/errors.hpp"
#include "cgi/linalg.hpp"

namespace cgi {

namespace {

// reduced row echelon rows with pivot columns, for membership tests
struct Echelon {
    Matrix<Frac> rows;
    std::vector<std::size_t> pivots;
};

Echelon echelonize(const Matrix<Frac>& basis, int nvars) {
    Echelon e{basis, {}};
    const Frac zero(nvars);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < e.rows.cols() && rank < e.rows.rows(); ++col) {
        std::size_t pr = rank;
        while (pr < e.rows.rows() && is_zero(e.rows.at(pr, col))) ++pr;
        if (pr == e.rows.rows()) continue;
        e.rows.swap_rows(rank, pr);
        const Frac pivot = e.rows.at(rank, col);
        for (std::size_t j = 0; j < e.rows.cols(); ++j)
            e.rows.at(rank, j) = e.rows.at(rank, j) / pivot;
        for (std::size_t i = 0; i < e.rows.rows(); ++i) {
            if (i == rank || is_zero(e.rows.at(i, col))) continue;
            const Frac f = e.rows.at(i, col);
            for (std::size_t j = 0; j < e.rows.cols(); ++j)
                e.rows.at(i, j) = e.rows.at(i, j) - f * e.rows.at(rank, j);
        }
        e.pivots.push_back(col);
        ++rank;
    }
    if (rank != e.rows.rows()) {
        Matrix<Frac> trimmed(rank, e.rows.cols(), zero);
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = 0; j < e.rows.cols(); ++j) trimmed.at(i, j) = e.rows.at(i, j);
        e.rows = std::move(trimmed);
    }
    return e;
}

bool in_span(const Echelon& e, std::vector<Frac> v) {
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
        const Frac c = v[e.pivots[k]];
        if (is_zero(c)) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] = v[j] - c * e.rows.at(k, j);
    }
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

}  // namespace

Matrix<Frac> maschke_action(const FiniteGroupTable& P, std::size_t n, int q, int nvars) {
    const auto np = static_cast<std::size_t>(P.n);
    Matrix<Frac> m(n * np, n * np, Frac(nvars));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t x = 0; x < np; ++x)
            m.at(a * np + x, a * np + static_cast<std::size_t>(P.at(static_cast<int>(x), q))) =
                Frac(nvars, Rational(1));
    return m;
}

Matrix<Frac> maschke_complement(const Matrix<Frac>& submodule_basis, const FiniteGroupTable& P,
                                std::size_t module_dim, int nvars) {
    P.verify();
    if (module_dim % static_cast<std::size_t>(P.n) != 0)
        throw MalformedInput("maschke_complement: dimension not a multiple of |P|");
    const std::size_t n = module_dim / static_cast<std::size_t>(P.n);
    if (submodule_basis.rows() > 0 && submodule_basis.cols() != module_dim)
        throw MalformedInput("maschke_complement: basis width differs from module dimension");

    const Frac zero(nvars), one(nvars, Rational(1));
    const Echelon ech = echelonize(submodule_basis, nvars);
    const std::size_t dim_v = ech.pivots.size();

    std::vector<Matrix<Frac>> actions;
    for (int q = 0; q < P.n; ++q) actions.push_back(maschke_action(P, n, q, nvars));

    // invariance of V under every group element
    for (int q = 0; q < P.n; ++q)
        for (std::size_t i = 0; i < ech.rows.rows(); ++i) {
            std::vector<Frac> image(module_dim, zero);
            for (std::size_t j = 0; j < module_dim; ++j) {
                Frac acc = zero;
                for (std::size_t c = 0; c < module_dim; ++c)
                    acc = acc + ech.rows.at(i, c) * actions[static_cast<std::size_t>(q)].at(c, j);
                image[j] = acc;
            }
            if (!in_span(ech, std::move(image)))
                throw InvarianceViolation("maschke_complement: input span is not P-invariant");
        }

    // coordinate projection onto V from the echelon pivots
    Matrix<Frac> pi0(module_dim, module_dim, zero);
    for (std::size_t k = 0; k < dim_v; ++k)
        for (std::size_t j = 0; j < module_dim; ++j) pi0.at(ech.pivots[k], j) = ech.rows.at(k, j);

    Matrix<Frac> avg(module_dim, module_dim, zero);
    for (int q = 0; q < P.n; ++q) {
        const auto qs = static_cast<std::size_t>(q);
        const auto qinv = static_cast<std::size_t>(P.inv[qs]);
        avg = avg + mul(mul(actions[qinv], pi0, zero), actions[qs], zero);
    }
    const Frac scale = one / Frac(nvars, Rational(P.n));
    for (std::size_t i = 0; i < module_dim; ++i)
        for (std::size_t j = 0; j < module_dim; ++j) avg.at(i, j) = avg.at(i, j) * scale;

    Matrix<Frac> w = left_kernel_basis(avg, one, zero);
    if (w.rows() + dim_v != module_dim)
        throw Falsification("maschke_complement: dimensions do not add up");

    // W is P-stable and V + W is everything
    const Echelon wech = echelonize(w, nvars);
    for (int q = 0; q < P.n; ++q)
        for (std::size_t i = 0; i < w.rows(); ++i) {
            std::vector<Frac> image(module_dim, zero);
            for (std::size_t j = 0; j < module_dim; ++j) {
                Frac acc = zero;
                for (std::size_t c = 0; c < module_dim; ++c)
                    acc = acc + w.at(i, c) * actions[static_cast<std::size_t>(q)].at(c, j);
                image[j] = acc;
            }
            if (!in_span(wech, std::move(image)))
                throw Falsification("maschke_complement: complement is not P-stable");
        }
    Matrix<Frac> stacked(dim_v + w.rows(), module_dim, zero);
    for (std::size_t i = 0; i < dim_v; ++i)
        for (std::size_t j = 0; j < module_dim; ++j) stacked.at(i, j) = ech.rows.at(i, j);
    for (std::size_t i = 0; i < w.rows(); ++i)
        for (std::size_t j = 0; j < module_dim; ++j) stacked.at(dim_v + i, j) = w.at(i, j);
    if (matrix_rank(stacked) != module_dim)
        throw Falsification("maschke_complement: V + W is not the whole module");
    return w;
}

}  // namespace cgi
