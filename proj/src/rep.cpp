#include "cgi/rep.hpp"

#include "cgi/errors.hpp"

namespace cgi {

TensorRep TensorRep::tautological(const RealizedGroup& G) {
    TensorRep rep;
    rep.G_ = &G;
    rep.dim_ = G.k;
    return rep;
}

TensorRep TensorRep::induced(const RealizedGroup& G, SplittingCertificate cert) {
    TensorRep rep;
    rep.G_ = &G;
    rep.dim_ = G.k * static_cast<std::size_t>(cert.index);
    rep.base_dim_ = G.k;
    rep.cert_ = std::move(cert);
    rep.check_multiplicative();
    return rep;
}

TensorRep TensorRep::induced_custom(const RealizedGroup& G, SplittingCertificate cert,
                                    std::size_t base_dim, AlphaFn base_alpha) {
    TensorRep rep;
    rep.G_ = &G;
    rep.dim_ = base_dim * static_cast<std::size_t>(cert.index);
    rep.base_dim_ = base_dim;
    rep.base_alpha_ = std::move(base_alpha);
    rep.cert_ = std::move(cert);
    rep.check_multiplicative();
    return rep;
}

Matrix<Rational> TensorRep::alpha(const GroupElement& g) const {
    if (!cert_) return g.mat;
    const std::size_t l = cert_->coset_reps.size();
    Matrix<Rational> out(dim_, dim_, Rational(0));
    for (std::size_t i = 0; i < l; ++i) {
        const auto dec = cert_->decompose(*G_, cert_->coset_reps[i] * g);
        const Matrix<Rational> block = base_alpha_ ? base_alpha_(dec.b) : dec.b.mat;
        if (block.rows() != base_dim_ || block.cols() != base_dim_)
            throw MalformedInput("induced base block has wrong dimension");
        for (std::size_t a = 0; a < base_dim_; ++a)
            for (std::size_t b = 0; b < base_dim_; ++b)
                out.at(i * base_dim_ + a, dec.j * base_dim_ + b) = block.at(a, b);
    }
    return out;
}

Matrix<Laurent> TensorRep::specialize(const GroupElement& g) const {
    const Matrix<Rational> a = alpha(g);
    Laurent::Expo e(G_->r);
    for (std::size_t i = 0; i < G_->r; ++i) e[i] = static_cast<int>(g.h[i]);
    const int r = static_cast<int>(G_->r);
    return a.map([&](const Rational& c) { return Laurent::monomial(r, e, c); });
}

void TensorRep::check_multiplicative() const {
    const GroupElement e = G_->identity();
    const Matrix<Rational> id =
        Matrix<Rational>::identity(dim_, Rational(1), Rational(0));
    if (alpha(e) != id) throw Falsification("representation: alpha(e) != Id");
    for (std::size_t a = 0; a < G_->alphabet_size(); ++a)
        for (std::size_t b = 0; b < G_->alphabet_size(); ++b) {
            const GroupElement ga = G_->letter(a), gb = G_->letter(b);
            if (alpha(ga) * alpha(gb) != alpha(ga * gb))
                throw Falsification("representation: alpha is not multiplicative on letters " +
                                    G_->letter_name(a) + ", " + G_->letter_name(b));
        }
}

}  // namespace cgi
