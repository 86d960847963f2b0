#pragma once

#include <functional>
#include <optional>

#include "cgi/group.hpp"
#include "cgi/laurent.hpp"
#include "cgi/splitting.hpp"

namespace cgi {

// The pair (alpha, phi) turning Q[H]^k into a right module: g acts on row
// vectors by alpha(g) * x^{phi(g)}. Two constructions cover every use:
//  - tautological: alpha(g) is the realizing matrix of g itself;
//  - induced: alpha is induced from Psi(F x P) along the certificate cosets,
//    with blocks base(b) for t_i * g = b * t_j and phi inherited.
// The group must outlive the representation.
class TensorRep {
public:
    using AlphaFn = std::function<Matrix<Rational>(const GroupElement&)>;

    static TensorRep tautological(const RealizedGroup& G);
    static TensorRep induced(const RealizedGroup& G, SplittingCertificate cert);
    static TensorRep induced_custom(const RealizedGroup& G, SplittingCertificate cert,
                                    std::size_t base_dim, AlphaFn base_alpha);

    std::size_t dim() const { return dim_; }
    const RealizedGroup& group() const { return *G_; }
    const SplittingCertificate* certificate() const { return cert_ ? &*cert_ : nullptr; }

    Matrix<Rational> alpha(const GroupElement& g) const;
    const IntVec& phi(const GroupElement& g) const { return g.h; }
    // alpha(g) * x^{phi(g)} over the Laurent ring in r variables
    Matrix<Laurent> specialize(const GroupElement& g) const;

    // multiplicativity on all letter pairs; throws Falsification on failure
    void check_multiplicative() const;

private:
    TensorRep() = default;
    const RealizedGroup* G_ = nullptr;
    std::size_t dim_ = 0;
    std::optional<SplittingCertificate> cert_;
    std::size_t base_dim_ = 0;
    AlphaFn base_alpha_;  // empty: base is the tautological restriction
};

}  // namespace cgi
