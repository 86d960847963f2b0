#pragma once

#include <string>
#include <vector>

#include "cgi/group.hpp"

namespace cgi {

// Witness that a finite-index sublattice F of im(phi) lifts to a section
// psi: F -> Gamma whose image commutes with the kernel group P, so that
// Psi(F x P) = preimage of F is a finite-index normal subgroup. Everything
// needed to decompose arbitrary elements over the right cosets is kept here.
class SplittingCertificate {
public:
    IntMat F_basis;                        // rows, ambient Z^r coordinates
    std::vector<GroupElement> sections;    // psi on the basis rows
    long index = 1;                        // [Gamma : Psi(F x P)]
    std::vector<GroupElement> coset_reps;  // t_0 = e, t_1, ...
    IntMat coset_hvecs;

    // internals for coset arithmetic
    ZBasis im_phi;           // copy of the group's image lattice
    ZQuotient quotient;      // im_phi-coordinates modulo F
    GroupElement identity_elt;

    // coset of an h-vector: returns (coset index j, f = v - hvec(t_j)) with f in F
    std::pair<std::size_t, IntVec> coset_of(const IntVec& v) const;
    // psi(f) for f in F, as the commuting product of section powers
    GroupElement section_of(const IntVec& f) const;

    struct Decomposition {
        IntVec f;        // F-part
        int q_index;     // kernel index of the P-part
        std::size_t j;   // coset index: g = psi(f) * q * t_j
        GroupElement b;  // psi(f) * q
    };
    Decomposition decompose(const RealizedGroup& G, const GroupElement& g) const;
};

// Constructs the certificate: conjugation classes modulo inner automorphisms
// cut out the sublattice, sections are corrected by inner elements, and
// non-commuting sections are repaired by passing to a scaled sublattice.
// Every certificate invariant is verified before returning.
SplittingCertificate splitting_subgroup(const RealizedGroup& G);

// Verifies all certificate invariants against G; throws CertificateInvalid.
void verify_certificate(const RealizedGroup& G, const SplittingCertificate& cert);

// Right coset representatives of Psi(F x P) \ Gamma; t_0 = e.
std::vector<GroupElement> coset_representatives(const RealizedGroup& G,
                                                const SplittingCertificate& cert);

// Explicit normal series Gamma > P > P_1 > ... > {e} with abelian quotients of
// p-power order (lower central series of P below the free abelian top).
struct NormalSeriesLevel {
    std::vector<int> subgroup;  // kernel indices of this level's subgroup
    long quotient_order = 1;
    bool abelian = false;
    bool p_power = false;
    std::string quotient_desc;
};

struct DZpCertificate {
    long p = 2;
    std::string top_desc;  // the free abelian quotient Gamma/P
    std::vector<NormalSeriesLevel> levels;
    bool verified = false;
};

DZpCertificate d_zp_certificate(const RealizedGroup& G);

// Abelian isomorphism type of a finite abelian group table, e.g. "Z/2 x Z/2".
std::string abelian_type(const FiniteGroupTable& t);

}  // namespace cgi
