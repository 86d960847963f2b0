#pragma once

#include <string>
#include <vector>

#include "cgi/complex.hpp"
#include "cgi/fox.hpp"
#include "cgi/splitting.hpp"

namespace cgi {

// Wirtinger-style presentation of a knot or link group. For knots every
// generator abelianizes to 1 in Z; for links each generator carries a
// component index and abelianizes to that component's basis vector.
//
// Text grammar:
//   gens: x1 x2 x3 / rels: x1 x2 x1^-1 x3^-1, ... / meridian: x1
//   [ / components: x1:0 x2:1 ... ]
struct WirtingerPresentation {
    std::vector<std::string> gens;
    std::vector<FreeWord> relators;
    std::vector<std::string> relator_texts;
    std::size_t meridian = 0;        // generator index
    std::vector<int> component;      // per generator
    int ncomponents = 1;

    std::size_t gen_index(const std::string& name) const;
};

WirtingerPresentation parse_presentation(const std::string& text);

// Generator name -> realized image; the h-vector of each image must be the
// basis vector of the generator's component.
struct RepAssignment {
    std::vector<std::pair<std::string, GroupElement>> images;
};

// Checks every relator evaluates to the identity, builds P from the
// same-component meridian-ratio images, returns the realized Gamma (the
// tensor representation is its tautological one).
RealizedGroup verify_rep(const WirtingerPresentation& pres, const RepAssignment& assign,
                         long prime, std::size_t cap = 64);

// image of generator i in the realized group, in presentation order
std::vector<GroupElement> assignment_images(const WirtingerPresentation& pres,
                                            const RepAssignment& assign);

// Relative pair (Y, S) with S the meridian circle: C_2 = Z[G]^m -> C_1 =
// Z[G]^{n-1} (Fox Jacobian with the meridian column deleted), C_0 = 0.
ChainComplex relative_complex(const WirtingerPresentation& pres, const RealizedGroup& G,
                              const std::vector<GroupElement>& images);

// Absolute presentation complex: C_2 -> C_1 = Z[G]^n -> C_0 = Z[G] with
// d_1 the column (x_i - 1).
ChainComplex absolute_complex(const WirtingerPresentation& pres, const RealizedGroup& G,
                              const std::vector<GroupElement>& images);

struct CgReport {
    bool hypotheses_ok = false;
    std::string failed_hypothesis;  // empty when hypotheses_ok
    long l = 0;                     // index of Psi(F x P)
    std::size_t induced_dim = 0;    // d * l
    Prop41Report prop41;
    bool finite = false;
    std::vector<QDim> dims;  // Q-dimensions of H_*(Y_phi; Q[t^{+-1}]^d) per degree
};

// Casson-Gordon Lemma 4 runner: splits Gamma, induces the representation,
// verifies the relative vanishing through the proposition pipeline, then
// extracts the finite Q-dimensions from the absolute complex over Q[t^{+-1}].
CgReport cg_lemma4_run(const WirtingerPresentation& pres, const RepAssignment& assign, long p,
                       long r_exponent);

}  // namespace cgi
