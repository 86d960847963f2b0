#pragma once

#include <json.hpp>
#include <string>

#include "cgi/complex.hpp"
#include "cgi/groupring.hpp"
#include "cgi/wirtinger.hpp"

namespace cgi {

using Json = nlohmann::ordered_json;

// Rationals travel as "a" or "a/b" strings throughout the interchange format.
Json matrix_to_json(const Matrix<Rational>& m);
Matrix<Rational> matrix_from_json(const Json& j);

// {"k":…, "r":…, "prime":…, "generators":[{"mat":…, "h":…}], "p_generators":[…], "cap":…}
Json group_to_json(const RealizedGroup& G);
RealizedGroup group_from_json(const Json& j);

// words in the group's letter alphabet: "g1 g2^-1 q1^2", "e" for the identity
std::vector<std::pair<int, int>> word_from_string(const RealizedGroup& G, const std::string& s);

// {"rows":…, "cols":…, "entries":[[ [ {"word":…, "coeff":…}, … ] ]]}
GroupRingMatrix map_from_json(const RealizedGroup& G, const Json& j);

// canonical element-literal serialization (deterministic; used for goldens)
Json map_to_canonical_json(const GroupRingMatrix& m);

// {"alpha": {letter: matrix}, "phi": {letter: [ints]}} -> the group realized
// from the images of alpha x phi, mirroring the reduction to Gamma = pi.
RealizedGroup rep_group_from_json(const RealizedGroup& base, const Json& j);

// {"ranks":[…], "boundaries":[map JSON, …]}
ChainComplex complex_from_json(const RealizedGroup& G, const Json& j);

// {"images": {generator name: {"mat":…, "h":…}}}
RepAssignment assignment_from_json(const Json& j);

Json group_element_to_json(const GroupElement& g);
GroupElement group_element_from_json(const Json& j);

// FNV-1a digest of file bytes, hex; reports identify inputs by digest so the
// same inputs always produce byte-identical reports.
std::string file_digest(const std::string& path);
std::string read_file(const std::string& path);

}  // namespace cgi
