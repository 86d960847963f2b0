#pragma once

#include <vector>

#include "cgi/group.hpp"

namespace cgi {

// All automorphisms of a finite group, by brute force over generator images
// with order-based pruning. Throws TooLarge above `bound` elements.
std::vector<Perm> automorphism_group(const FiniteGroupTable& t, int bound = 64);

// Inner automorphisms conj_q: x -> q x q^{-1}, one per element (with repeats
// removed), in deterministic order.
std::vector<Perm> inner_automorphisms(const FiniteGroupTable& t);

}  // namespace cgi
