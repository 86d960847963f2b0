#pragma once

#include <map>
#include <string>
#include <vector>

#include "cgi/groupring.hpp"

namespace cgi {

// Reduced word in a free group: syllables (generator index, nonzero exponent)
// with adjacent syllables on distinct generators.
struct FreeWord {
    std::vector<std::pair<int, int>> syl;

    bool empty() const { return syl.empty(); }
    friend bool operator==(const FreeWord& a, const FreeWord& b) { return a.syl == b.syl; }
    friend bool operator<(const FreeWord& a, const FreeWord& b) { return a.syl < b.syl; }
};

FreeWord free_reduce(FreeWord w);
FreeWord free_mul(const FreeWord& a, const FreeWord& b);
FreeWord free_inv(const FreeWord& a);
long exponent_sum(const FreeWord& w, int gen);

// Element of the integral group ring of the free group.
using FreeRingElem = std::map<FreeWord, long>;

FreeRingElem fox_derivative(const FreeWord& w, int gen);

// Substitute group images for the free generators.
GroupElement evaluate_word(const FreeWord& w, const std::vector<GroupElement>& images,
                           const GroupElement& identity);
GroupRingElem push_to_group(const FreeRingElem& e, const std::vector<GroupElement>& images,
                            const GroupElement& identity);

}  // namespace cgi
