#include "cgi/automorphisms.hpp"

#include <algorithm>
#include <set>

#include "cgi/errors.hpp"

namespace cgi {

namespace {

// Extend img (indexed by element, -1 unknown) multiplicatively from the
// currently known entries; returns false on contradiction.
bool propagate(const FiniteGroupTable& t, std::vector<int>& img) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < t.n; ++a) {
            if (img[static_cast<std::size_t>(a)] < 0) continue;
            for (int b = 0; b < t.n; ++b) {
                if (img[static_cast<std::size_t>(b)] < 0) continue;
                const int c = t.at(a, b);
                const int ic = t.at(img[static_cast<std::size_t>(a)], img[static_cast<std::size_t>(b)]);
                if (img[static_cast<std::size_t>(c)] < 0) {
                    img[static_cast<std::size_t>(c)] = ic;
                    changed = true;
                } else if (img[static_cast<std::size_t>(c)] != ic) {
                    return false;
                }
            }
        }
    }
    return true;
}

void search(const FiniteGroupTable& t, const std::vector<int>& gens,
            const std::vector<std::vector<int>>& candidates, std::size_t pos,
            std::vector<int>& img, std::vector<Perm>& out) {
    if (pos == gens.size()) {
        // generators assigned; the propagated map must be total and bijective
        std::vector<char> hit(static_cast<std::size_t>(t.n), 0);
        for (int x = 0; x < t.n; ++x) {
            const int y = img[static_cast<std::size_t>(x)];
            if (y < 0 || hit[static_cast<std::size_t>(y)]) return;
            hit[static_cast<std::size_t>(y)] = 1;
        }
        for (int a = 0; a < t.n; ++a)
            for (int b = 0; b < t.n; ++b)
                if (img[static_cast<std::size_t>(t.at(a, b))] !=
                    t.at(img[static_cast<std::size_t>(a)], img[static_cast<std::size_t>(b)]))
                    return;
        out.emplace_back(img.begin(), img.end());
        return;
    }
    for (const int c : candidates[pos]) {
        std::vector<int> next = img;
        next[static_cast<std::size_t>(gens[pos])] = c;
        if (propagate(t, next)) search(t, gens, candidates, pos + 1, next, out);
    }
}

}  // namespace

std::vector<Perm> automorphism_group(const FiniteGroupTable& t, int bound) {
    if (t.n > bound)
        throw TooLarge("automorphism_group: order " + std::to_string(t.n) + " exceeds bound " +
                       std::to_string(bound));
    t.verify();
    const std::vector<int> gens = minimal_generators(t);
    if (gens.empty()) return {Perm{0}};

    std::vector<std::vector<int>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const int ord = t.order_of(gens[i]);
        for (int x = 0; x < t.n; ++x)
            if (t.order_of(x) == ord) candidates[i].push_back(x);
    }

    std::vector<int> img(static_cast<std::size_t>(t.n), -1);
    img[static_cast<std::size_t>(t.identity)] = t.identity;
    std::vector<Perm> out;
    search(t, gens, candidates, 0, img, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Perm> inner_automorphisms(const FiniteGroupTable& t) {
    std::set<Perm> seen;
    std::vector<Perm> out;
    for (int q = 0; q < t.n; ++q) {
        Perm p(static_cast<std::size_t>(t.n));
        for (int x = 0; x < t.n; ++x)
            p[static_cast<std::size_t>(x)] = t.at(t.at(q, x), t.inv[static_cast<std::size_t>(q)]);
        if (seen.insert(p).second) out.push_back(std::move(p));
    }
    return out;
}

}  // namespace cgi
