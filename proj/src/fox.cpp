#include "cgi/fox.hpp"

namespace cgi {

FreeWord free_reduce(FreeWord w) {
    std::vector<std::pair<int, int>> out;
    for (const auto& s : w.syl) {
        if (s.second == 0) continue;
        if (!out.empty() && out.back().first == s.first) {
            out.back().second += s.second;
            if (out.back().second == 0) out.pop_back();
        } else {
            out.push_back(s);
        }
    }
    return FreeWord{std::move(out)};
}

FreeWord free_mul(const FreeWord& a, const FreeWord& b) {
    FreeWord w = a;
    w.syl.insert(w.syl.end(), b.syl.begin(), b.syl.end());
    return free_reduce(std::move(w));
}

FreeWord free_inv(const FreeWord& a) {
    FreeWord w;
    for (auto it = a.syl.rbegin(); it != a.syl.rend(); ++it)
        w.syl.emplace_back(it->first, -it->second);
    return w;
}

long exponent_sum(const FreeWord& w, int gen) {
    long s = 0;
    for (const auto& [g, e] : w.syl)
        if (g == gen) s += e;
    return s;
}

namespace {

void add(FreeRingElem& e, const FreeWord& w, long c) {
    if (c == 0) return;
    auto [it, inserted] = e.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) e.erase(it);
    }
}

}  // namespace

FreeRingElem fox_derivative(const FreeWord& w, int gen) {
    // d(uv) = du + u.dv;  d(x^n) = (1 + x + ... + x^{n-1}) for n > 0 and
    // -(x^{-1} + ... + x^{n}) for n < 0
    FreeRingElem out;
    FreeWord prefix;
    for (const auto& [g, e] : w.syl) {
        if (g == gen) {
            if (e > 0) {
                for (int i = 0; i < e; ++i)
                    add(out, free_mul(prefix, FreeWord{{{g, i}}}), 1);
            } else {
                for (int i = -1; i >= e; --i)
                    add(out, free_mul(prefix, FreeWord{{{g, i}}}), -1);
            }
        }
        prefix = free_mul(prefix, FreeWord{{{g, e}}});
    }
    return out;
}

GroupElement evaluate_word(const FreeWord& w, const std::vector<GroupElement>& images,
                           const GroupElement& identity) {
    GroupElement acc = identity;
    for (const auto& [g, e] : w.syl)
        acc = acc * ge_pow(images[static_cast<std::size_t>(g)], e);
    return acc;
}

GroupRingElem push_to_group(const FreeRingElem& e, const std::vector<GroupElement>& images,
                            const GroupElement& identity) {
    GroupRingElem out;
    for (const auto& [w, c] : e)
        out.add_term(evaluate_word(w, images, identity), Rational(c));
    return out;
}

}  // namespace cgi
