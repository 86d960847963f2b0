#include "cgi/group.hpp"

#include <algorithm>
#include <deque>

#include "cgi/errors.hpp"

namespace cgi {

GroupElement ge_identity(std::size_t k, std::size_t r) {
    return {Matrix<Rational>::identity(k, Rational(1), Rational(0)), IntVec(r, 0)};
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    if (a.h.size() != b.h.size()) throw MalformedInput("GroupElement: rank mismatch");
    GroupElement out{a.mat * b.mat, a.h};
    for (std::size_t i = 0; i < out.h.size(); ++i) out.h[i] += b.h[i];
    return out;
}

GroupElement ge_inverse(const GroupElement& g) {
    const auto inv = inverse(g.mat);
    if (!inv) throw MalformedInput("GroupElement: matrix is singular");
    GroupElement out{*inv, g.h};
    for (auto& x : out.h) x = -x;
    return out;
}

GroupElement ge_pow(const GroupElement& g, long e) {
    GroupElement base = e < 0 ? ge_inverse(g) : g;
    std::size_t n = static_cast<std::size_t>(e < 0 ? -e : e);
    GroupElement acc = ge_identity(g.mat.rows(), g.h.size());
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.h == b.h && a.mat == b.mat;
}
bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }

bool operator<(const GroupElement& a, const GroupElement& b) {
    if (a.h != b.h) return a.h < b.h;
    if (a.mat.rows() != b.mat.rows()) return a.mat.rows() < b.mat.rows();
    for (std::size_t i = 0; i < a.mat.rows(); ++i)
        for (std::size_t j = 0; j < a.mat.cols(); ++j) {
            if (a.mat.at(i, j) != b.mat.at(i, j)) return a.mat.at(i, j) < b.mat.at(i, j);
        }
    return false;
}

int FiniteGroupTable::order_of(int i) const {
    int ord = 1, x = i;
    while (x != identity) {
        x = at(x, i);
        ++ord;
        if (ord > n) throw MalformedInput("FiniteGroupTable: broken table");
    }
    return ord;
}

void FiniteGroupTable::verify() const {
    if (n <= 0 || static_cast<int>(mul.size()) != n * n || static_cast<int>(inv.size()) != n)
        throw MalformedInput("FiniteGroupTable: bad shape");
    for (int i = 0; i < n; ++i)
        if (at(identity, i) != i || at(i, identity) != i)
            throw MalformedInput("FiniteGroupTable: identity axiom fails");
    for (int i = 0; i < n; ++i)
        if (at(i, inv[i]) != identity || at(inv[i], i) != identity)
            throw MalformedInput("FiniteGroupTable: inverse axiom fails");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (at(at(a, b), c) != at(a, at(b, c)))
                    throw MalformedInput("FiniteGroupTable: associativity fails");
}

FiniteGroupTable FiniteGroupTable::trivial() { return FiniteGroupTable{}; }

FiniteGroupTable FiniteGroupTable::cyclic(int n) {
    FiniteGroupTable t;
    t.n = n;
    t.mul.assign(static_cast<std::size_t>(n) * n, 0);
    t.inv.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) t.mul[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
        t.inv[i] = (n - i) % n;
    }
    return t;
}

FiniteGroupTable FiniteGroupTable::direct_product(const FiniteGroupTable& a,
                                                  const FiniteGroupTable& b) {
    FiniteGroupTable t;
    t.n = a.n * b.n;
    t.mul.assign(static_cast<std::size_t>(t.n) * t.n, 0);
    t.inv.assign(t.n, 0);
    t.identity = a.identity * b.n + b.identity;
    for (int i = 0; i < t.n; ++i) {
        const int ia = i / b.n, ib = i % b.n;
        t.inv[i] = a.inv[ia] * b.n + b.inv[ib];
        for (int j = 0; j < t.n; ++j) {
            const int ja = j / b.n, jb = j % b.n;
            t.mul[static_cast<std::size_t>(i) * t.n + j] = a.at(ia, ja) * b.n + b.at(ib, jb);
        }
    }
    return t;
}

FiniteGroupTable FiniteGroupTable::quaternion8() {
    // elements: 1, -1, i, -i, j, -j, k, -k
    auto sgn = [](int x) { return x & 1; };
    auto axis = [](int x) { return x >> 1; };  // 0:1, 1:i, 2:j, 3:k
    auto enc = [](int axis, int s) { return axis * 2 + s; };
    FiniteGroupTable t;
    t.n = 8;
    t.mul.assign(64, 0);
    t.inv.assign(8, 0);
    // axis products and extra signs: i*j = k, j*i = -k, i*i = -1, ...
    static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const int axa = axis(a), axb = axis(b);
            int s = sgn(a) ^ sgn(b) ^ sg[axa][axb];
            t.mul[static_cast<std::size_t>(a) * 8 + b] = enc(ax[axa][axb], s);
        }
    for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b)
            if (t.at(a, b) == 0) t.inv[a] = b;
    }
    t.verify();
    return t;
}

std::vector<int> minimal_generators(const FiniteGroupTable& t) {
    std::vector<int> gens;
    std::vector<char> closed(t.n, 0);
    closed[t.identity] = 1;
    int closed_count = 1;
    auto close_with = [&](int g) {
        std::deque<int> todo;
        if (!closed[g]) {
            closed[g] = 1;
            ++closed_count;
            todo.push_back(g);
        }
        while (!todo.empty()) {
            const int x = todo.front();
            todo.pop_front();
            for (int y = 0; y < t.n; ++y) {
                if (!closed[y]) continue;
                for (const int z : {t.at(x, y), t.at(y, x)}) {
                    if (!closed[z]) {
                        closed[z] = 1;
                        ++closed_count;
                        todo.push_back(z);
                    }
                }
            }
        }
    };
    for (int i = 0; i < t.n && closed_count < t.n; ++i) {
        if (closed[i]) continue;
        gens.push_back(i);
        close_with(i);
    }
    return gens;
}

Perm perm_mul(const Perm& a, const Perm& b) {
    Perm out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[static_cast<std::size_t>(b[x])];
    return out;
}

Perm perm_inv(const Perm& a) {
    Perm out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) out[static_cast<std::size_t>(a[x])] = static_cast<int>(x);
    return out;
}

std::optional<int> RealizedGroup::kernel_index(const GroupElement& g) const {
    const auto it = kernel_idx_.find(g);
    if (it == kernel_idx_.end()) return std::nullopt;
    return it->second;
}

Perm RealizedGroup::conj_perm(const GroupElement& g) const {
    const GroupElement gi = ge_inverse(g);
    Perm out(kernel.size());
    for (std::size_t i = 0; i < kernel.size(); ++i) {
        const auto idx = kernel_index(g * kernel[i] * gi);
        if (!idx) throw HypothesisViolation("conjugation does not preserve the kernel group");
        out[i] = *idx;
    }
    return out;
}

const GroupElement& RealizedGroup::letter(std::size_t id) const {
    if (id < generators.size()) return generators[id];
    id -= generators.size();
    if (id < p_generators.size()) return p_generators[id];
    throw MalformedInput("unknown generator id");
}

std::string RealizedGroup::letter_name(std::size_t id) const {
    if (id < generators.size()) return "g" + std::to_string(id + 1);
    return "q" + std::to_string(id - generators.size() + 1);
}

std::optional<std::size_t> RealizedGroup::letter_id(const std::string& name) const {
    if (name.size() < 2 || (name[0] != 'g' && name[0] != 'q')) return std::nullopt;
    std::size_t idx = 0;
    try {
        idx = std::stoul(name.substr(1));
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (idx == 0) return std::nullopt;
    --idx;
    if (name[0] == 'g')
        return idx < generators.size() ? std::optional<std::size_t>(idx) : std::nullopt;
    return idx < p_generators.size() ? std::optional<std::size_t>(generators.size() + idx)
                                     : std::nullopt;
}

GroupElement RealizedGroup::eval_word(const std::vector<std::pair<int, int>>& word) const {
    GroupElement acc = identity();
    for (const auto& [id, e] : word)
        acc = acc * ge_pow(letter(static_cast<std::size_t>(id)), e);
    return acc;
}

GroupElement RealizedGroup::element_for_lattice(const IntVec& v) const {
    const auto coords = z_coords(im_phi, v);
    if (!coords) throw DecompositionError("lattice vector outside im(phi)");
    GroupElement acc = identity();
    for (std::size_t i = 0; i < coords->size(); ++i) {
        if ((*coords)[i] == 0) continue;
        GroupElement w = identity();
        for (std::size_t j = 0; j < generators.size(); ++j)
            if (im_phi.transform[i][j] != 0) w = w * ge_pow(generators[j], im_phi.transform[i][j]);
        acc = acc * ge_pow(w, (*coords)[i]);
    }
    return acc;
}

void RealizedGroup::rebuild_index() {
    kernel_idx_.clear();
    for (std::size_t i = 0; i < kernel.size(); ++i)
        kernel_idx_[kernel[i]] = static_cast<int>(i);
}

namespace {

bool is_prime_power(std::size_t n, long p) {
    if (n == 0) return false;
    while (n % static_cast<std::size_t>(p) == 0) n /= static_cast<std::size_t>(p);
    return n == 1;
}

}  // namespace

RealizedGroup build_realized_group(std::size_t k, std::size_t r,
                                   std::vector<GroupElement> generators,
                                   std::vector<GroupElement> p_generators, long prime,
                                   std::size_t cap) {
    RealizedGroup G;
    G.k = k;
    G.r = r;
    G.prime = prime;
    G.cap = cap;
    G.generators = std::move(generators);
    G.p_generators = std::move(p_generators);

    for (const auto& g : G.generators)
        if (g.mat.rows() != k || g.mat.cols() != k || g.h.size() != r)
            throw MalformedInput("generator with wrong dimensions");
    for (const auto& q : G.p_generators) {
        if (q.mat.rows() != k || q.mat.cols() != k || q.h.size() != r)
            throw MalformedInput("p-generator with wrong dimensions");
        for (long x : q.h)
            if (x != 0) throw MalformedInput("p-generator with nonzero h-vector");
    }

    // closure of <p_generators> under product, inverse, and conjugation
    std::map<GroupElement, int> seen;
    std::deque<GroupElement> todo;
    const GroupElement e = G.identity();
    seen[e] = 0;
    G.kernel.push_back(e);
    auto push = [&](const GroupElement& x) {
        if (seen.emplace(x, static_cast<int>(G.kernel.size())).second) {
            if (G.kernel.size() >= cap)
                throw KernelNotFinite("kernel closure exceeded cap " + std::to_string(cap));
            G.kernel.push_back(x);
            todo.push_back(x);
        }
    };
    for (const auto& q : G.p_generators) push(q);
    std::vector<GroupElement> conjugators;
    for (const auto& g : G.generators) {
        conjugators.push_back(g);
        conjugators.push_back(ge_inverse(g));
    }
    while (!todo.empty()) {
        const GroupElement x = todo.front();
        todo.pop_front();
        push(ge_inverse(x));
        for (std::size_t i = 0; i < G.kernel.size(); ++i) {
            push(x * G.kernel[i]);
            push(G.kernel[i] * x);
        }
        for (const auto& c : conjugators) push(c * x * ge_inverse(c));
    }

    if (!is_prime_power(G.kernel.size(), prime))
        throw HypothesisViolation("kernel order " + std::to_string(G.kernel.size()) +
                                  " is not a power of " + std::to_string(prime));

    G.rebuild_index();

    // multiplication table (also proves closure under products)
    FiniteGroupTable t;
    t.n = static_cast<int>(G.kernel.size());
    t.mul.assign(G.kernel.size() * G.kernel.size(), 0);
    t.inv.assign(G.kernel.size(), 0);
    t.identity = 0;
    for (std::size_t i = 0; i < G.kernel.size(); ++i) {
        for (std::size_t j = 0; j < G.kernel.size(); ++j) {
            const auto idx = G.kernel_index(G.kernel[i] * G.kernel[j]);
            if (!idx) throw Falsification("kernel closure is not closed under products");
            t.mul[i * G.kernel.size() + j] = *idx;
            if (*idx == 0) t.inv[i] = static_cast<int>(j);
        }
    }
    t.verify();
    G.ptable = std::move(t);

    // normality under every generator
    for (const auto& g : G.generators) (void)G.conj_perm(g);

    IntMat hrows;
    for (const auto& g : G.generators) hrows.push_back(g.h);
    G.im_phi = z_row_basis(hrows, r);
    return G;
}

std::vector<Matrix<Rational>> regular_rep(const FiniteGroupTable& t) {
    std::vector<Matrix<Rational>> out;
    out.reserve(static_cast<std::size_t>(t.n));
    for (int q = 0; q < t.n; ++q) {
        Matrix<Rational> m(static_cast<std::size_t>(t.n), static_cast<std::size_t>(t.n),
                           Rational(0));
        for (int x = 0; x < t.n; ++x) m.at(static_cast<std::size_t>(x), static_cast<std::size_t>(t.at(x, q))) = Rational(1);
        out.push_back(std::move(m));
    }
    return out;
}

RealizedGroup make_semidirect(const FiniteGroupTable& P, const std::vector<Perm>& action,
                              const std::vector<int>& p_gen_indices, long prime,
                              std::size_t cap) {
    P.verify();
    const std::size_t r = action.size();
    const auto n = static_cast<std::size_t>(P.n);
    for (const auto& a : action) {
        if (a.size() != n) throw MalformedInput("make_semidirect: bad action");
        // automorphism check
        for (int x = 0; x < P.n; ++x)
            for (int y = 0; y < P.n; ++y)
                if (a[static_cast<std::size_t>(P.at(x, y))] !=
                    P.at(a[static_cast<std::size_t>(x)], a[static_cast<std::size_t>(y)]))
                    throw MalformedInput("make_semidirect: action is not an automorphism");
    }
    for (std::size_t i = 0; i < action.size(); ++i)
        for (std::size_t j = i + 1; j < action.size(); ++j)
            if (perm_mul(action[i], action[j]) != perm_mul(action[j], action[i]))
                throw MalformedInput("make_semidirect: actions must commute");

    const auto reg = regular_rep(P);
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < r; ++i) {
        // A(sigma): x -> sigma^{-1}(x), so that A R(q) A^{-1} = R(sigma(q))
        const Perm si = perm_inv(action[i]);
        Matrix<Rational> A(n, n, Rational(0));
        for (std::size_t x = 0; x < n; ++x) A.at(x, static_cast<std::size_t>(si[x])) = Rational(1);
        IntVec h(r, 0);
        h[i] = 1;
        gens.push_back({std::move(A), std::move(h)});
    }
    std::vector<GroupElement> pgens;
    for (const int q : p_gen_indices) pgens.push_back({reg[static_cast<std::size_t>(q)], IntVec(r, 0)});
    return build_realized_group(n, r, std::move(gens), std::move(pgens), prime, cap);
}

}  // namespace cgi
