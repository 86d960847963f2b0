#include "cgi/wirtinger.hpp"

#include <algorithm>
#include <sstream>

#include "cgi/errors.hpp"

namespace cgi {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::size_t WirtingerPresentation::gen_index(const std::string& name) const {
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i] == name) return i;
    throw MalformedInput("unknown generator: " + name);
}

WirtingerPresentation parse_presentation(const std::string& text) {
    WirtingerPresentation pres;
    // sections separated by '/'
    std::vector<std::pair<std::string, std::string>> sections;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '/')) {
        const auto colon = part.find(':');
        if (colon == std::string::npos) {
            if (trim(part).empty()) continue;
            throw MalformedInput("presentation: section without ':' near \"" + trim(part) + "\"");
        }
        sections.emplace_back(trim(part.substr(0, colon)), trim(part.substr(colon + 1)));
    }

    std::string rels_text, meridian_name, components_text;
    bool have_gens = false, have_rels = false, have_meridian = false;
    for (const auto& [key, value] : sections) {
        if (key == "gens") {
            pres.gens = split_ws(value);
            have_gens = true;
        } else if (key == "rels") {
            rels_text = value;
            have_rels = true;
        } else if (key == "meridian") {
            meridian_name = value;
            have_meridian = true;
        } else if (key == "components") {
            components_text = value;
        } else {
            throw MalformedInput("presentation: unknown section \"" + key + "\"");
        }
    }
    if (!have_gens || !have_rels || !have_meridian)
        throw MalformedInput("presentation: need gens, rels and meridian sections");
    if (pres.gens.empty()) throw MalformedInput("presentation: no generators");

    pres.component.assign(pres.gens.size(), 0);
    pres.ncomponents = 1;
    if (!components_text.empty()) {
        for (const auto& tok : split_ws(components_text)) {
            const auto colon = tok.find(':');
            if (colon == std::string::npos)
                throw MalformedInput("components: expected name:index, got " + tok);
            const std::size_t gi = pres.gen_index(tok.substr(0, colon));
            const int ci = std::stoi(tok.substr(colon + 1));
            if (ci < 0) throw MalformedInput("components: negative index");
            pres.component[gi] = ci;
            pres.ncomponents = std::max(pres.ncomponents, ci + 1);
        }
    }

    // words: whitespace separated letters, each `name` or `name^int`
    auto parse_word = [&](const std::string& wtext) {
        FreeWord w;
        for (const auto& tok : split_ws(wtext)) {
            std::string name = tok;
            int e = 1;
            const auto caret = tok.find('^');
            if (caret != std::string::npos) {
                name = tok.substr(0, caret);
                try {
                    e = std::stoi(tok.substr(caret + 1));
                } catch (const std::exception&) {
                    throw MalformedInput("bad exponent in letter " + tok);
                }
            }
            w.syl.emplace_back(static_cast<int>(pres.gen_index(name)), e);
        }
        return free_reduce(w);
    };

    std::stringstream rs(rels_text);
    std::string rel;
    while (std::getline(rs, rel, ',')) {
        rel = trim(rel);
        if (rel.empty()) continue;
        pres.relators.push_back(parse_word(rel));
        pres.relator_texts.push_back(rel);
    }
    pres.meridian = pres.gen_index(meridian_name);

    // abelianization check: each relator has zero exponent sum per component
    for (std::size_t r = 0; r < pres.relators.size(); ++r) {
        std::vector<long> sums(static_cast<std::size_t>(pres.ncomponents), 0);
        for (std::size_t g = 0; g < pres.gens.size(); ++g)
            sums[static_cast<std::size_t>(pres.component[g])] +=
                exponent_sum(pres.relators[r], static_cast<int>(g));
        for (const long s : sums)
            if (s != 0)
                throw MalformedInput("relator " + std::to_string(r + 1) +
                                     " has nonzero abelianization: " + pres.relator_texts[r]);
    }
    return pres;
}

std::vector<GroupElement> assignment_images(const WirtingerPresentation& pres,
                                            const RepAssignment& assign) {
    std::vector<GroupElement> images;
    for (const auto& name : pres.gens) {
        const auto it =
            std::find_if(assign.images.begin(), assign.images.end(),
                         [&](const auto& kv) { return kv.first == name; });
        if (it == assign.images.end())
            throw MalformedInput("assignment missing generator " + name);
        images.push_back(it->second);
    }
    return images;
}

RealizedGroup verify_rep(const WirtingerPresentation& pres, const RepAssignment& assign,
                         long prime, std::size_t cap) {
    const std::vector<GroupElement> images = assignment_images(pres, assign);
    const std::size_t k = images[0].mat.rows();
    const std::size_t r = images[0].h.size();
    if (r != static_cast<std::size_t>(pres.ncomponents))
        throw MalformedInput("assignment h-vectors must have one coordinate per component");
    for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t c = 0; c < r; ++c) {
            const long want = (static_cast<int>(c) == pres.component[i]) ? 1 : 0;
            if (images[i].h[c] != want)
                throw MalformedInput("generator " + pres.gens[i] +
                                     " must abelianize to its component basis vector");
        }
    }

    const GroupElement e = ge_identity(k, r);
    for (std::size_t rel = 0; rel < pres.relators.size(); ++rel) {
        if (evaluate_word(pres.relators[rel], images, e) != e)
            throw HypothesisViolation("relator violated by assignment: " +
                                      pres.relator_texts[rel]);
    }

    // P-generators: ratios x_i x_j^{-1} against the first generator of the
    // same component
    std::vector<GroupElement> pgens;
    for (std::size_t i = 0; i < images.size(); ++i) {
        std::size_t base = i;
        for (std::size_t j = 0; j < i; ++j)
            if (pres.component[j] == pres.component[i]) {
                base = j;
                break;
            }
        if (base != i) pgens.push_back(images[i] * ge_inverse(images[base]));
    }
    return build_realized_group(k, r, images, pgens, prime, cap);
}

namespace {

ChainComplex presentation_complex(const WirtingerPresentation& pres, const RealizedGroup& G,
                                  const std::vector<GroupElement>& images, bool relative) {
    const std::size_t m = pres.relators.size();
    const std::size_t n = pres.gens.size();
    const GroupElement e = G.identity();

    std::vector<std::size_t> cols;  // generator columns kept in C_1
    for (std::size_t g = 0; g < n; ++g)
        if (!relative || g != pres.meridian) cols.push_back(g);

    GroupRingMatrix d2(&G, m, cols.size());
    for (std::size_t rel = 0; rel < m; ++rel)
        for (std::size_t c = 0; c < cols.size(); ++c)
            d2.at(rel, c) = push_to_group(
                fox_derivative(pres.relators[rel], static_cast<int>(cols[c])), images, e);

    if (relative) {
        GroupRingMatrix d1(&G, cols.size(), 0);
        return make_complex(G, {0, cols.size(), m}, {std::move(d1), std::move(d2)});
    }
    GroupRingMatrix d1(&G, n, 1);
    for (std::size_t g = 0; g < n; ++g)
        d1.at(g, 0) = GroupRingElem::single(images[g]) - GroupRingElem::single(e);
    return make_complex(G, {1, n, m}, {std::move(d1), std::move(d2)});
}

}  // namespace

ChainComplex relative_complex(const WirtingerPresentation& pres, const RealizedGroup& G,
                              const std::vector<GroupElement>& images) {
    return presentation_complex(pres, G, images, true);
}

ChainComplex absolute_complex(const WirtingerPresentation& pres, const RealizedGroup& G,
                              const std::vector<GroupElement>& images) {
    return presentation_complex(pres, G, images, false);
}

CgReport cg_lemma4_run(const WirtingerPresentation& pres, const RepAssignment& assign, long p,
                       long r_exponent) {
    CgReport report;
    if (pres.ncomponents != 1)
        throw UnsupportedRing("cg_lemma4_run: only knots (one component) are supported");

    const RealizedGroup G = verify_rep(pres, assign, p);
    long expect = 1;
    for (long i = 0; i < r_exponent; ++i) expect *= p;
    if (static_cast<long>(G.kernel.size()) != expect) {
        report.failed_hypothesis = "|P| = " + std::to_string(G.kernel.size()) + " differs from p^r";
        return report;
    }

    const std::vector<GroupElement> images = assignment_images(pres, assign);
    const ChainComplex rel = relative_complex(pres, G, images);

    // F_p homology circle hypothesis: the relative complex is mod-p acyclic
    if (std::holds_alternative<NotAcyclic>(chain_contraction_mod_p(rel, p))) {
        report.failed_hypothesis = "relative complex is not F_p-acyclic";
        return report;
    }

    const SplittingCertificate cert = splitting_subgroup(G);
    report.l = cert.index;
    const TensorRep induced = TensorRep::induced(G, cert);
    report.induced_dim = induced.dim();
    report.hypotheses_ok = true;

    report.prop41 = prop41_pipeline(rel, induced, p);
    if (!report.prop41.all_invertible || !report.prop41.homology_all_zero)
        throw Falsification("cg_lemma4_run: relative Q(t)-homology did not vanish");

    // absolute complex over Q[t^{+-1}] through the induced representation
    const ChainComplex abs = absolute_complex(pres, G, images);
    std::vector<Matrix<Laurent>> d;
    for (const auto& b : abs.boundaries) d.push_back(specialize_map(b, induced));
    std::vector<std::size_t> ranks;
    for (const std::size_t r : abs.ranks) ranks.push_back(r * induced.dim());
    report.dims = laurent_complex_homology(ranks, d);
    report.finite = std::all_of(report.dims.begin(), report.dims.end(),
                                [](const QDim& q) { return q.finite; });
    if (!report.finite)
        throw Falsification("cg_lemma4_run: hypotheses hold but a homology group is infinite");
    return report;
}

}  // namespace cgi
