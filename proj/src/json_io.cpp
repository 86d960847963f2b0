#include "cgi/json_io.hpp"

#include <fstream>
#include <sstream>

#include "cgi/errors.hpp"

namespace cgi {

Json matrix_to_json(const Matrix<Rational>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix<Rational> matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw MalformedInput("matrix: expected a nonempty array of rows");
    const std::size_t rows = j.size(), cols = j[0].size();
    Matrix<Rational> m(rows, cols, Rational(0));
    for (std::size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols) throw MalformedInput("matrix: ragged rows");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(i, c) = parse_rational(j[i][c].get<std::string>());
    }
    return m;
}

Json group_element_to_json(const GroupElement& g) {
    Json out;
    out["mat"] = matrix_to_json(g.mat);
    out["h"] = g.h;
    return out;
}

GroupElement group_element_from_json(const Json& j) {
    GroupElement g;
    g.mat = matrix_from_json(j.at("mat"));
    if (j.contains("h")) g.h = j.at("h").get<IntVec>();
    return g;
}

Json group_to_json(const RealizedGroup& G) {
    Json out;
    out["k"] = G.k;
    out["r"] = G.r;
    out["prime"] = G.prime;
    out["generators"] = Json::array();
    for (const auto& g : G.generators) out["generators"].push_back(group_element_to_json(g));
    out["p_generators"] = Json::array();
    for (const auto& q : G.p_generators)
        out["p_generators"].push_back(group_element_to_json(q));
    out["cap"] = G.cap;
    return out;
}

RealizedGroup group_from_json(const Json& j) {
    const auto k = j.at("k").get<std::size_t>();
    const auto r = j.at("r").get<std::size_t>();
    const auto prime = j.at("prime").get<long>();
    const auto cap = j.contains("cap") ? j.at("cap").get<std::size_t>() : 64;
    std::vector<GroupElement> gens, pgens;
    for (const auto& g : j.at("generators")) gens.push_back(group_element_from_json(g));
    if (j.contains("p_generators"))
        for (const auto& q : j.at("p_generators")) pgens.push_back(group_element_from_json(q));
    for (auto& g : gens)
        if (g.h.size() != r) throw MalformedInput("group: generator h-vector of wrong rank");
    for (auto& q : pgens) q.h.assign(r, 0);
    return build_realized_group(k, r, std::move(gens), std::move(pgens), prime, cap);
}

std::vector<std::pair<int, int>> word_from_string(const RealizedGroup& G, const std::string& s) {
    std::vector<std::pair<int, int>> word;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        if (tok == "e") continue;
        std::string name = tok;
        int e = 1;
        const auto caret = tok.find('^');
        if (caret != std::string::npos) {
            name = tok.substr(0, caret);
            try {
                e = std::stoi(tok.substr(caret + 1));
            } catch (const std::exception&) {
                throw MalformedInput("word: bad exponent in " + tok);
            }
        }
        const auto id = G.letter_id(name);
        if (!id) throw MalformedInput("word: unknown letter " + name);
        word.emplace_back(static_cast<int>(*id), e);
    }
    return word;
}

GroupRingMatrix map_from_json(const RealizedGroup& G, const Json& j) {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const Json& entries = j.at("entries");
    if (entries.size() != rows) throw MalformedInput("map: row count mismatch");
    GroupRingMatrix m(&G, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (entries[i].size() != cols) throw MalformedInput("map: column count mismatch");
        for (std::size_t c = 0; c < cols; ++c) {
            for (const auto& term : entries[i][c]) {
                const auto word = word_from_string(G, term.at("word").get<std::string>());
                const Rational coeff = parse_rational(term.at("coeff").get<std::string>());
                m.at(i, c).add_term(G.eval_word(word), coeff);
            }
        }
    }
    return m;
}

Json map_to_canonical_json(const GroupRingMatrix& m) {
    Json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Json terms = Json::array();
            for (const auto& [g, coeff] : m.at(i, c).terms()) {
                Json term;
                term["coeff"] = to_string(coeff);
                term["mat"] = matrix_to_json(g.mat);
                term["h"] = g.h;
                terms.push_back(std::move(term));
            }
            row.push_back(std::move(terms));
        }
        entries.push_back(std::move(row));
    }
    out["entries"] = std::move(entries);
    return out;
}

RealizedGroup rep_group_from_json(const RealizedGroup& base, const Json& j) {
    const Json& alpha = j.at("alpha");
    std::vector<GroupElement> gens, pgens;
    std::size_t k = 0;
    for (std::size_t i = 0; i < base.generators.size(); ++i) {
        const std::string name = base.letter_name(i);
        if (!alpha.contains(name)) throw MalformedInput("rep: missing alpha for " + name);
        GroupElement g;
        g.mat = matrix_from_json(alpha.at(name));
        k = g.mat.rows();
        if (j.contains("phi") && j.at("phi").contains(name))
            g.h = j.at("phi").at(name).get<IntVec>();
        else
            g.h = base.generators[i].h;
        if (g.h.size() != base.r) throw MalformedInput("rep: phi rank mismatch for " + name);
        gens.push_back(std::move(g));
    }
    for (std::size_t i = 0; i < base.p_generators.size(); ++i) {
        const std::string name = base.letter_name(base.generators.size() + i);
        if (!alpha.contains(name)) throw MalformedInput("rep: missing alpha for " + name);
        GroupElement q;
        q.mat = matrix_from_json(alpha.at(name));
        q.h.assign(base.r, 0);
        pgens.push_back(std::move(q));
    }
    return build_realized_group(k, base.r, std::move(gens), std::move(pgens), base.prime,
                                base.cap);
}

ChainComplex complex_from_json(const RealizedGroup& G, const Json& j) {
    std::vector<std::size_t> ranks = j.at("ranks").get<std::vector<std::size_t>>();
    std::vector<GroupRingMatrix> boundaries;
    for (const auto& b : j.at("boundaries")) boundaries.push_back(map_from_json(G, b));
    return make_complex(G, std::move(ranks), std::move(boundaries));
}

RepAssignment assignment_from_json(const Json& j) {
    RepAssignment out;
    for (const auto& [name, img] : j.at("images").items())
        out.images.emplace_back(name, group_element_from_json(img));
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedInput("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string file_digest(const std::string& path) {
    const std::string data = read_file(path);
    std::uint64_t h = 1469598103934665603ull;
    for (const unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace cgi
