#include "cgi/profiles.hpp"

#include <random>

#include "cgi/errors.hpp"

namespace cgi {

std::vector<std::string> profile_names() {
    return {"z", "dihedral3", "dihedral3_rank2", "swap22", "cyclic9", "dihedral8"};
}

FuzzProfile make_profile(const std::string& name) {
    const std::size_t cap = 64;
    if (name == "z") {
        // Gamma = Z, trivial kernel, p = 2
        std::vector<GroupElement> gens{ge_identity(1, 1)};
        gens[0].h = {1};
        return {name, build_realized_group(1, 1, std::move(gens), {}, 2, cap)};
    }
    if (name == "dihedral3") {
        const auto p3 = FiniteGroupTable::cyclic(3);
        const Perm inv{0, 2, 1};
        return {name, make_semidirect(p3, {inv}, {1}, 3, cap)};
    }
    if (name == "dihedral3_rank2") {
        const auto p3 = FiniteGroupTable::cyclic(3);
        const Perm inv{0, 2, 1};
        return {name, make_semidirect(p3, {inv, inv}, {1}, 3, cap)};
    }
    if (name == "swap22") {
        const auto v4 = FiniteGroupTable::direct_product(FiniteGroupTable::cyclic(2),
                                                         FiniteGroupTable::cyclic(2));
        // (a, b) -> (b, a) on indices a*2+b
        const Perm swap{0, 2, 1, 3};
        return {name, make_semidirect(v4, {swap}, {1, 2}, 2, cap)};
    }
    if (name == "cyclic9") {
        const auto p9 = FiniteGroupTable::cyclic(9);
        const auto reg = regular_rep(p9);
        return {name, build_realized_group(9, 0, {}, {GroupElement{reg[1], {}}}, 3, cap)};
    }
    if (name == "dihedral8") {
        const auto p8 = FiniteGroupTable::cyclic(8);
        Perm inv(8);
        for (int i = 0; i < 8; ++i) inv[static_cast<std::size_t>(i)] = (8 - i) % 8;
        return {name, make_semidirect(p8, {inv}, {1}, 2, cap)};
    }
    throw MalformedInput("unknown profile: " + name);
}

FuzzReport fuzz_main_theorem(const RealizedGroup& G, const std::string& profile_name,
                             std::size_t trials, std::uint64_t master_seed) {
    FuzzReport report;
    report.profile = profile_name;
    report.master_seed = master_seed;
    report.trials = trials;
    report.records.assign(trials, {});

    std::mt19937_64 master(master_seed);
    for (auto& rec : report.records) rec.seed = master();

    static const std::pair<std::size_t, std::size_t> shapes[] = {{1, 1}, {1, 2}, {2, 2}, {2, 3}};
    const TensorRep rep = TensorRep::tautological(G);

    std::exception_ptr eptr = nullptr;
#pragma omp parallel for schedule(dynamic)
    for (long long t = 0; t < static_cast<long long>(trials); ++t) {
        try {
            auto& rec = report.records[static_cast<std::size_t>(t)];
            const auto [a, b] = shapes[static_cast<std::size_t>(t) % 4];
            rec.rows = a;
            rec.cols = b;
            const GroupRingMatrix m = random_map(G, a, b, 2, 3, rec.seed);
            const TheoremVerdict v = check_main_theorem(m, rep, G.prime);
            rec.hypothesis = v.hypothesis_holds;
            rec.conclusion = v.conclusion_holds;
        } catch (...) {
#pragma omp critical
            eptr = std::current_exception();
        }
    }
    if (eptr) std::rethrow_exception(eptr);

    for (const auto& rec : report.records)
        if (rec.hypothesis && !rec.conclusion) ++report.falsifications;
    return report;
}

}  // namespace cgi
