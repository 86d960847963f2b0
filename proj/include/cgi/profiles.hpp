#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgi/groupring.hpp"

namespace cgi {

// Configured group families for the theorem fuzz harness, spanning
// r in {0,1,2}, p in {2,3}, |P| in {1,3,4,8,9}.
struct FuzzProfile {
    std::string name;
    RealizedGroup group;
};

std::vector<std::string> profile_names();
FuzzProfile make_profile(const std::string& name);  // throws MalformedInput on unknown name

struct FuzzTrialRecord {
    std::uint64_t seed = 0;
    std::size_t rows = 0, cols = 0;
    bool hypothesis = false;
    bool conclusion = false;
};

struct FuzzReport {
    std::string profile;
    std::uint64_t master_seed = 0;
    std::size_t trials = 0;
    std::size_t falsifications = 0;  // hypothesis true, conclusion false
    std::vector<FuzzTrialRecord> records;
};

// Seeded random group-ring maps through check_main_theorem; trials run in
// parallel with per-trial seeds derived from the master seed, results are
// assembled in trial order.
FuzzReport fuzz_main_theorem(const RealizedGroup& G, const std::string& profile_name,
                             std::size_t trials, std::uint64_t master_seed);

}  // namespace cgi
