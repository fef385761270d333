#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgln/checks.hpp"

namespace qgln {

// Expanded run configuration: every axis is already a concrete list.
struct RunConfig {
    std::vector<int> ns;
    std::vector<int> factor_counts;
    std::vector<std::vector<int>> patterns; // filtered per N at expansion time
    bool patterns_explicit = false;         // explicit pattern is an error when invalid for some N
    std::vector<std::uint64_t> seeds;
    int trials = 5;
    std::vector<std::string> checks;
    int retry_budget = 32;
};

RunConfig default_config();

// All colour words of length 0..max_len over colours 1..max_colour, ordered
// by length then lexicographically.
std::vector<std::vector<int>> all_patterns(int max_len, int max_colour);

struct CheckRecord {
    std::string check;
    CheckAxes axes = CheckAxes::multiset;
    CheckParams params;
    std::uint64_t seed = 0;
    bool pass = false;
    std::string witness;
    long long millis = 0; // measured wall time; reported in text output only
};

struct Report {
    RunConfig config;
    std::vector<CheckRecord> records;

    bool overall() const {
        for (const auto& r : records)
            if (!r.pass) return false;
        return true;
    }
};

// Executes every (check, params, seed) job of the expanded grid.
// Deterministic given the config. Throws ConfigInvalid / SamplingExhausted.
Report run(const RunConfig& config);

std::string emit_text(const Report& report);

// Canonical machine report: a deterministic function of the RunConfig.
// The millis field is fixed to 0 here so that identical configs give
// byte-identical documents; timing lives in the text emitter.
std::string emit_machine(const Report& report);

// Exact vector of one side of the main identity, serialized as JSON with
// decimal-string numerators/denominators (nonzero components only). The
// document deliberately omits which construction produced it: both sides
// of the identity serialize byte-identically.
std::string compute_vector(const std::string& kind, const CheckParams& params, std::uint64_t seed,
                           int retry_budget = 32);

} // namespace qgln
