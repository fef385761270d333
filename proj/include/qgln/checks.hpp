#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgln/projection.hpp"
#include "qgln/sample.hpp"

namespace qgln {

struct CheckParams {
    int N = 2;
    int factors = 1;
    std::vector<int> pattern; // colours, 1-based

    bool valid() const {
        if (N < 2 || factors < 0) return false;
        for (int c : pattern)
            if (c < 1 || c > N - 1) return false;
        return true;
    }
};

struct CheckOutcome {
    bool pass = true;
    std::string witness; // first mismatch, exact rationals; empty iff pass
};

// Canonical check list. Axis usage: n-only checks ignore factors/pattern;
// module checks ignore the pattern; multiset checks use all three.
enum class CheckAxes { n_only, module, multiset };
struct CheckInfo {
    const char* name;
    CheckAxes axes;
};
const std::vector<CheckInfo>& check_catalog();
bool is_check_name(const std::string& name);

// One named check at one sample seed. Throws DegenerateSample (and
// subclasses) when the sample hits a vanishing denominator or singular
// corner; the caller resamples.
CheckOutcome run_check(const std::string& name, const CheckParams& p, std::uint64_t seed);

// Retry wrapper: derived seeds until the check completes, up to `budget`
// degenerate samples, then SamplingExhausted.
CheckOutcome run_check_with_retries(const std::string& name, const CheckParams& p, std::uint64_t seed,
                                    int budget = 32);

} // namespace qgln
