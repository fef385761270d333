#pragma once

#include <cstdint>
#include <vector>

#include "qgln/scalar.hpp"

namespace qgln {

// A generic evaluation point: the deformation parameter q, one spectral
// parameter per tensor factor of the module, and one variable per multiset
// position. Identities that hold as rational functions are checked as exact
// Scalar equalities at many such points (Schwartz-Zippel style); any
// division by zero along the way aborts the sample and the caller retries
// with the next seed.
struct SamplePoint {
    Scalar q;
    std::vector<Scalar> z; // spectral parameters, one per module factor
    std::vector<Scalar> t; // variables, one per multiset position
    std::uint64_t seed = 0;
};

// Deterministic in (seed, num_factors, multiset_size). Every value is drawn
// as p/r with p, r uniform in [1, 10^4]; draws are rejected until
// q is not 0 or +-1 and all z, t values are pairwise distinct (they are
// nonzero by construction). Throws SamplingExhausted after 10^4 rejections.
SamplePoint sample_point(std::uint64_t seed, int num_factors, int multiset_size);

// True iff the SamplePoint invariants hold; used by tests and the sampler.
bool sample_point_valid(const SamplePoint& sp);

// Deterministic derived seed for the k-th degeneracy retry of a base seed.
std::uint64_t retry_seed(std::uint64_t base, int attempt);

} // namespace qgln
