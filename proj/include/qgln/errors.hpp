#pragma once

#include <stdexcept>
#include <string>

namespace qgln {

// A sample point turned out to lie on some vanishing hyperplane (a zero
// denominator, a singular corner in a triangular factorization, ...).
// Harness policy: abort the current sample and retry with a fresh seed.
struct DegenerateSample : std::runtime_error {
    explicit DegenerateSample(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : DegenerateSample {
    DivisionByZero() : DegenerateSample("division by zero") {}
};

struct SingularCorner : DegenerateSample {
    SingularCorner() : DegenerateSample("singular corner in triangular factorization") {}
};

// Rejection sampling (or degeneracy retries) blew the retry budget.
struct SamplingExhausted : std::runtime_error {
    explicit SamplingExhausted(const std::string& what) : std::runtime_error(what) {}
};

// Caller bugs, not sample degeneracies.
struct ShapeMismatch : std::logic_error {
    explicit ShapeMismatch(const std::string& what) : std::logic_error(what) {}
};

struct IndexOutOfRange : std::logic_error {
    explicit IndexOutOfRange(const std::string& what) : std::logic_error(what) {}
};

struct ConfigInvalid : std::runtime_error {
    explicit ConfigInvalid(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qgln
