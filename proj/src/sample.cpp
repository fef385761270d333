#include "qgln/sample.hpp"

#include <random>

namespace qgln {

namespace {

constexpr int kRange = 10000;
constexpr int kMaxRejects = 10000;

Scalar draw_ratio(std::mt19937_64& gen) {
    // gen() % n has negligible bias here and, unlike
    // std::uniform_int_distribution, is identical across standard libraries.
    long p = static_cast<long>(gen() % kRange) + 1;
    long r = static_cast<long>(gen() % kRange) + 1;
    return Scalar(p, r);
}

} // namespace

SamplePoint sample_point(std::uint64_t seed, int num_factors, int multiset_size) {
    if (num_factors < 0 || multiset_size < 0)
        throw ConfigInvalid("sample_point: negative sizes");
    std::mt19937_64 gen(seed);
    SamplePoint sp;
    sp.seed = seed;
    int rejects = 0;
    auto give_up = [&] {
        if (++rejects > kMaxRejects)
            throw SamplingExhausted("sample_point: rejection budget exceeded");
    };

    sp.q = draw_ratio(gen);
    while (sp.q.is_one()) { // positive by construction, so only q = 1 to avoid
        give_up();
        sp.q = draw_ratio(gen);
    }

    std::vector<Scalar> all;
    all.reserve(static_cast<std::size_t>(num_factors + multiset_size));
    while (static_cast<int>(all.size()) < num_factors + multiset_size) {
        Scalar c = draw_ratio(gen);
        bool clash = false;
        for (const Scalar& prev : all)
            if (prev == c) { clash = true; break; }
        if (clash) { give_up(); continue; }
        all.push_back(c);
    }
    sp.z.assign(all.begin(), all.begin() + num_factors);
    sp.t.assign(all.begin() + num_factors, all.end());
    return sp;
}

bool sample_point_valid(const SamplePoint& sp) {
    if (sp.q.is_zero() || sp.q.is_one() || sp.q == Scalar(-1)) return false;
    std::vector<const Scalar*> all;
    for (const Scalar& s : sp.z) all.push_back(&s);
    for (const Scalar& s : sp.t) all.push_back(&s);
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (all[i]->is_zero()) return false;
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (*all[i] == *all[j]) return false;
    }
    return true;
}

std::uint64_t retry_seed(std::uint64_t base, int attempt) {
    if (attempt == 0) return base;
    // splitmix64 step keyed by attempt; any fixed mixing would do
    std::uint64_t x = base + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(attempt);
    x ^= x >> 30; x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27; x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

} // namespace qgln
