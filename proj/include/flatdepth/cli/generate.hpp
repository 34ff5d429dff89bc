#pragma once

// Deterministic random instances.
//
// The generator is std::mt19937_64 seeded with the user seed. Integers in
// [lo, hi] are drawn by rejection: with R = hi - lo + 1 and M = 2^64 - 1, raw
// outputs at or above M - (M mod R) are discarded and the rest reduced mod R.
// No standard distribution objects are used, so output does not depend on the
// standard library implementation.

#include <cstdint>
#include <random>

#include "flatdepth/cli/io.hpp"

namespace flatdepth::cli {

class InstanceRng {
public:
    explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    RatVector integer_vector(std::size_t d, std::int64_t bound);

private:
    std::mt19937_64 engine_;
};

struct GenOptions {
    std::uint64_t seed = 0;
    std::size_t n = 10;
    std::size_t dim = 3;
    std::int64_t coord_bound = 1000;
    bool degenerate = false;
    std::optional<QueryKind> kind;  // defaults from dim
};

// Throws InputError for impossible option combinations.
InstanceFile generate(const GenOptions& opts);

// Count of coincident data points plus data points on the query flat (or
// hyperplanes containing a crossdist flat). Zero in general position.
std::size_t degeneracy_count(const InstanceFile& inst);

} // namespace flatdepth::cli
