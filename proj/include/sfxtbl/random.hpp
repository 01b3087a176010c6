#pragma once

#include <cstdint>
#include <random>

#include "sfxtbl/sequence.hpp"

namespace sfxtbl {

std::uint64_t splitmix64_next(std::uint64_t& state);

// Seedable generator with a fixed, fully specified stream: std::mt19937_64
// for the raw 64-bit output, bounded draws by rejection sampling (the
// stdlib distributions are implementation-defined, which would break
// replayability of benchmark runs).
class Prng {
public:
    explicit Prng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform draw from [0, bound); bound must be nonzero.
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

// Sub-seed for a benchmark worker: user_index + 1 steps of a splitmix64
// stream seeded with `seed`.
std::uint64_t derive_worker_seed(std::uint64_t seed, std::uint64_t user_index);

// Pattern with length uniform in [min_len, max_len] and symbols uniform over
// the alphabet. Throws BadRange when min_len is 0 or exceeds max_len.
Sequence random_pattern(Prng& rng, std::size_t min_len, std::size_t max_len,
                        const Alphabet& alphabet);

}  // namespace sfxtbl
