#include "sfxtbl/random.hpp"

#include <limits>

#include "sfxtbl/errors.hpp"

namespace sfxtbl {

std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t Prng::below(std::uint64_t bound) {
    if (bound == 0) throw BadRange("bound must be nonzero");
    // Rejection sampling over the largest multiple of bound.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw;
    do {
        draw = engine_();
    } while (draw >= limit);
    return draw % bound;
}

std::uint64_t derive_worker_seed(std::uint64_t seed, std::uint64_t user_index) {
    std::uint64_t state = seed;
    std::uint64_t derived = 0;
    for (std::uint64_t i = 0; i <= user_index; ++i) {
        derived = splitmix64_next(state);
    }
    return derived;
}

Sequence random_pattern(Prng& rng, std::size_t min_len, std::size_t max_len,
                        const Alphabet& alphabet) {
    if (min_len == 0) throw BadRange("minimum pattern length must be at least 1");
    if (min_len > max_len) {
        throw BadRange("pattern length range [" + std::to_string(min_len) + ", " +
                       std::to_string(max_len) + "] is inverted");
    }
    const std::size_t len = min_len + static_cast<std::size_t>(rng.below(max_len - min_len + 1));
    std::string text;
    text.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        text.push_back(alphabet.symbol_at(static_cast<std::size_t>(rng.below(alphabet.size()))));
    }
    return Sequence(std::move(text), alphabet);
}

}  // namespace sfxtbl
