#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sfxtbl/sequence.hpp"

namespace sfxtbl {

// Result of a pattern search. `comparisons` counts character-level equality
// tests; `probes` counts whole-suffix comparisons and is only filled by the
// suffix-array search path.
struct SearchOutcome {
    bool found = false;
    std::optional<std::uint64_t> first_position;
    std::vector<std::uint64_t> all_positions;
    std::uint64_t occurrence_count = 0;
    std::uint64_t comparisons = 0;
    std::uint64_t probes = 0;
};

struct BruteForceResult {
    std::optional<std::uint64_t> position;
    std::uint64_t comparisons = 0;
};

// Sliding character-by-character search for the first match. Alignments run
// through i == n-m so a match ending at the text end is found. The empty
// pattern matches at position 0 with zero comparisons.
BruteForceResult brute_force_first(const Sequence& pattern, const Sequence& subject);

// All match positions, ascending. Character comparisons never exceed
// k*(N-k+1) for pattern length k and subject length N. The empty pattern
// matches at every position 0..N inclusive.
SearchOutcome brute_force_all(const Sequence& pattern, const Sequence& subject);

}  // namespace sfxtbl
