#include "sfxtbl/brute_force.hpp"

namespace sfxtbl {

namespace {

// Tries one alignment, bumping `comparisons` once per character test.
bool match_at(std::string_view pattern, std::string_view subject, std::size_t offset,
              std::uint64_t& comparisons) {
    for (std::size_t j = 0; j < pattern.size(); ++j) {
        ++comparisons;
        if (subject[offset + j] != pattern[j]) return false;
    }
    return true;
}

}  // namespace

BruteForceResult brute_force_first(const Sequence& pattern, const Sequence& subject) {
    BruteForceResult result;
    const std::string_view p = pattern.view();
    const std::string_view s = subject.view();
    if (p.empty()) {
        result.position = 0;
        return result;
    }
    if (p.size() > s.size()) return result;
    for (std::size_t i = 0; i + p.size() <= s.size(); ++i) {
        if (match_at(p, s, i, result.comparisons)) {
            result.position = i;
            return result;
        }
    }
    return result;
}

SearchOutcome brute_force_all(const Sequence& pattern, const Sequence& subject) {
    SearchOutcome outcome;
    const std::string_view p = pattern.view();
    const std::string_view s = subject.view();
    if (p.empty()) {
        for (std::size_t i = 0; i <= s.size(); ++i) {
            outcome.all_positions.push_back(i);
        }
    } else if (p.size() <= s.size()) {
        for (std::size_t i = 0; i + p.size() <= s.size(); ++i) {
            if (match_at(p, s, i, outcome.comparisons)) {
                outcome.all_positions.push_back(i);
            }
        }
    }
    outcome.found = !outcome.all_positions.empty();
    if (outcome.found) outcome.first_position = outcome.all_positions.front();
    outcome.occurrence_count = outcome.all_positions.size();
    return outcome;
}

}  // namespace sfxtbl
