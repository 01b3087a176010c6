#include "sfxtbl/suffix_array.hpp"

#include <algorithm>
#include <numeric>

#include "sfxtbl/errors.hpp"

namespace sfxtbl {

namespace {

std::string_view truncated_suffix(std::string_view text, std::size_t pos,
                                  std::optional<std::size_t> truncation) {
    std::size_t len = text.size() - pos;
    if (truncation && *truncation < len) len = *truncation;
    return text.substr(pos, len);
}

std::vector<std::uint64_t> build_by_comparison(std::string_view text, const Alphabet& alphabet,
                                               std::optional<std::size_t> truncation) {
    std::vector<std::uint64_t> order(text.size());
    std::iota(order.begin(), order.end(), std::uint64_t{0});
    std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
        const int c = collate(truncated_suffix(text, a, truncation),
                              truncated_suffix(text, b, truncation), alphabet);
        if (c != 0) return c < 0;
        return a < b;
    });
    return order;
}

// Manber-Myers rank doubling. Rounds stop before the compared depth would
// exceed the truncation cap; the remainder is settled by comparing the few
// leftover characters directly.
std::vector<std::uint64_t> build_by_doubling(std::string_view text, const Alphabet& alphabet,
                                             std::optional<std::size_t> truncation) {
    const std::size_t n = text.size();
    std::vector<std::uint64_t> order(n);
    std::iota(order.begin(), order.end(), std::uint64_t{0});
    const std::size_t depth_cap = std::min(truncation.value_or(n), n);
    if (n <= 1 || depth_cap == 0) return order;

    std::vector<std::uint64_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) {
        rank[i] = static_cast<std::uint64_t>(alphabet.rank_of(text[i]));
    }
    // rank[] now orders suffixes by their first character; densify as we go.
    std::size_t depth = 1;
    std::vector<std::uint64_t> next_rank(n);
    while (depth < depth_cap && 2 * depth <= depth_cap) {
        // Key of suffix i at depth 2h: (rank(i), rank(i+h)), where a suffix
        // ending inside the window sorts before every continuation.
        auto tail = [&](std::uint64_t i) {
            return i + depth < n ? rank[i + depth] + 1 : std::uint64_t{0};
        };
        std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
            if (rank[a] != rank[b]) return rank[a] < rank[b];
            return tail(a) < tail(b);
        });
        std::uint64_t dense = 0;
        next_rank[order[0]] = 0;
        for (std::size_t k = 1; k < n; ++k) {
            const std::uint64_t cur = order[k];
            const std::uint64_t prev = order[k - 1];
            if (rank[cur] != rank[prev] || tail(cur) != tail(prev)) ++dense;
            next_rank[cur] = dense;
        }
        rank.swap(next_rank);
        depth *= 2;
        if (dense == n - 1) break;  // all suffixes already distinct
    }
    // Equal-rank groups agree on their first `depth` characters; compare the
    // remaining ones up to the cap, then break ties by position.
    auto residual = [&](std::uint64_t i) {
        const std::string_view s = truncated_suffix(text, static_cast<std::size_t>(i), depth_cap);
        return s.substr(std::min(depth, s.size()));
    };
    std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
        if (rank[a] != rank[b]) return rank[a] < rank[b];
        const int c = collate(residual(a), residual(b), alphabet);
        if (c != 0) return c < 0;
        return a < b;
    });
    return order;
}

enum class Cmp { less, match, greater };

// Three-way suffix-vs-pattern comparison where "match" means the pattern is
// a prefix of the suffix. Counts one comparison per character examined.
Cmp compare_suffix(std::string_view suffix, std::string_view pattern, const Alphabet& alphabet,
                   std::uint64_t& char_comparisons) {
    const std::size_t m = std::min(suffix.size(), pattern.size());
    for (std::size_t j = 0; j < m; ++j) {
        ++char_comparisons;
        if (suffix[j] != pattern[j]) {
            return alphabet.rank_of(suffix[j]) < alphabet.rank_of(pattern[j]) ? Cmp::less
                                                                              : Cmp::greater;
        }
    }
    if (pattern.size() <= suffix.size()) return Cmp::match;
    return Cmp::less;  // the suffix is a proper prefix of the pattern
}

void ensure_pattern_fits(const SuffixArray& sa, const Sequence& pattern) {
    if (sa.truncation() && pattern.length() > *sa.truncation()) {
        throw PatternTooLong(pattern.length(), *sa.truncation());
    }
}

std::size_t bounded_lower(const SuffixArray& sa, std::string_view pattern, std::size_t lo,
                          std::size_t hi, SaProbeStats* stats) {
    const Alphabet& alphabet = sa.text().alphabet();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        std::uint64_t chars = 0;
        const Cmp c = compare_suffix(sa.suffix_at(mid), pattern, alphabet, chars);
        if (stats) {
            ++stats->suffix_probes;
            stats->char_comparisons += chars;
        }
        if (c == Cmp::less) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    return lo;
}

std::size_t bounded_upper(const SuffixArray& sa, std::string_view pattern, std::size_t lo,
                          std::size_t hi, SaProbeStats* stats) {
    const Alphabet& alphabet = sa.text().alphabet();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        std::uint64_t chars = 0;
        const Cmp c = compare_suffix(sa.suffix_at(mid), pattern, alphabet, chars);
        if (stats) {
            ++stats->suffix_probes;
            stats->char_comparisons += chars;
        }
        if (c != Cmp::greater) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    return lo;
}

SearchOutcome empty_pattern_outcome(const SuffixArray& sa) {
    SearchOutcome out;
    out.found = true;
    out.first_position = 0;
    out.all_positions.resize(sa.text().length() + 1);
    std::iota(out.all_positions.begin(), out.all_positions.end(), std::uint64_t{0});
    out.occurrence_count = out.all_positions.size();
    return out;
}

SearchOutcome collect_run(const SuffixArray& sa, std::size_t lower, std::size_t upper,
                          const SaProbeStats& stats) {
    SearchOutcome out;
    out.all_positions.assign(sa.order().begin() + static_cast<std::ptrdiff_t>(lower),
                             sa.order().begin() + static_cast<std::ptrdiff_t>(upper));
    std::sort(out.all_positions.begin(), out.all_positions.end());
    out.found = !out.all_positions.empty();
    if (out.found) out.first_position = out.all_positions.front();
    out.occurrence_count = out.all_positions.size();
    out.probes = stats.suffix_probes;
    out.comparisons = stats.char_comparisons;
    return out;
}

}  // namespace

SuffixArray::SuffixArray(Sequence text, std::vector<std::uint64_t> order,
                         std::optional<std::size_t> truncation)
    : text_(std::move(text)), order_(std::move(order)), truncation_(truncation) {}

SuffixArray SuffixArray::build(const Sequence& text, std::optional<std::size_t> truncation,
                               SaBuilder builder) {
    std::vector<std::uint64_t> order =
        builder == SaBuilder::comparison_sort
            ? build_by_comparison(text.view(), text.alphabet(), truncation)
            : build_by_doubling(text.view(), text.alphabet(), truncation);
    return SuffixArray(text, std::move(order), truncation);
}

std::string_view SuffixArray::suffix_at(std::size_t idx) const {
    return truncated_suffix(text_.view(), static_cast<std::size_t>(order_[idx]), truncation_);
}

SuffixArray build_suffix_array(const Sequence& text, std::optional<std::size_t> truncation,
                               SaBuilder builder) {
    if (text.empty()) throw EmptyText();
    return SuffixArray::build(text, truncation, builder);
}

std::size_t sa_lower_bound(const SuffixArray& sa, const Sequence& pattern, SaProbeStats* stats) {
    ensure_pattern_fits(sa, pattern);
    return bounded_lower(sa, pattern.view(), 0, sa.size(), stats);
}

std::size_t sa_upper_bound(const SuffixArray& sa, const Sequence& pattern, SaProbeStats* stats) {
    ensure_pattern_fits(sa, pattern);
    return bounded_upper(sa, pattern.view(), 0, sa.size(), stats);
}

LetterBuckets::LetterBuckets(const Alphabet& alphabet, std::vector<Range> ranges)
    : alphabet_(&alphabet), ranges_(std::move(ranges)) {
    if (ranges_.size() != alphabet.size()) {
        throw BadRange("expected one bucket per alphabet symbol");
    }
    for (std::size_t k = 0; k < ranges_.size(); ++k) {
        if (ranges_[k].lo > ranges_[k].hi) throw BadRange("bucket range is inverted");
        if (k > 0 && ranges_[k].lo != ranges_[k - 1].hi) {
            throw BadRange("bucket ranges must be consecutive");
        }
    }
}

LetterBuckets::Range LetterBuckets::range_of(char symbol) const {
    const int rank = alphabet_->rank_of(symbol);
    if (rank < 0) return Range{0, 0};
    return ranges_[static_cast<std::size_t>(rank)];
}

LetterBuckets build_letter_buckets(const SuffixArray& sa) {
    const Alphabet& alphabet = sa.text().alphabet();
    if (sa.size() > 0 && sa.truncation() && *sa.truncation() == 0) {
        throw BadRange("letter buckets need a truncation depth of at least 1");
    }
    std::vector<LetterBuckets::Range> ranges(alphabet.size());
    std::size_t idx = 0;
    for (std::size_t r = 0; r < alphabet.size(); ++r) {
        const std::size_t lo = idx;
        while (idx < sa.size() &&
               alphabet.rank_of(sa.suffix_at(idx).front()) == static_cast<int>(r)) {
            ++idx;
        }
        ranges[r] = {lo, idx};
    }
    if (idx != sa.size()) throw BadRange("suffix order is not grouped by first symbol");
    return LetterBuckets(alphabet, std::move(ranges));
}

SearchOutcome sa_search(const SuffixArray& sa, const Sequence& pattern) {
    if (pattern.empty()) return empty_pattern_outcome(sa);
    ensure_pattern_fits(sa, pattern);
    SaProbeStats stats;
    const std::size_t lower = bounded_lower(sa, pattern.view(), 0, sa.size(), &stats);
    const std::size_t upper = bounded_upper(sa, pattern.view(), 0, sa.size(), &stats);
    return collect_run(sa, lower, upper, stats);
}

SearchOutcome sa_search(const SuffixArray& sa, const Sequence& pattern,
                        const LetterBuckets& buckets) {
    if (pattern.empty()) return empty_pattern_outcome(sa);
    ensure_pattern_fits(sa, pattern);
    SaProbeStats stats;
    const LetterBuckets::Range range = buckets.range_of(pattern.at(0));
    stats.suffix_probes += 1;  // the bucket consultation counts as one probe
    const std::size_t lower = bounded_lower(sa, pattern.view(), range.lo, range.hi, &stats);
    const std::size_t upper = bounded_upper(sa, pattern.view(), range.lo, range.hi, &stats);
    return collect_run(sa, lower, upper, stats);
}

}  // namespace sfxtbl
