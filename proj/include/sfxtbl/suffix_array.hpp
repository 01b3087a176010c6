#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sfxtbl/brute_force.hpp"
#include "sfxtbl/sequence.hpp"

namespace sfxtbl {

enum class SaBuilder {
    comparison_sort,  // position sort with a truncated-suffix comparator
    prefix_doubling,  // rank-doubling; identical output, faster on repetitive text
};

// Start positions of all suffixes of a text, sorted by alphabet collation of
// the suffixes, each considered to at most `truncation` characters. Equal
// truncated suffixes are ordered by ascending start position. Immutable
// after build; concurrent searches are safe.
class SuffixArray {
public:
    static SuffixArray build(const Sequence& text,
                             std::optional<std::size_t> truncation = std::nullopt,
                             SaBuilder builder = SaBuilder::comparison_sort);

    const Sequence& text() const { return text_; }
    std::span<const std::uint64_t> order() const { return order_; }
    std::optional<std::size_t> truncation() const { return truncation_; }
    std::size_t size() const { return order_.size(); }

    // Text of the (truncated) suffix at order index idx.
    std::string_view suffix_at(std::size_t idx) const;

private:
    SuffixArray(Sequence text, std::vector<std::uint64_t> order,
                std::optional<std::size_t> truncation);

    Sequence text_;
    std::vector<std::uint64_t> order_;
    std::optional<std::size_t> truncation_;
};

// Throws EmptyText on an empty text.
SuffixArray build_suffix_array(const Sequence& text,
                               std::optional<std::size_t> truncation = std::nullopt,
                               SaBuilder builder = SaBuilder::comparison_sort);

struct SaProbeStats {
    std::uint64_t suffix_probes = 0;    // pattern-vs-suffix comparisons
    std::uint64_t char_comparisons = 0;
};

// First order index whose suffix is >= pattern / first order index past the
// run of suffixes having pattern as a prefix. Matches occupy exactly
// [lower, upper). Throws PatternTooLong when the pattern is longer than the
// truncation depth.
std::size_t sa_lower_bound(const SuffixArray& sa, const Sequence& pattern,
                           SaProbeStats* stats = nullptr);
std::size_t sa_upper_bound(const SuffixArray& sa, const Sequence& pattern,
                           SaProbeStats* stats = nullptr);

// Per-first-symbol ranges [lo, hi) of order indices, in alphabet listing
// order. Ranges are disjoint, consecutive, and cover [0, n).
class LetterBuckets {
public:
    struct Range {
        std::size_t lo = 0;
        std::size_t hi = 0;
        std::size_t width() const { return hi - lo; }
        bool operator==(const Range&) const = default;
    };

    LetterBuckets(const Alphabet& alphabet, std::vector<Range> ranges);

    Range range_of(char symbol) const;
    const std::vector<Range>& ranges() const { return ranges_; }
    const Alphabet& alphabet() const { return *alphabet_; }

private:
    const Alphabet* alphabet_;
    std::vector<Range> ranges_;
};

LetterBuckets build_letter_buckets(const SuffixArray& sa);

// Binary search over the suffix order; with buckets, the search is confined
// to the pattern's first-letter range after one bucket consultation (counted
// as a probe). Without buckets the probe count stays within
// 2*(floor(log2 n)+1).
SearchOutcome sa_search(const SuffixArray& sa, const Sequence& pattern);
SearchOutcome sa_search(const SuffixArray& sa, const Sequence& pattern,
                        const LetterBuckets& buckets);

}  // namespace sfxtbl
