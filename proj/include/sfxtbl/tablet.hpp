#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sfxtbl/sequence.hpp"

namespace sfxtbl {

// Byte-string row key; rows order by plain lexicographic byte comparison.
struct RowKey {
    std::vector<std::uint8_t> bytes;
    auto operator<=>(const RowKey&) const = default;
};

// 8-byte big-endian encoding, so byte order equals numeric order.
RowKey position_row_key(std::uint64_t position);
// Truncated suffix bytes followed by the big-endian position; the trailing
// position makes keys unique and implements the position tie-break.
RowKey suffix_row_key(std::string_view suffix, std::uint64_t position);

// Least key strictly greater than every key that has `prefix` as a prefix:
// increment the last byte, carrying over 0xFF bytes; nullopt when the prefix
// is empty or all 0xFF (the scan is then open-ended above).
std::optional<RowKey> prefix_successor(const RowKey& prefix);

struct SuffixRow {
    RowKey key;
    std::uint64_t position = 0;
    std::string suffix_text;
    bool operator==(const SuffixRow&) const = default;
};

// Half-open [start, end); a disengaged bound is open in that direction.
struct KeyRange {
    std::optional<RowKey> start;
    std::optional<RowKey> end;
    bool contains(const RowKey& key) const;
    bool operator==(const KeyRange&) const = default;
};

struct TabletDescriptor {
    std::uint32_t tablet_id = 0;
    KeyRange range;
    std::uint64_t row_count = 0;
};

// One contiguous key-range shard: rows sorted by key, all inside the range.
class Tablet {
public:
    Tablet(TabletDescriptor descriptor, std::vector<SuffixRow> rows);

    const TabletDescriptor& descriptor() const { return descriptor_; }
    const std::vector<SuffixRow>& rows() const { return rows_; }

private:
    TabletDescriptor descriptor_;
    std::vector<SuffixRow> rows_;
};

enum class StoreLayout : std::uint8_t {
    position_keyed = 0,  // key = position; answering a pattern needs a full filter pass
    suffix_keyed = 1,    // key = suffix bytes + position; pattern scans become range scans
};

inline constexpr std::uint32_t kDefaultTruncation = 1000;
inline constexpr std::uint64_t kDefaultSplitThreshold = 100000;

// Immutable after ingest; concurrent scans are safe.
class TabletStore {
public:
    TabletStore(StoreLayout layout, std::uint32_t truncation, std::uint64_t subject_length,
                std::uint64_t split_threshold, std::vector<Tablet> tablets);

    StoreLayout layout() const { return layout_; }
    std::uint32_t truncation() const { return truncation_; }
    std::uint64_t subject_length() const { return subject_length_; }
    std::uint64_t split_threshold() const { return split_threshold_; }
    const std::vector<Tablet>& tablets() const { return tablets_; }
    std::uint64_t total_rows() const;

private:
    StoreLayout layout_;
    std::uint32_t truncation_;
    std::uint64_t subject_length_;
    std::uint64_t split_threshold_;
    std::vector<Tablet> tablets_;
};

// One row per suffix start position; suffix text truncated to `truncation`
// characters; rows sorted by key and split into tablets of at most
// `split_threshold` rows. Throws EmptyText and BadThreshold.
TabletStore ingest(const Sequence& text, StoreLayout layout,
                   std::uint32_t truncation = kDefaultTruncation,
                   std::uint64_t split_threshold = kDefaultSplitThreshold);

// Re-chunks rows so every tablet holds at most split_threshold rows again;
// key order and coverage are preserved and the operation is idempotent.
TabletStore rebalance(TabletStore store);

struct ScanResult {
    int outcome = 0;  // 1 when at least one row matched
    std::vector<std::uint64_t> positions;
    std::uint64_t rows_examined = 0;
    std::uint32_t tablets_visited = 0;
    std::uint64_t reply_nanos = 0;
    std::uint64_t reply_ms_clamped = 1;
};

// Sub-millisecond replies clamp to 1 ms; longer replies round down.
std::uint64_t clamp_reply_ms(std::uint64_t nanos);

// Range scan over [pattern, successor(pattern)) on a suffix-keyed store;
// touches only the tablets overlapping that range. Throws WrongLayout and
// PatternTooLong.
ScanResult prefix_scan(const TabletStore& store, const Sequence& pattern);

// Full pass over every row of a position-keyed store; a row matches when its
// suffix text begins with the pattern. Throws WrongLayout and PatternTooLong.
ScanResult filter_scan(const TabletStore& store, const Sequence& pattern);

// Layout-appropriate scan: prefix_scan on suffix-keyed stores, filter_scan
// on position-keyed ones.
ScanResult scan(const TabletStore& store, const Sequence& pattern);

}  // namespace sfxtbl
