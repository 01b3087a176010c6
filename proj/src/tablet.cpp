#include "sfxtbl/tablet.hpp"

#include <algorithm>
#include <chrono>

#include "sfxtbl/errors.hpp"

namespace sfxtbl {

namespace {

void append_big_endian(std::vector<std::uint8_t>& bytes, std::uint64_t value) {
    for (int shift = 56; shift >= 0; shift -= 8) {
        bytes.push_back(static_cast<std::uint8_t>((value >> shift) & 0xFF));
    }
}

}  // namespace

RowKey position_row_key(std::uint64_t position) {
    RowKey key;
    key.bytes.reserve(8);
    append_big_endian(key.bytes, position);
    return key;
}

RowKey suffix_row_key(std::string_view suffix, std::uint64_t position) {
    RowKey key;
    key.bytes.reserve(suffix.size() + 8);
    for (char c : suffix) key.bytes.push_back(static_cast<std::uint8_t>(c));
    append_big_endian(key.bytes, position);
    return key;
}

std::optional<RowKey> prefix_successor(const RowKey& prefix) {
    RowKey next = prefix;
    while (!next.bytes.empty() && next.bytes.back() == 0xFF) next.bytes.pop_back();
    if (next.bytes.empty()) return std::nullopt;
    ++next.bytes.back();
    return next;
}

bool KeyRange::contains(const RowKey& key) const {
    if (start && key < *start) return false;
    if (end && !(key < *end)) return false;
    return true;
}

Tablet::Tablet(TabletDescriptor descriptor, std::vector<SuffixRow> rows)
    : descriptor_(std::move(descriptor)), rows_(std::move(rows)) {
    if (descriptor_.row_count != rows_.size()) {
        throw BadRange("tablet row count does not match its rows");
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (!descriptor_.range.contains(rows_[i].key)) {
            throw BadRange("tablet row outside the tablet key range");
        }
        if (i > 0 && !(rows_[i - 1].key < rows_[i].key)) {
            throw BadRange("tablet rows must be strictly increasing by key");
        }
    }
}

TabletStore::TabletStore(StoreLayout layout, std::uint32_t truncation,
                         std::uint64_t subject_length, std::uint64_t split_threshold,
                         std::vector<Tablet> tablets)
    : layout_(layout),
      truncation_(truncation),
      subject_length_(subject_length),
      split_threshold_(split_threshold),
      tablets_(std::move(tablets)) {
    if (split_threshold_ == 0) throw BadThreshold(split_threshold_);
    for (std::size_t i = 0; i < tablets_.size(); ++i) {
        const TabletDescriptor& d = tablets_[i].descriptor();
        if (d.tablet_id != i) throw BadRange("tablet ids must be sequential");
        if (d.row_count == 0) throw BadRange("tablet has no rows");
        if (d.row_count > split_threshold_) throw BadRange("tablet exceeds the split threshold");
        if (i == 0) {
            if (d.range.start) throw BadRange("first tablet must be open below");
        } else if (d.range.start != tablets_[i - 1].descriptor().range.end) {
            throw BadRange("tablet ranges must be consecutive");
        }
        if (i + 1 == tablets_.size() && d.range.end) {
            throw BadRange("last tablet must be open above");
        }
    }
}

std::uint64_t TabletStore::total_rows() const {
    std::uint64_t total = 0;
    for (const Tablet& t : tablets_) total += t.descriptor().row_count;
    return total;
}

namespace {

// Greedy chunking: full tablets of `threshold` rows, remainder in the last
// one. Boundaries sit on the first key of each later tablet.
std::vector<Tablet> chunk_rows(std::vector<SuffixRow> rows, std::uint64_t threshold) {
    std::vector<Tablet> tablets;
    if (rows.empty()) return tablets;
    const std::size_t n = rows.size();
    const std::size_t count =
        (n + static_cast<std::size_t>(threshold) - 1) / static_cast<std::size_t>(threshold);
    std::vector<std::optional<RowKey>> bounds(count + 1);
    for (std::size_t t = 1; t < count; ++t) {
        bounds[t] = rows[t * static_cast<std::size_t>(threshold)].key;
    }
    for (std::size_t t = 0; t < count; ++t) {
        const std::size_t lo = t * static_cast<std::size_t>(threshold);
        const std::size_t hi = std::min(n, lo + static_cast<std::size_t>(threshold));
        std::vector<SuffixRow> chunk(std::make_move_iterator(rows.begin() + lo),
                                     std::make_move_iterator(rows.begin() + hi));
        TabletDescriptor descriptor;
        descriptor.tablet_id = static_cast<std::uint32_t>(t);
        descriptor.range = {bounds[t], bounds[t + 1]};
        descriptor.row_count = hi - lo;
        tablets.emplace_back(std::move(descriptor), std::move(chunk));
    }
    return tablets;
}

}  // namespace

TabletStore ingest(const Sequence& text, StoreLayout layout, std::uint32_t truncation,
                   std::uint64_t split_threshold) {
    if (text.empty()) throw EmptyText();
    if (split_threshold == 0) throw BadThreshold(split_threshold);
    const std::string_view s = text.view();
    std::vector<SuffixRow> rows;
    rows.reserve(s.size());
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
        SuffixRow row;
        row.position = pos;
        std::size_t len = s.size() - pos;
        if (truncation < len) len = truncation;
        row.suffix_text = std::string(s.substr(pos, len));
        row.key = layout == StoreLayout::position_keyed
                      ? position_row_key(pos)
                      : suffix_row_key(row.suffix_text, pos);
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(),
              [](const SuffixRow& a, const SuffixRow& b) { return a.key < b.key; });
    return TabletStore(layout, truncation, s.size(), split_threshold,
                       chunk_rows(std::move(rows), split_threshold));
}

TabletStore rebalance(TabletStore store) {
    std::vector<SuffixRow> rows;
    rows.reserve(static_cast<std::size_t>(store.total_rows()));
    for (const Tablet& t : store.tablets()) {
        rows.insert(rows.end(), t.rows().begin(), t.rows().end());
    }
    return TabletStore(store.layout(), store.truncation(), store.subject_length(),
                       store.split_threshold(), chunk_rows(std::move(rows), store.split_threshold()));
}

std::uint64_t clamp_reply_ms(std::uint64_t nanos) {
    const std::uint64_t ms = nanos / 1000000;
    return ms < 1 ? 1 : ms;
}

namespace {

bool ranges_overlap(const KeyRange& tablet, const RowKey& start, const std::optional<RowKey>& end) {
    if (tablet.end && !(start < *tablet.end)) return false;
    if (end && tablet.start && !(*tablet.start < *end)) return false;
    return true;
}

void check_pattern(const TabletStore& store, const Sequence& pattern) {
    if (pattern.length() > store.truncation()) {
        throw PatternTooLong(pattern.length(), store.truncation());
    }
}

ScanResult finish_scan(ScanResult result, std::chrono::steady_clock::time_point begin) {
    const auto elapsed = std::chrono::steady_clock::now() - begin;
    result.reply_nanos = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count());
    result.reply_ms_clamped = clamp_reply_ms(result.reply_nanos);
    result.outcome = result.positions.empty() ? 0 : 1;
    return result;
}

}  // namespace

ScanResult prefix_scan(const TabletStore& store, const Sequence& pattern) {
    if (store.layout() != StoreLayout::suffix_keyed) {
        throw WrongLayout("prefix scan needs a suffix-keyed store");
    }
    check_pattern(store, pattern);
    const auto begin = std::chrono::steady_clock::now();
    RowKey start;
    for (char c : pattern.view()) start.bytes.push_back(static_cast<std::uint8_t>(c));
    const std::optional<RowKey> end = prefix_successor(start);
    ScanResult result;
    for (const Tablet& tablet : store.tablets()) {
        if (!ranges_overlap(tablet.descriptor().range, start, end)) continue;
        ++result.tablets_visited;
        const auto& rows = tablet.rows();
        auto lo = std::lower_bound(rows.begin(), rows.end(), start,
                                   [](const SuffixRow& row, const RowKey& k) { return row.key < k; });
        auto hi = end ? std::lower_bound(rows.begin(), rows.end(), *end,
                                         [](const SuffixRow& row, const RowKey& k) {
                                             return row.key < k;
                                         })
                      : rows.end();
        for (auto it = lo; it != hi; ++it) {
            ++result.rows_examined;
            if (std::string_view(it->suffix_text).starts_with(pattern.view())) {
                result.positions.push_back(it->position);
            }
        }
    }
    result = finish_scan(std::move(result), begin);
    std::sort(result.positions.begin(), result.positions.end());
    return result;
}

ScanResult filter_scan(const TabletStore& store, const Sequence& pattern) {
    if (store.layout() != StoreLayout::position_keyed) {
        throw WrongLayout("filter scan needs a position-keyed store");
    }
    check_pattern(store, pattern);
    const auto begin = std::chrono::steady_clock::now();
    ScanResult result;
    for (const Tablet& tablet : store.tablets()) {
        ++result.tablets_visited;
        for (const SuffixRow& row : tablet.rows()) {
            ++result.rows_examined;
            if (std::string_view(row.suffix_text).starts_with(pattern.view())) {
                result.positions.push_back(row.position);
            }
        }
    }
    return finish_scan(std::move(result), begin);
}

ScanResult scan(const TabletStore& store, const Sequence& pattern) {
    return store.layout() == StoreLayout::suffix_keyed ? prefix_scan(store, pattern)
                                                       : filter_scan(store, pattern);
}

}  // namespace sfxtbl
