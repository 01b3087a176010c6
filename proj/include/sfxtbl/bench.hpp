#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sfxtbl/random.hpp"
#include "sfxtbl/stats.hpp"
#include "sfxtbl/tablet.hpp"

namespace sfxtbl {

struct BenchConfig {
    std::uint64_t scans_per_user = 10000;
    std::uint32_t users = 1;
    std::size_t min_pattern_len = 1;
    std::size_t max_pattern_len = 100;
    std::uint64_t seed = 0;
    const Alphabet* pattern_alphabet = &Alphabet::dna();
};

inline constexpr int kOutcomeMiss = 0;
inline constexpr int kOutcomeHit = 1;
// A scan that failed; kept in the record stream but excluded from statistics.
inline constexpr int kOutcomeError = 2;

struct BenchRecord {
    std::uint64_t id = 0;  // 1-based scan index within its user
    std::string user;
    std::string pattern;
    std::uint64_t reply_ms = 1;  // clamped, never below 1
    std::uint64_t reply_nanos = 0;
    int outcome = kOutcomeMiss;
    std::uint64_t pattern_length = 0;
    bool operator==(const BenchRecord&) const = default;
};

struct BenchRun {
    std::vector<BenchRecord> records;  // ordered by (user, id)
    std::uint64_t error_rows = 0;
};

// "singlethread" for a single-user run, zero-padded "user-NN" otherwise.
std::string user_label(std::uint32_t users, std::uint32_t user_index);

// users x scans_per_user scans against the shared store, one concurrent
// worker per user, each worker seeded from (seed, user index). Pattern
// streams are a pure function of the seeds; timings are not.
BenchRun run_bench(const TabletStore& store, const BenchConfig& config);

enum class BenchField { reply_ms, reply_nanos, outcome, pattern_length };

const char* field_name(BenchField field);
double field_value(const BenchRecord& record, BenchField field);

// Error rows are excluded from all three.
StatsSummary summarize(std::span<const BenchRecord> records, BenchField field);

// Pearson coefficients over (reply_ms, outcome, pattern_length), in that
// index order. Off-diagonal entries involving a constant field are reported
// undefined rather than 0; the diagonal stays 1.
struct CorrelationMatrix {
    static constexpr std::array<BenchField, 3> fields = {
        BenchField::reply_ms, BenchField::outcome, BenchField::pattern_length};
    std::array<std::array<double, 3>, 3> coefficient{};
    std::array<std::array<bool, 3>, 3> defined{};
};

CorrelationMatrix correlate(std::span<const BenchRecord> records);

std::vector<HistogramBucket> histogram(std::span<const BenchRecord> records, BenchField field,
                                       std::uint64_t bucket_width);

// Re-runs every stride-th record's scan and counts outcome mismatches.
std::uint64_t reverify_outcomes(const TabletStore& store, std::span<const BenchRecord> records,
                                std::uint64_t stride);

}  // namespace sfxtbl
