#include "sfxtbl/bench.hpp"

#include <algorithm>
#include <thread>

#include "sfxtbl/errors.hpp"

namespace sfxtbl {

namespace {

// Accepts any byte string; scans compare raw bytes, so re-verification does
// not depend on the alphabet the patterns were generated from.
const Alphabet& byte_alphabet() {
    static const Alphabet alphabet = [] {
        std::string symbols(256, '\0');
        for (int i = 0; i < 256; ++i) symbols[static_cast<std::size_t>(i)] = static_cast<char>(i);
        return Alphabet(std::move(symbols), "byte");
    }();
    return alphabet;
}

int scan_outcome_of(const TabletStore& store, const Sequence& pattern, ScanResult* result) {
    try {
        ScanResult r = scan(store, pattern);
        const int outcome = r.outcome;
        if (result) *result = std::move(r);
        return outcome;
    } catch (const Error&) {
        return kOutcomeError;
    }
}

}  // namespace

std::string user_label(std::uint32_t users, std::uint32_t user_index) {
    if (users == 1) return "singlethread";
    std::size_t width = std::to_string(users - 1).size();
    if (width < 2) width = 2;
    std::string digits = std::to_string(user_index);
    return "user-" + std::string(width - digits.size(), '0') + digits;
}

BenchRun run_bench(const TabletStore& store, const BenchConfig& config) {
    if (config.users == 0) throw BadRange("benchmark needs at least one user");
    std::vector<std::vector<BenchRecord>> per_user(config.users);
    {
        std::vector<std::jthread> workers;
        workers.reserve(config.users);
        for (std::uint32_t u = 0; u < config.users; ++u) {
            workers.emplace_back([&store, &config, &slot = per_user[u], u] {
                Prng rng(derive_worker_seed(config.seed, u));
                const std::string label = user_label(config.users, u);
                slot.reserve(static_cast<std::size_t>(config.scans_per_user));
                for (std::uint64_t id = 1; id <= config.scans_per_user; ++id) {
                    const Sequence pattern =
                        random_pattern(rng, config.min_pattern_len, config.max_pattern_len,
                                       *config.pattern_alphabet);
                    BenchRecord record;
                    record.id = id;
                    record.user = label;
                    record.pattern = pattern.text();
                    record.pattern_length = pattern.length();
                    ScanResult result;
                    record.outcome = scan_outcome_of(store, pattern, &result);
                    if (record.outcome == kOutcomeError) {
                        record.reply_nanos = 0;
                        record.reply_ms = clamp_reply_ms(0);
                    } else {
                        record.reply_nanos = result.reply_nanos;
                        record.reply_ms = result.reply_ms_clamped;
                    }
                    slot.push_back(std::move(record));
                }
            });
        }
    }
    BenchRun run;
    run.records.reserve(static_cast<std::size_t>(config.scans_per_user) * config.users);
    for (auto& slot : per_user) {
        for (BenchRecord& record : slot) {
            if (record.outcome == kOutcomeError) ++run.error_rows;
            run.records.push_back(std::move(record));
        }
    }
    return run;
}

const char* field_name(BenchField field) {
    switch (field) {
        case BenchField::reply_ms: return "reply_ms";
        case BenchField::reply_nanos: return "reply_nanos";
        case BenchField::outcome: return "outcome";
        case BenchField::pattern_length: return "pattern_length";
    }
    return "unknown";
}

double field_value(const BenchRecord& record, BenchField field) {
    switch (field) {
        case BenchField::reply_ms: return static_cast<double>(record.reply_ms);
        case BenchField::reply_nanos: return static_cast<double>(record.reply_nanos);
        case BenchField::outcome: return static_cast<double>(record.outcome);
        case BenchField::pattern_length: return static_cast<double>(record.pattern_length);
    }
    return 0.0;
}

StatsSummary summarize(std::span<const BenchRecord> records, BenchField field) {
    RunningStats acc;
    for (const BenchRecord& record : records) {
        if (record.outcome == kOutcomeError) continue;
        acc.add(field_value(record, field));
    }
    if (acc.count() == 0) throw EmptyInput();
    return {acc.count(), acc.mean(), acc.sample_stddev(), acc.min(), acc.max()};
}

CorrelationMatrix correlate(std::span<const BenchRecord> records) {
    std::array<std::array<RunningCorrelation, 3>, 3> acc;
    for (const BenchRecord& record : records) {
        if (record.outcome == kOutcomeError) continue;
        std::array<double, 3> v{};
        for (std::size_t i = 0; i < 3; ++i) {
            v[i] = field_value(record, CorrelationMatrix::fields[i]);
        }
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = i + 1; j < 3; ++j) acc[i][j].add(v[i], v[j]);
        }
    }
    CorrelationMatrix matrix;
    for (std::size_t i = 0; i < 3; ++i) {
        matrix.coefficient[i][i] = 1.0;
        matrix.defined[i][i] = true;
        for (std::size_t j = i + 1; j < 3; ++j) {
            matrix.defined[i][j] = matrix.defined[j][i] = acc[i][j].defined();
            matrix.coefficient[i][j] = matrix.coefficient[j][i] = acc[i][j].coefficient();
        }
    }
    return matrix;
}

std::vector<HistogramBucket> histogram(std::span<const BenchRecord> records, BenchField field,
                                       std::uint64_t bucket_width) {
    std::vector<std::uint64_t> values;
    values.reserve(records.size());
    for (const BenchRecord& record : records) {
        if (record.outcome == kOutcomeError) continue;
        switch (field) {
            case BenchField::reply_ms: values.push_back(record.reply_ms); break;
            case BenchField::reply_nanos: values.push_back(record.reply_nanos); break;
            case BenchField::outcome:
                values.push_back(static_cast<std::uint64_t>(record.outcome));
                break;
            case BenchField::pattern_length: values.push_back(record.pattern_length); break;
        }
    }
    return histogram(std::span<const std::uint64_t>(values), bucket_width);
}

std::uint64_t reverify_outcomes(const TabletStore& store, std::span<const BenchRecord> records,
                                std::uint64_t stride) {
    if (stride == 0) throw BadRange("re-verification stride must be at least 1");
    std::uint64_t mismatches = 0;
    for (std::size_t k = 0; k < records.size(); k += static_cast<std::size_t>(stride)) {
        const BenchRecord& record = records[k];
        const Sequence pattern(record.pattern, byte_alphabet());
        if (scan_outcome_of(store, pattern, nullptr) != record.outcome) ++mismatches;
    }
    return mismatches;
}

}  // namespace sfxtbl
