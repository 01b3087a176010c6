#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "sfxtbl/bench.hpp"
#include "sfxtbl/bench_csv.hpp"
#include "sfxtbl/errors.hpp"
#include "sfxtbl/sequence.hpp"
#include "sfxtbl/store_io.hpp"
#include "sfxtbl/tablet.hpp"

namespace {

using namespace sfxtbl;

// Owns custom alphabets so sequences can point at them for the whole run.
std::optional<Alphabet> g_custom_alphabet;
std::optional<Alphabet> g_custom_pattern_alphabet;

const Alphabet& resolve_alphabet(const std::string& spec, std::optional<Alphabet>& slot) {
    if (spec == "dna") return Alphabet::dna();
    if (spec == "latin") return Alphabet::latin();
    slot.emplace(spec, "custom");
    return *slot;
}

// Symbols a query pattern may contain; matching itself is byte-exact.
const Alphabet& query_alphabet() {
    static const Alphabet instance("ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789", "query");
    return instance;
}

NormalizePolicy parse_policy(const std::string& spec) {
    if (spec == "reject") return NormalizePolicy::reject();
    if (spec == "strip") return NormalizePolicy::strip();
    if (spec.rfind("substitute:", 0) == 0 && spec.size() == 12) {
        return NormalizePolicy::substitute(spec[11]);
    }
    throw Error("unknown policy \"" + spec + "\" (use reject, strip, or substitute:X)");
}

StoreLayout parse_layout(const std::string& spec) {
    if (spec == "suffix") return StoreLayout::suffix_keyed;
    if (spec == "position") return StoreLayout::position_keyed;
    throw Error("unknown layout \"" + spec + "\" (use suffix or position)");
}

BenchField parse_field(const std::string& spec) {
    for (const BenchField f : {BenchField::reply_ms, BenchField::reply_nanos, BenchField::outcome,
                               BenchField::pattern_length}) {
        if (spec == field_name(f)) return f;
    }
    throw Error("unknown field \"" + spec + "\"");
}

Sequence read_subject(const std::string& input, const Alphabet& alphabet,
                      const NormalizePolicy& policy) {
    if (input == "-") return read_fasta(std::cin, alphabet, policy);
    std::ifstream in(input);
    if (!in) throw Error("cannot open input file: " + input);
    return read_fasta(in, alphabet, policy);
}

void print_summary_line(std::ostream& out, const char* label, const StatsSummary& s) {
    out << std::left << std::setw(15) << label << std::right << std::setw(8) << s.n << std::setw(14)
        << s.mean << std::setw(14) << s.stddev << std::setw(12) << s.min << std::setw(12) << s.max
        << '\n';
}

void print_summaries(std::ostream& out, std::span<const BenchRecord> records) {
    out << std::left << std::setw(15) << "field" << std::right << std::setw(8) << "n"
        << std::setw(14) << "mean" << std::setw(14) << "stddev" << std::setw(12) << "min"
        << std::setw(12) << "max" << '\n';
    out << std::setprecision(4) << std::fixed;
    for (const BenchField f : CorrelationMatrix::fields) {
        print_summary_line(out, field_name(f), summarize(records, f));
    }
    print_summary_line(out, field_name(BenchField::reply_nanos),
                       summarize(records, BenchField::reply_nanos));
    out.unsetf(std::ios::floatfield);
}

void print_correlations(std::ostream& out, const CorrelationMatrix& m) {
    out << "pearson correlations (error rows excluded):\n";
    out << std::setprecision(4) << std::fixed;
    out << std::left << std::setw(16) << "";
    for (const BenchField f : CorrelationMatrix::fields) {
        out << std::right << std::setw(16) << field_name(f);
    }
    out << '\n';
    for (std::size_t i = 0; i < 3; ++i) {
        out << std::left << std::setw(16) << field_name(CorrelationMatrix::fields[i]);
        for (std::size_t j = 0; j < 3; ++j) {
            if (m.defined[i][j]) {
                out << std::right << std::setw(16) << m.coefficient[i][j];
            } else {
                out << std::right << std::setw(16) << "NA";
            }
        }
        out << '\n';
    }
    out.unsetf(std::ios::floatfield);
}

int run_ingest(const std::string& input, const std::string& output, const std::string& alphabet,
               const std::string& policy, const std::string& layout, std::uint32_t truncation,
               std::uint64_t split_threshold) {
    const Alphabet& ab = resolve_alphabet(alphabet, g_custom_alphabet);
    const Sequence subject = read_subject(input, ab, parse_policy(policy));
    const TabletStore store =
        ingest(subject, parse_layout(layout), truncation, split_threshold);
    persist(store, std::filesystem::path(output));
    std::cout << "ingested " << store.subject_length() << " symbols into "
              << store.tablets().size() << " tablet(s), " << store.total_rows() << " rows ("
              << (store.layout() == StoreLayout::suffix_keyed ? "suffix" : "position")
              << " keyed, truncation " << store.truncation() << ") -> " << output << '\n';
    return 0;
}

int run_query(const std::string& store_path, const std::string& pattern_text) {
    const TabletStore store = load(std::filesystem::path(store_path));
    const Sequence pattern =
        normalize_and_validate(pattern_text, query_alphabet(), NormalizePolicy::reject());
    const ScanResult result = scan(store, pattern);
    std::cout << "outcome: " << (result.outcome == 1 ? "found" : "not-found") << '\n';
    std::cout << "occurrences: " << result.positions.size() << '\n';
    std::cout << "positions:";
    const std::size_t shown = std::min<std::size_t>(result.positions.size(), 100);
    for (std::size_t i = 0; i < shown; ++i) std::cout << ' ' << result.positions[i];
    if (result.positions.size() > shown) {
        std::cout << " (+" << result.positions.size() - shown << " more)";
    }
    std::cout << '\n';
    std::cout << "reply_nanos: " << result.reply_nanos << '\n';
    std::cout << "reply_ms: " << result.reply_ms_clamped << '\n';
    std::cout << "rows_examined: " << result.rows_examined << '\n';
    std::cout << "tablets_visited: " << result.tablets_visited << '\n';
    return result.outcome == 1 ? 0 : 1;
}

int run_bench(const std::string& store_path, std::uint32_t users, std::uint64_t scans,
              std::size_t len_min, std::size_t len_max, std::uint64_t seed,
              const std::string& out_path, const std::string& pattern_alphabet) {
    const TabletStore store = load(std::filesystem::path(store_path));
    BenchConfig config;
    config.users = users;
    config.scans_per_user = scans;
    config.min_pattern_len = len_min;
    config.max_pattern_len = len_max;
    config.seed = seed;
    config.pattern_alphabet = &resolve_alphabet(pattern_alphabet, g_custom_pattern_alphabet);
    const BenchRun run = sfxtbl::run_bench(store, config);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot open output file: " + out_path);
        write_bench_csv(out, run.records);
        if (!out) throw Error("failed to write " + out_path);
        std::cout << "wrote " << run.records.size() << " records -> " << out_path << '\n';
    }
    std::cout << "scans: " << run.records.size() << " (" << static_cast<unsigned>(users)
              << " user(s) x " << scans << "), error rows: " << run.error_rows << '\n';
    if (run.records.size() > run.error_rows) {
        print_summaries(std::cout, run.records);
        print_correlations(std::cout, correlate(run.records));
    }
    return 0;
}

int run_stats(const std::string& input, const std::string& field_spec, std::uint64_t hist_width,
              std::string hist_out, const std::string& summary_out, const std::string& corr_out) {
    std::vector<BenchRecord> records;
    if (input == "-") {
        records = read_bench_csv(std::cin);
    } else {
        std::ifstream in(input);
        if (!in) throw Error("cannot open input file: " + input);
        records = read_bench_csv(in);
    }
    std::cout << "records: " << records.size() << '\n';
    print_summaries(std::cout, records);
    const CorrelationMatrix matrix = correlate(records);
    print_correlations(std::cout, matrix);

    const BenchField field = parse_field(field_spec);
    const auto buckets = histogram(records, field, hist_width);
    if (hist_out.empty()) hist_out = (input == "-" ? "stats" : input) + ".hist.csv";
    {
        std::ofstream out(hist_out);
        if (!out) throw Error("cannot open output file: " + hist_out);
        out << "lower_edge,count\n";
        for (const HistogramBucket& b : buckets) out << b.lower_edge << ',' << b.count << '\n';
    }
    std::cout << "histogram of " << field_name(field) << ": " << buckets.size()
              << " bucket(s) of width " << hist_width << " -> " << hist_out << '\n';

    if (!summary_out.empty()) {
        std::ofstream out(summary_out);
        if (!out) throw Error("cannot open output file: " + summary_out);
        out << "field,n,mean,stddev,min,max\n" << std::setprecision(17);
        for (const BenchField f : {BenchField::reply_ms, BenchField::reply_nanos,
                                   BenchField::outcome, BenchField::pattern_length}) {
            const StatsSummary s = summarize(records, f);
            out << field_name(f) << ',' << s.n << ',' << s.mean << ',' << s.stddev << ',' << s.min
                << ',' << s.max << '\n';
        }
    }
    if (!corr_out.empty()) {
        std::ofstream out(corr_out);
        if (!out) throw Error("cannot open output file: " + corr_out);
        out << "field_a,field_b,coefficient\n" << std::setprecision(17);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = i + 1; j < 3; ++j) {
                out << field_name(CorrelationMatrix::fields[i]) << ','
                    << field_name(CorrelationMatrix::fields[j]) << ',';
                if (matrix.defined[i][j]) {
                    out << matrix.coefficient[i][j];
                } else {
                    out << "NA";
                }
                out << '\n';
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"suffix-array tablet store workbench"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string output;
    std::string alphabet = "dna";
    std::string policy = "strip";
    std::string layout = "suffix";
    std::uint32_t truncation = kDefaultTruncation;
    std::uint64_t split_threshold = kDefaultSplitThreshold;
    CLI::App* cmd_ingest = app.add_subcommand("ingest", "build a tablet store from FASTA or text");
    cmd_ingest->add_option("--input", input, "input file, - for stdin")->capture_default_str();
    cmd_ingest->add_option("--output", output, "store file to write")->required();
    cmd_ingest->add_option("--alphabet", alphabet, "dna, latin, or custom symbols")
        ->capture_default_str();
    cmd_ingest->add_option("--policy", policy, "reject, strip, or substitute:X")
        ->capture_default_str();
    cmd_ingest->add_option("--layout", layout, "suffix or position")->capture_default_str();
    cmd_ingest->add_option("--truncation", truncation, "suffix truncation depth")
        ->capture_default_str();
    cmd_ingest->add_option("--split-threshold", split_threshold, "max rows per tablet")
        ->capture_default_str();

    std::string store_path;
    std::string pattern;
    CLI::App* cmd_query = app.add_subcommand("query", "search a store for a pattern");
    cmd_query->add_option("--store", store_path, "store file")->required();
    cmd_query->add_option("--pattern", pattern, "pattern to search")->required();

    std::uint32_t users = 1;
    std::uint64_t scans = 10000;
    std::size_t len_min = 1;
    std::size_t len_max = 100;
    std::uint64_t seed = 0;
    std::string bench_out;
    std::string pattern_alphabet = "dna";
    CLI::App* cmd_bench = app.add_subcommand("bench", "run a randomized scan benchmark");
    cmd_bench->add_option("--store", store_path, "store file")->required();
    cmd_bench->add_option("--users", users, "concurrent users")->capture_default_str();
    cmd_bench->add_option("--scans", scans, "scans per user")->capture_default_str();
    cmd_bench->add_option("--len-min", len_min, "min pattern length")->capture_default_str();
    cmd_bench->add_option("--len-max", len_max, "max pattern length")->capture_default_str();
    cmd_bench->add_option("--seed", seed, "base seed")->capture_default_str();
    cmd_bench->add_option("--out", bench_out, "CSV file for the records");
    cmd_bench->add_option("--pattern-alphabet", pattern_alphabet, "dna, latin, or custom symbols")
        ->capture_default_str();

    std::string stats_field = "reply_ms";
    std::uint64_t hist_width = 1;
    std::string hist_out;
    std::string summary_out;
    std::string corr_out;
    CLI::App* cmd_stats = app.add_subcommand("stats", "summarize a benchmark CSV");
    cmd_stats->add_option("--input", input, "CSV file, - for stdin")->capture_default_str();
    cmd_stats->add_option("--field", stats_field, "histogram field")->capture_default_str();
    cmd_stats->add_option("--hist-width", hist_width, "histogram bucket width")
        ->capture_default_str();
    cmd_stats->add_option("--hist-out", hist_out, "histogram CSV (default <input>.hist.csv)");
    cmd_stats->add_option("--summary-out", summary_out, "per-field summary CSV");
    cmd_stats->add_option("--corr-out", corr_out, "pairwise correlation CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (cmd_ingest->parsed()) {
            return run_ingest(input, output, alphabet, policy, layout, truncation,
                              split_threshold);
        }
        if (cmd_query->parsed()) return run_query(store_path, pattern);
        if (cmd_bench->parsed()) {
            return run_bench(store_path, users, scans, len_min, len_max, seed, bench_out,
                             pattern_alphabet);
        }
        if (cmd_stats->parsed()) {
            return run_stats(input, stats_field, hist_width, hist_out, summary_out, corr_out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
