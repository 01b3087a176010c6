#include "sfxtbl/bench_csv.hpp"

#include <charconv>
#include <ostream>
#include <istream>
#include <string>

#include "sfxtbl/errors.hpp"

namespace sfxtbl {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t begin = 0;
    while (true) {
        const std::size_t comma = line.find(',', begin);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(begin));
            return fields;
        }
        fields.push_back(line.substr(begin, comma - begin));
        begin = comma + 1;
    }
}

template <typename T>
T parse_number(std::string_view field, std::size_t line_no, const char* what) {
    T value{};
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw MalformedRow(line_no, std::string("bad ") + what + " \"" + std::string(field) + "\"");
    }
    return value;
}

}  // namespace

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records) {
    out << kBenchCsvHeader << '\n';
    for (const BenchRecord& r : records) {
        out << r.id << ',' << r.user << ',' << r.pattern << ',' << r.reply_ms << ','
            << r.reply_nanos << ',' << r.outcome << ',' << r.pattern_length << '\n';
    }
}

std::vector<BenchRecord> read_bench_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line)) throw MalformedRow(1, "missing header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kBenchCsvHeader) throw MalformedRow(1, "unexpected header \"" + line + "\"");
    std::vector<BenchRecord> records;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::vector<std::string_view> fields = split_fields(line);
        if (fields.size() != 7) {
            throw MalformedRow(line_no, "expected 7 fields, got " + std::to_string(fields.size()));
        }
        BenchRecord r;
        r.id = parse_number<std::uint64_t>(fields[0], line_no, "id");
        r.user = std::string(fields[1]);
        r.pattern = std::string(fields[2]);
        r.reply_ms = parse_number<std::uint64_t>(fields[3], line_no, "reply_ms");
        r.reply_nanos = parse_number<std::uint64_t>(fields[4], line_no, "reply_nanos");
        r.outcome = parse_number<int>(fields[5], line_no, "outcome");
        if (r.outcome < 0 || r.outcome > 2) {
            throw MalformedRow(line_no, "outcome out of range \"" + std::string(fields[5]) + "\"");
        }
        r.pattern_length = parse_number<std::uint64_t>(fields[6], line_no, "pattern_length");
        if (r.pattern_length != r.pattern.size()) {
            throw MalformedRow(line_no, "pattern_length does not match the pattern");
        }
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace sfxtbl
