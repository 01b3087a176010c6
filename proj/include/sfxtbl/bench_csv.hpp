#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "sfxtbl/bench.hpp"

namespace sfxtbl {

inline constexpr const char* kBenchCsvHeader =
    "id,user,pattern,reply_ms,reply_nanos,outcome,pattern_length";

// UTF-8, LF line endings, no quoting (patterns carry no commas).
void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records);

// Throws MalformedRow with the 1-based line number on a bad header, field
// count, or numeric field.
std::vector<BenchRecord> read_bench_csv(std::istream& in);

}  // namespace sfxtbl
