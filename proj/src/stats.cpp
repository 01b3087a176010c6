#include "sfxtbl/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sfxtbl/errors.hpp"

namespace sfxtbl {

double RunningStats::sample_stddev() const {
    if (n_ <= 1) return 0.0;
    return std::sqrt(m2_ / static_cast<double>(n_ - 1));
}

double RunningCorrelation::coefficient() const {
    if (!defined()) return std::numeric_limits<double>::quiet_NaN();
    const double r = sum_xy_ / std::sqrt(sum_xx_ * sum_yy_);
    return std::clamp(r, -1.0, 1.0);
}

StatsSummary summarize(std::span<const double> values) {
    if (values.empty()) throw EmptyInput();
    RunningStats acc;
    for (double v : values) acc.add(v);
    return {acc.count(), acc.mean(), acc.sample_stddev(), acc.min(), acc.max()};
}

std::vector<HistogramBucket> histogram(std::span<const std::uint64_t> values,
                                       std::uint64_t bucket_width) {
    if (values.empty()) throw EmptyInput();
    if (bucket_width == 0) throw BadRange("bucket width must be at least 1");
    const auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
    const std::uint64_t lo = *min_it;
    const std::uint64_t span = *max_it - lo;
    const std::uint64_t buckets = span / bucket_width + 1;
    constexpr std::uint64_t kMaxBuckets = 10000000;
    if (buckets > kMaxBuckets) {
        throw BadRange("histogram would need " + std::to_string(buckets) +
                       " buckets; increase the bucket width");
    }
    std::vector<HistogramBucket> out(static_cast<std::size_t>(buckets));
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k].lower_edge = lo + static_cast<std::uint64_t>(k) * bucket_width;
    }
    for (std::uint64_t v : values) {
        ++out[static_cast<std::size_t>((v - lo) / bucket_width)].count;
    }
    return out;
}

}  // namespace sfxtbl
