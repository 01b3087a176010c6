#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace sfxtbl {

// Welford single-pass mean/variance with extrema.
class RunningStats {
public:
    void add(double x) {
        ++n_;
        const double dx = x - mean_;
        mean_ += dx / static_cast<double>(n_);
        m2_ += dx * (x - mean_);
        if (x < min_) min_ = x;
        if (x > max_) max_ = x;
    }

    std::uint64_t count() const { return n_; }
    double mean() const { return mean_; }
    // n-1 divisor; 0 by convention when fewer than two values.
    double sample_stddev() const;
    double min() const { return min_; }
    double max() const { return max_; }

private:
    std::uint64_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
    double min_ = std::numeric_limits<double>::infinity();
    double max_ = -std::numeric_limits<double>::infinity();
};

// Single-pass Pearson accumulator.
class RunningCorrelation {
public:
    void add(double x, double y) {
        ++n_;
        const double inv = 1.0 / static_cast<double>(n_);
        const double weight = static_cast<double>(n_ - 1) * inv;
        const double dx = x - mean_x_;
        const double dy = y - mean_y_;
        sum_xx_ += weight * dx * dx;
        sum_yy_ += weight * dy * dy;
        sum_xy_ += weight * dx * dy;
        mean_x_ += dx * inv;
        mean_y_ += dy * inv;
    }

    std::uint64_t count() const { return n_; }
    // False when either side is constant; the coefficient is then undefined.
    bool defined() const { return sum_xx_ > 0.0 && sum_yy_ > 0.0; }
    double coefficient() const;

private:
    std::uint64_t n_ = 0;
    double mean_x_ = 0.0;
    double mean_y_ = 0.0;
    double sum_xx_ = 0.0;
    double sum_yy_ = 0.0;
    double sum_xy_ = 0.0;
};

struct StatsSummary {
    std::uint64_t n = 0;
    double mean = 0.0;
    double stddev = 0.0;
    double min = 0.0;
    double max = 0.0;
};

// Throws EmptyInput on an empty span.
StatsSummary summarize(std::span<const double> values);

struct HistogramBucket {
    std::uint64_t lower_edge = 0;
    std::uint64_t count = 0;
    bool operator==(const HistogramBucket&) const = default;
};

// Fixed-width buckets anchored at the minimum value; zero-count buckets
// between min and max are included, so counts sum to the input size.
// Throws EmptyInput and BadRange (width 0).
std::vector<HistogramBucket> histogram(std::span<const std::uint64_t> values,
                                       std::uint64_t bucket_width);

}  // namespace sfxtbl
