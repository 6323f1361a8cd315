#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "vob/core.hpp"

namespace vob {

struct StatsReport {
    std::uint64_t pixels = 0;
    std::size_t num_values = 0;
    std::uint64_t total_bigrades = 0;
    double average = 0.0;  // total_bigrades / pixels
    std::size_t min_size = 0;
    std::size_t max_size = 0;
    std::map<std::size_t, std::uint64_t> size_histogram;
};

StatsReport entrance_stats(const BifiltrationResult& result);
void print_stats(const StatsReport& report, std::ostream& out);

/// Per-value minimal presence offsets reconstructed from the staircases,
/// compared pixel by pixel. All bound checks are integer-exact; the real-
/// valued error is reported for reading only.
struct DiffReport {
    std::uint64_t pixels = 0;
    std::uint64_t values_compared = 0;   // pixels x |V|
    std::uint64_t exact_matches = 0;     // offsets identical
    std::uint64_t bound_violations = 0;  // |t_v - t'_v| >= 1
    std::uint64_t undershoots = 0;       // a errs in the disallowed direction
    double max_error = 0.0;
    PixelCoord worst_pixel{0, 0};
    PixelValue worst_value = 0;
};

/// Compares result a against reference b (same dimensions, same metric).
/// "Undershoot" counts the places where a errs in the disallowed direction:
/// below b on the thickening side or above b on the thinning side. A correct
/// approximation compared against the oracle has none.
DiffReport compare(const BifiltrationResult& a, const BifiltrationResult& b);
void print_diff(const DiffReport& report, std::ostream& out);

struct BenchConfig {
    std::vector<int> sizes;  // square image edge lengths
    int num_values = 256;
    Metric metric = Metric::Taxicab;
    int repetitions = 1;
    std::uint64_t seed = 0;
};

struct BenchRow {
    Metric metric;
    int width = 0;
    int height = 0;
    int num_values = 0;
    std::uint64_t seed = 0;
    std::uint64_t pixels = 0;
    std::uint64_t total_bigrades = 0;
    double seconds = 0.0;  // minimum over repetitions
};

/// Generates a random image per size and times compute_bifiltration.
/// Zero repetitions produce no rows.
std::vector<BenchRow> bench_run(const BenchConfig& config);

/// CSV with header `metric,width,height,num_values,seed,pixels,total_bigrades,seconds`.
std::string bench_csv(const std::vector<BenchRow>& rows);

/// Pearson correlation of seconds against total bigrades.
double bench_correlation(const std::vector<BenchRow>& rows);

}  // namespace vob
