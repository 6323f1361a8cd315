#pragma once

#include "vob/core.hpp"

namespace vob {

/// Compact bigrade used by the thickening/thinning passes. The offset is a
/// signed taxicab distance, or a signed squared distance under the Euclidean
/// metric. Negative infinity never appears in pass output.
struct GradeEntry {
    PixelValue value = 0;
    std::int64_t offset = 0;

    friend bool operator==(const GradeEntry&, const GradeEntry&) = default;
};

using GradeLists = std::vector<std::vector<GradeEntry>>;

/// Instrumentation shared by the search passes; the complexity bounds in the
/// analysis are asserted against these counters.
struct PassStats {
    std::uint64_t total_pushes = 0;
    std::uint64_t max_queue_size = 0;
    bool per_pixel_value_unique = true;  // taxicab: each pixel enqueued at most once per value
    bool pops_monotonic = true;          // euclidean: pop keys non-decreasing within a value
};

struct ComputeStats {
    PassStats thicken;
    PassStats thin;
};

/// prev(r, D_p): the largest distance from p realizable within the image that
/// is strictly smaller than the magnitude r (squared magnitudes under the
/// Euclidean metric). Returns 0 when no positive realizable distance is
/// smaller. Throws std::invalid_argument for r = 0.
std::uint64_t prev_distance(std::uint64_t r, PixelCoord p, int width, int height, Metric metric);

/// Combines positive entrance lists and complement lists into final entrance
/// sets (metric-agnostic). Each complement list must be sorted ascending by
/// value; both inputs must come from matching passes over img.
BifiltrationResult convert(GradeLists bplus, GradeLists bcomp, const GrayImage& img,
                           Metric metric, bool exact);

/// Runs the metric's thickening and thinning passes, then conversion.
/// Taxicab results are exact; Euclidean results are approximate.
BifiltrationResult compute_bifiltration(const GrayImage& img, Metric metric,
                                        ComputeStats* stats = nullptr);

}  // namespace vob
