#pragma once

#include "vob/conversion.hpp"
#include "vob/core.hpp"

namespace vob {

struct TaxicabPassOutput {
    GradeLists lists;  // per pixel, ascending value, offsets strictly decreasing
    PassStats stats;
};

/// Multi-source breadth-first thickening over 4-connected pixels: for every
/// pixel, the minimal bigrades of R+ (positive entrance points), including
/// (f(p), 0). Exact under the taxicab metric.
TaxicabPassOutput taxicab_thicken(const GrayImage& img);

/// Breadth-first thinning: for every pixel, its complement entrance set.
/// Iterates values descending, skipping min(V); offsets are negated depths;
/// pixels of value v contribute (v-1, 0) to their own sets.
TaxicabPassOutput taxicab_thin(const GrayImage& img);

}  // namespace vob
