#pragma once

#include "vob/conversion.hpp"
#include "vob/core.hpp"

namespace vob {

struct EuclideanPassOutput {
    GradeLists lists;  // per pixel, ascending value; offsets are signed squared distances
    PassStats stats;
};

/// Best-first thickening over 8-connected pixels with root propagation.
/// Offsets are exact for non-debris pixels; for debris pixels the emitted
/// distance t' overshoots the true distance t by strictly less than one unit
/// (t <= t' < t + 1).
EuclideanPassOutput euclidean_thicken(const GrayImage& img);

/// Best-first thinning, the mirror of euclidean_thicken: values descending
/// from max(V), skipping min(V); pixels of value v seed (v-1, 0); emitted
/// complement magnitudes d' satisfy d <= d' < d + 1.
EuclideanPassOutput euclidean_thin(const GrayImage& img);

}  // namespace vob
