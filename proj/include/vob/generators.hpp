#pragma once

#include "vob/core.hpp"

namespace vob {

/// Seeded uniform random image: every pixel independently uniform over
/// {0, ..., num_values-1}. The generator is SplitMix64 with multiply-shift
/// bounding, so identical parameters give byte-identical images on every
/// platform.
GrayImage gen_random(int width, int height, int num_values, std::uint64_t seed);

/// Worst-case image with the highest values concentrated in the center,
/// decreasing towards edges and corners. Every monotone step towards the
/// center raises the value by one, so each pixel has an entrance point at
/// every value. (6,6,4) reproduces the concentric-ring layout with clipped
/// corners; when the requested value count cannot fit in the rings of a small
/// image, the profile falls back to a taxicab cone around the center pixel,
/// which preserves the same per-pixel property.
GrayImage gen_centralized(int width, int height, int num_values);

/// Worst-case image with constant values along diagonals: a triangle wave of
/// period 2(num_values-1) over x + (height-1-y), so adjacent diagonals differ
/// by exactly one value.
GrayImage gen_diagonal(int width, int height, int num_values);

}  // namespace vob
