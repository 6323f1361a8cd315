#pragma once

#include "vob/core.hpp"

namespace vob {

/// Distance between two pixels under the given metric, as a non-negative
/// offset (squared magnitude for Euclidean).
Offset distance(PixelCoord p, PixelCoord q, Metric metric);

/// Presence of a pixel at a bigrade, straight from the definition:
/// t > 0: some pixel with value <= v lies within distance t of p;
/// t = 0: f(p) <= v;
/// t < 0: every pixel within distance -t of p has value <= v;
/// t = -infinity: the whole image lies in the sublevel set.
/// Throws std::out_of_range if p is outside the image.
bool present(const GrayImage& img, PixelCoord p, const Bigrade& b, Metric metric);

/// Brute-force entrance set of one pixel. Correctness over speed: one scan of
/// the whole image per pixel.
EntranceSet oracle_entrance_set(const GrayImage& img, PixelCoord p, Metric metric);

/// Brute-force complement entrance set: the maximal bigrades with t <= 0 at
/// which the pixel is absent. Values are labeled on the integer axis, matching
/// the thinning algorithms (v-1 for v in V), which coincides with the value
/// set when V is contiguous.
std::vector<Bigrade> oracle_complement_set(const GrayImage& img, PixelCoord p, Metric metric);

/// Brute-force bifiltration of a whole image; exactness flag is always exact.
BifiltrationResult oracle_bifiltration(const GrayImage& img, Metric metric);

}  // namespace vob
