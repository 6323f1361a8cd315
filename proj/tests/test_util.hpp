#pragma once

#include <initializer_list>
#include <vector>

#include "vob/core.hpp"
#include "vob/oracle.hpp"

namespace vob::test {

// Image from values listed top row first, mirroring how grids are drawn.
inline GrayImage grid(int width, int height, std::initializer_list<int> topdown) {
    std::vector<PixelValue> values(topdown.size());
    auto it = topdown.begin();
    for (int row = 0; row < height; ++row)
        for (int x = 0; x < width; ++x)
            values[static_cast<std::size_t>(height - 1 - row) * width + x] =
                static_cast<PixelValue>(*it++);
    return GrayImage(width, height, std::move(values));
}

inline Bigrade tb(int v, int t) {
    return {static_cast<PixelValue>(v),
            Offset::finite(Metric::Taxicab, (t > 0) - (t < 0),
                           static_cast<std::uint64_t>(t < 0 ? -t : t))};
}
inline Bigrade eb(int v, int sign, std::uint64_t sqmag) {
    return {static_cast<PixelValue>(v), Offset::finite(Metric::Euclidean, sign, sqmag)};
}
inline Bigrade binf(int v) { return {static_cast<PixelValue>(v), Offset::neg_infinity()}; }

// Second, maximally dumb reference: enumerate every discrete bigrade
// (v in V, t over all realizable +/- distances from p, plus -infinity),
// keep the ones where the pixel is present, and take minimal points.
// Independent of the staircase reasoning in oracle_entrance_set.
inline EntranceSet dumb_entrance_set(const GrayImage& img, PixelCoord p, Metric metric) {
    std::vector<std::uint64_t> dist;
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            dist.push_back(distance(p, {x, y}, metric).magnitude());

    std::vector<Bigrade> in_region;
    for (PixelValue v : img.value_set()) {
        std::vector<Bigrade> candidates;
        for (std::uint64_t d : dist) {
            candidates.push_back({v, Offset::finite(metric, d == 0 ? 0 : 1, d)});
            candidates.push_back({v, Offset::finite(metric, d == 0 ? 0 : -1, d)});
        }
        candidates.push_back({v, Offset::neg_infinity()});
        for (const Bigrade& b : candidates)
            if (present(img, p, b, metric)) in_region.push_back(b);
    }
    return minimal_points(std::move(in_region));
}

}  // namespace vob::test
