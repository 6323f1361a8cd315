#include "vob/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "vob/conversion.hpp"

namespace vob {

namespace {

std::uint64_t raw_distance(PixelCoord p, PixelCoord q, Metric metric) {
    std::int64_t dx = std::abs(static_cast<std::int64_t>(p.x) - q.x);
    std::int64_t dy = std::abs(static_cast<std::int64_t>(p.y) - q.y);
    if (metric == Metric::Taxicab) return static_cast<std::uint64_t>(dx + dy);
    return static_cast<std::uint64_t>(dx * dx + dy * dy);
}

constexpr std::uint64_t kNoDistance = std::numeric_limits<std::uint64_t>::max();

// For each value index i: the least distance from p to a pixel with value
// <= V[i] (min_le) and to a pixel with value > V[i] (min_gt, kNoDistance when
// no such pixel exists).
void nearest_by_value(const GrayImage& img, PixelCoord p, Metric metric,
                      const std::vector<PixelValue>& values,
                      std::vector<std::uint64_t>& min_le, std::vector<std::uint64_t>& min_gt) {
    std::vector<std::uint64_t> at_value(values.size(), kNoDistance);
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            std::uint64_t d = raw_distance(p, {x, y}, metric);
            std::size_t i = static_cast<std::size_t>(
                std::lower_bound(values.begin(), values.end(), img.at(x, y)) - values.begin());
            at_value[i] = std::min(at_value[i], d);
        }
    }
    min_le.assign(values.size(), kNoDistance);
    min_gt.assign(values.size(), kNoDistance);
    std::uint64_t run = kNoDistance;
    for (std::size_t i = 0; i < values.size(); ++i) {
        run = std::min(run, at_value[i]);
        min_le[i] = run;
    }
    run = kNoDistance;
    for (std::size_t i = values.size(); i-- > 0;) {
        min_gt[i] = run;
        run = std::min(run, at_value[i]);
    }
}

EntranceSet entrance_from_nearest(const GrayImage& img, PixelCoord p, Metric metric,
                                  const std::vector<PixelValue>& values,
                                  const std::vector<std::uint64_t>& min_le,
                                  const std::vector<std::uint64_t>& min_gt) {
    std::vector<Bigrade> candidates;
    PixelValue fp = img.at(p);
    for (std::size_t i = 0; i < values.size(); ++i) {
        PixelValue v = values[i];
        if (fp > v) {
            candidates.push_back({v, Offset::thickening(metric, min_le[i])});
        } else if (min_gt[i] == kNoDistance) {
            candidates.push_back({v, Offset::neg_infinity()});
        } else {
            std::uint64_t mag = prev_distance(min_gt[i], p, img.width(), img.height(), metric);
            candidates.push_back({v, mag == 0 ? Offset::zero(metric)
                                              : Offset::thinning(metric, mag)});
        }
    }
    return minimal_points(std::move(candidates));
}

}  // namespace

Offset distance(PixelCoord p, PixelCoord q, Metric metric) {
    return Offset::finite(metric, p == q ? 0 : 1, raw_distance(p, q, metric));
}

bool present(const GrayImage& img, PixelCoord p, const Bigrade& b, Metric metric) {
    if (!img.in_bounds(p))
        throw std::out_of_range("present: pixel outside image bounds");
    const Offset& t = b.offset;
    if (t.is_neg_infinity()) {
        return img.max_value() <= b.value;
    }
    if (t.sign() == 0) return img.at(p) <= b.value;
    if (t.sign() > 0) {
        for (int y = 0; y < img.height(); ++y)
            for (int x = 0; x < img.width(); ++x)
                if (img.at(x, y) <= b.value && raw_distance(p, {x, y}, metric) <= t.magnitude())
                    return true;
        return false;
    }
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            if (raw_distance(p, {x, y}, metric) <= t.magnitude() && img.at(x, y) > b.value)
                return false;
    return true;
}

EntranceSet oracle_entrance_set(const GrayImage& img, PixelCoord p, Metric metric) {
    std::vector<PixelValue> values = img.value_set();
    std::vector<std::uint64_t> min_le, min_gt;
    nearest_by_value(img, p, metric, values, min_le, min_gt);
    return entrance_from_nearest(img, p, metric, values, min_le, min_gt);
}

std::vector<Bigrade> oracle_complement_set(const GrayImage& img, PixelCoord p, Metric metric) {
    std::vector<PixelValue> values = img.value_set();
    std::vector<std::uint64_t> min_le, min_gt;
    nearest_by_value(img, p, metric, values, min_le, min_gt);

    PixelValue fp = img.at(p);
    std::vector<Bigrade> candidates;
    if (fp > values.front())
        candidates.push_back({static_cast<PixelValue>(fp - 1), Offset::zero(metric)});
    for (std::size_t i = 0; i < values.size(); ++i)
        if (min_gt[i] != kNoDistance)
            candidates.push_back({values[i], Offset::thinning(metric, min_gt[i])});

    std::sort(candidates.begin(), candidates.end(), [](const Bigrade& a, const Bigrade& b) {
        if (a.value != b.value) return a.value < b.value;
        return b.offset < a.offset;
    });
    // Maximal points: walk values descending, keeping the greatest offset per
    // value; a candidate survives iff its offset strictly exceeds every offset
    // seen at a larger value.
    std::vector<Bigrade> out;
    for (std::size_t i = candidates.size(); i-- > 0;) {
        if (i + 1 < candidates.size() && candidates[i].value == candidates[i + 1].value) continue;
        if (out.empty() || candidates[i].offset > out.back().offset) out.push_back(candidates[i]);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

BifiltrationResult oracle_bifiltration(const GrayImage& img, Metric metric) {
    BifiltrationResult result;
    result.metric = metric;
    result.width = img.width();
    result.height = img.height();
    result.value_set = img.value_set();
    result.exact = true;
    result.entrance_sets.reserve(static_cast<std::size_t>(img.pixel_count()));
    std::vector<std::uint64_t> min_le, min_gt;
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            nearest_by_value(img, {x, y}, metric, result.value_set, min_le, min_gt);
            result.entrance_sets.push_back(
                entrance_from_nearest(img, {x, y}, metric, result.value_set, min_le, min_gt));
        }
    }
    return result;
}

}  // namespace vob
