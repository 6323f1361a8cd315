#include "vob/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vob {

const char* metric_name(Metric m) {
    return m == Metric::Taxicab ? "taxicab" : "euclidean";
}

double Offset::real_value() const {
    if (neg_inf_) return -std::numeric_limits<double>::infinity();
    double mag = static_cast<double>(magnitude_);
    if (metric_ == Metric::Euclidean) mag = std::sqrt(mag);
    return sign_ < 0 ? -mag : mag;
}

BigradeOrder bigrade_compare(const Bigrade& a, const Bigrade& b) {
    const Offset& oa = a.offset;
    const Offset& ob = b.offset;
    if (!oa.is_neg_infinity() && !ob.is_neg_infinity() && oa.metric() != ob.metric())
        throw std::invalid_argument("bigrade_compare: offsets carry different metrics");
    bool vle = a.value <= b.value;
    bool vge = a.value >= b.value;
    bool tle = oa <= ob;
    bool tge = oa >= ob;
    if (vle && vge && tle && tge) return BigradeOrder::Equal;
    if (vle && tle) return BigradeOrder::Less;
    if (vge && tge) return BigradeOrder::Greater;
    return BigradeOrder::Incomparable;
}

bool bigrade_le(const Bigrade& a, const Bigrade& b) {
    BigradeOrder o = bigrade_compare(a, b);
    return o == BigradeOrder::Less || o == BigradeOrder::Equal;
}

std::vector<Bigrade> minimal_points(std::vector<Bigrade> grades) {
    if (grades.empty()) return grades;
    std::sort(grades.begin(), grades.end(), [](const Bigrade& a, const Bigrade& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.offset < b.offset;
    });
    // After sorting, the minimal points are exactly the entries whose offset is
    // strictly below every offset seen at a smaller value, taking the least
    // offset per value.
    std::vector<Bigrade> out;
    std::size_t i = 0;
    while (i < grades.size()) {
        Bigrade least = grades[i];
        PixelValue v = least.value;
        while (i < grades.size() && grades[i].value == v) ++i;
        if (out.empty() || least.offset < out.back().offset) out.push_back(least);
    }
    return out;
}

bool is_staircase(const EntranceSet& set) {
    for (std::size_t i = 1; i < set.size(); ++i) {
        if (set[i - 1].value >= set[i].value) return false;
        if (!(set[i].offset < set[i - 1].offset)) return false;
    }
    return true;
}

GrayImage::GrayImage(int width, int height, std::vector<PixelValue> values)
    : width_(width), height_(height), values_(std::move(values)) {
    if (width_ < 1 || height_ < 1)
        throw std::invalid_argument("GrayImage: dimensions must be positive");
    if (values_.size() != static_cast<std::size_t>(width_) * height_)
        throw std::invalid_argument("GrayImage: value count does not match dimensions");
}

GrayImage GrayImage::filled(int width, int height, PixelValue value) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("GrayImage: dimensions must be positive");
    return GrayImage(width, height,
                     std::vector<PixelValue>(static_cast<std::size_t>(width) * height, value));
}

std::vector<PixelValue> GrayImage::value_set() const {
    std::vector<PixelValue> vs(values_);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

PixelValue GrayImage::min_value() const { return *std::min_element(values_.begin(), values_.end()); }
PixelValue GrayImage::max_value() const { return *std::max_element(values_.begin(), values_.end()); }

std::vector<PixelCoord> sublevel_set(const GrayImage& img, PixelValue v) {
    std::vector<PixelCoord> out;
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            if (img.at(x, y) <= v) out.push_back({x, y});
    return out;
}

std::uint64_t BifiltrationResult::total_bigrades() const {
    std::uint64_t total = 0;
    for (const EntranceSet& set : entrance_sets) total += set.size();
    return total;
}

}  // namespace vob
