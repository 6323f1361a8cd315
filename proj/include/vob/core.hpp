#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vob {

using PixelValue = std::uint16_t;

enum class Metric : std::uint8_t { Taxicab, Euclidean };

const char* metric_name(Metric m);

/// Pixel coordinates: x grows rightward, y grows upward (figure convention).
/// File ingestion flips rows so that row 0 of a stored image is y = 0.
struct PixelCoord {
    int x = 0;
    int y = 0;

    friend bool operator==(const PixelCoord&, const PixelCoord&) = default;
};

/// An offset in the bifiltration, exact by construction.
///
/// Finite offsets carry a sign and a non-negative integer magnitude. Under the
/// taxicab metric the magnitude is the distance itself; under the Euclidean
/// metric it is the *squared* distance, so comparisons stay integer-exact.
/// Negative infinity is a distinct variant, ordered below every finite offset.
class Offset {
public:
    Offset() = default;  // zero under the taxicab metric

    static Offset neg_infinity() {
        Offset o;
        o.neg_inf_ = true;
        o.sign_ = -1;
        o.magnitude_ = 0;
        return o;
    }
    static Offset zero(Metric m) { return finite(m, 0, 0); }
    static Offset finite(Metric m, int sign, std::uint64_t magnitude) {
        if (magnitude == 0) sign = 0;
        if (sign == 0 && magnitude != 0)
            throw std::invalid_argument("Offset: zero sign requires zero magnitude");
        Offset o;
        o.neg_inf_ = false;
        o.metric_ = m;
        o.sign_ = static_cast<std::int8_t>(sign);
        o.magnitude_ = magnitude;
        return o;
    }
    static Offset thickening(Metric m, std::uint64_t magnitude) { return finite(m, 1, magnitude); }
    static Offset thinning(Metric m, std::uint64_t magnitude) { return finite(m, -1, magnitude); }

    bool is_neg_infinity() const { return neg_inf_; }
    int sign() const { return sign_; }
    std::uint64_t magnitude() const { return magnitude_; }
    Metric metric() const { return metric_; }

    /// Offset as a real number (sqrt of the magnitude for Euclidean offsets);
    /// -infinity maps to -HUGE_VAL. For reporting only, never for ordering.
    double real_value() const;

    /// Total order consistent with the real-valued offset.
    friend bool operator<(const Offset& a, const Offset& b) {
        if (a.neg_inf_ || b.neg_inf_) return a.neg_inf_ && !b.neg_inf_;
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        if (a.sign_ >= 0) return a.magnitude_ < b.magnitude_;
        return a.magnitude_ > b.magnitude_;
    }
    friend bool operator==(const Offset& a, const Offset& b) {
        if (a.neg_inf_ || b.neg_inf_) return a.neg_inf_ == b.neg_inf_;
        return a.sign_ == b.sign_ && a.magnitude_ == b.magnitude_;
    }
    friend bool operator!=(const Offset& a, const Offset& b) { return !(a == b); }
    friend bool operator<=(const Offset& a, const Offset& b) { return a < b || a == b; }
    friend bool operator>(const Offset& a, const Offset& b) { return b < a; }
    friend bool operator>=(const Offset& a, const Offset& b) { return b <= a; }

private:
    std::uint64_t magnitude_ = 0;
    Metric metric_ = Metric::Taxicab;
    std::int8_t sign_ = 0;
    bool neg_inf_ = false;
};

/// An index pair (value, offset) into the value-offset bifiltration.
struct Bigrade {
    PixelValue value = 0;
    Offset offset;

    friend bool operator==(const Bigrade&, const Bigrade&) = default;
};

enum class BigradeOrder { Less, Greater, Equal, Incomparable };

/// Componentwise partial order on bigrades. Throws std::invalid_argument if
/// the offsets carry different metrics (their magnitudes are not commensurable).
BigradeOrder bigrade_compare(const Bigrade& a, const Bigrade& b);

/// True iff a is less than or equal to b in the partial order.
bool bigrade_le(const Bigrade& a, const Bigrade& b);

/// The minimal elements of a set of bigrades, as a staircase: values strictly
/// increasing, offsets strictly decreasing. Duplicates collapse.
std::vector<Bigrade> minimal_points(std::vector<Bigrade> grades);

/// The set of entrance points of one pixel, stored as a staircase.
/// A full entrance set ends with (max value, -infinity).
using EntranceSet = std::vector<Bigrade>;

/// Checks the staircase shape: values strictly increasing, offsets strictly
/// decreasing (an antichain in the partial order).
bool is_staircase(const EntranceSet& set);

/// Rectangular grayscale image, immutable after construction.
/// Values are stored row-major with y increasing upward.
class GrayImage {
public:
    GrayImage(int width, int height, std::vector<PixelValue> values);

    static GrayImage filled(int width, int height, PixelValue value);

    int width() const { return width_; }
    int height() const { return height_; }
    std::int64_t pixel_count() const { return static_cast<std::int64_t>(width_) * height_; }

    bool in_bounds(PixelCoord p) const {
        return p.x >= 0 && p.x < width_ && p.y >= 0 && p.y < height_;
    }
    std::size_t index(PixelCoord p) const {
        return static_cast<std::size_t>(p.y) * width_ + p.x;
    }
    PixelValue at(PixelCoord p) const { return values_[index(p)]; }
    PixelValue at(int x, int y) const { return at(PixelCoord{x, y}); }
    const std::vector<PixelValue>& values() const { return values_; }

    /// V = im(f): the sorted distinct values occurring in the image.
    std::vector<PixelValue> value_set() const;

    PixelValue min_value() const;
    PixelValue max_value() const;

    friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
    int width_;
    int height_;
    std::vector<PixelValue> values_;
};

/// f^-_v: pixels with value <= v, in row-major order.
std::vector<PixelCoord> sublevel_set(const GrayImage& img, PixelValue v);

/// Per-pixel entrance sets for a whole image, plus metadata.
struct BifiltrationResult {
    Metric metric = Metric::Taxicab;
    int width = 0;
    int height = 0;
    std::vector<PixelValue> value_set;
    bool exact = true;
    std::vector<EntranceSet> entrance_sets;  // row-major, y-up

    const EntranceSet& at(PixelCoord p) const {
        return entrance_sets[static_cast<std::size_t>(p.y) * width + p.x];
    }
    std::uint64_t total_bigrades() const;
};

}  // namespace vob
