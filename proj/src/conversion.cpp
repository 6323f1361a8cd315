#include "vob/conversion.hpp"

#include <algorithm>
#include <cmath>

#include "vob/euclidean.hpp"
#include "vob/taxicab.hpp"

namespace vob {

namespace {

std::uint64_t integer_sqrt(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

std::uint64_t prev_distance(std::uint64_t r, PixelCoord p, int width, int height, Metric metric) {
    if (r == 0) throw std::invalid_argument("prev_distance: r must be positive");
    if (metric == Metric::Taxicab) return r - 1;
    // Euclidean: largest a^2 + b^2 < r with a, b bounded by the farthest image
    // column and row reachable from p.
    const std::uint64_t a_max = static_cast<std::uint64_t>(std::max(p.x, width - 1 - p.x));
    const std::uint64_t b_max = static_cast<std::uint64_t>(std::max(p.y, height - 1 - p.y));
    std::uint64_t best = 0;
    for (std::uint64_t a = 0; a <= a_max; ++a) {
        const std::uint64_t a2 = a * a;
        if (a2 >= r) break;
        const std::uint64_t b = std::min(b_max, integer_sqrt(r - 1 - a2));
        best = std::max(best, a2 + b * b);
    }
    return best;
}

BifiltrationResult convert(GradeLists bplus, GradeLists bcomp, const GrayImage& img,
                           Metric metric, bool exact) {
    if (bplus.size() != static_cast<std::size_t>(img.pixel_count()) ||
        bcomp.size() != bplus.size())
        throw std::invalid_argument("convert: pass outputs do not match the image");

    BifiltrationResult result;
    result.metric = metric;
    result.width = img.width();
    result.height = img.height();
    result.value_set = img.value_set();
    result.exact = exact;
    result.entrance_sets.resize(bplus.size());

    const PixelValue min_v = result.value_set.front();
    const PixelValue max_v = result.value_set.back();

    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            const PixelCoord p{x, y};
            const std::size_t pi = img.index(p);
            std::vector<GradeEntry> entries = std::move(bplus[pi]);
            const std::vector<GradeEntry>& comp = bcomp[pi];
            const PixelValue fp = img.at(p);

            if (fp == min_v && !comp.empty()) {
                // The first negative entrance point does not lie between two
                // complement points; it comes from the smallest complement
                // magnitude, which is the front of the ascending list.
                const std::uint64_t mag = prev_distance(
                    static_cast<std::uint64_t>(-comp.front().offset), p, img.width(),
                    img.height(), metric);
                if (mag > 0 && !entries.empty() && entries.back().value == min_v &&
                    entries.back().offset == 0) {
                    entries.back() = {min_v, -static_cast<std::int64_t>(mag)};
                }
            }
            for (std::size_t i = 1; i < comp.size(); ++i) {
                if (comp[i - 1].value >= comp[i].value)
                    throw std::invalid_argument("convert: complement list not sorted by value");
                const PixelValue v = static_cast<PixelValue>(comp[i - 1].value + 1);
                const std::uint64_t mag = prev_distance(
                    static_cast<std::uint64_t>(-comp[i].offset), p, img.width(), img.height(),
                    metric);
                if (v == fp && mag == 0) continue;
                if (v == fp && !entries.empty() && entries.back().value == fp &&
                    entries.back().offset == 0)
                    entries.pop_back();
                if (mag > 0) entries.push_back({v, -static_cast<std::int64_t>(mag)});
            }

            std::vector<Bigrade> grades;
            grades.reserve(entries.size() + 1);
            for (const GradeEntry& e : entries) {
                const int sign = (e.offset > 0) - (e.offset < 0);
                grades.push_back({e.value, Offset::finite(metric, sign,
                                                          static_cast<std::uint64_t>(
                                                              e.offset < 0 ? -e.offset : e.offset))});
            }
            grades.push_back({max_v, Offset::neg_infinity()});
            result.entrance_sets[pi] = minimal_points(std::move(grades));
            bcomp[pi].clear();
            bcomp[pi].shrink_to_fit();
        }
    }
    return result;
}

BifiltrationResult compute_bifiltration(const GrayImage& img, Metric metric,
                                        ComputeStats* stats) {
    if (metric == Metric::Taxicab) {
        TaxicabPassOutput thick = taxicab_thicken(img);
        TaxicabPassOutput thin = taxicab_thin(img);
        if (stats) {
            stats->thicken = thick.stats;
            stats->thin = thin.stats;
        }
        return convert(std::move(thick.lists), std::move(thin.lists), img, metric, true);
    }
    EuclideanPassOutput thick = euclidean_thicken(img);
    EuclideanPassOutput thin = euclidean_thin(img);
    if (stats) {
        stats->thicken = thick.stats;
        stats->thin = thin.stats;
    }
    return convert(std::move(thick.lists), std::move(thin.lists), img, metric, false);
}

}  // namespace vob
