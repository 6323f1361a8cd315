#include "vob/analytics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "vob/conversion.hpp"
#include "vob/generators.hpp"

namespace vob {

namespace {

// |sqrt(a) - sqrt(b)| >= 1 for squared magnitudes, exactly in integers:
// with a <= b, sqrt(b) - sqrt(a) >= 1  <=>  b - a - 1 >= 2 sqrt(a)
//                                      <=>  b > a and (b - a - 1)^2 >= 4a.
bool sqrt_gap_at_least_one(std::uint64_t a, std::uint64_t b) {
    if (a > b) std::swap(a, b);
    if (b <= a + 1) return a != b && a == 0;  // gap is 1 only for 0 vs 1
    const std::uint64_t d = b - a - 1;
    return d * d >= 4 * a;
}

// |t - t'| >= 1 for two finite offsets of the same metric.
bool offsets_at_least_one_apart(const Offset& a, const Offset& b) {
    if (a.metric() == Metric::Taxicab) {
        const std::int64_t av = a.sign() * static_cast<std::int64_t>(a.magnitude());
        const std::int64_t bv = b.sign() * static_cast<std::int64_t>(b.magnitude());
        return std::llabs(av - bv) >= 1;
    }
    if (a.sign() == b.sign() || a.sign() == 0 || b.sign() == 0) {
        std::uint64_t ma = a.sign() == 0 ? 0 : a.magnitude();
        std::uint64_t mb = b.sign() == 0 ? 0 : b.magnitude();
        return sqrt_gap_at_least_one(ma, mb);
    }
    // Opposite signs: the gap is sqrt(a) + sqrt(b) >= 1 unless both are zero.
    return a.magnitude() + b.magnitude() >= 1;
}

}  // namespace

StatsReport entrance_stats(const BifiltrationResult& result) {
    StatsReport r;
    r.pixels = result.entrance_sets.size();
    r.num_values = result.value_set.size();
    r.min_size = std::numeric_limits<std::size_t>::max();
    for (const EntranceSet& set : result.entrance_sets) {
        r.total_bigrades += set.size();
        r.min_size = std::min(r.min_size, set.size());
        r.max_size = std::max(r.max_size, set.size());
        ++r.size_histogram[set.size()];
    }
    if (r.pixels == 0) r.min_size = 0;
    r.average = r.pixels ? static_cast<double>(r.total_bigrades) / static_cast<double>(r.pixels)
                         : 0.0;
    return r;
}

void print_stats(const StatsReport& r, std::ostream& out) {
    out << "pixels " << r.pixels << '\n'
        << "values " << r.num_values << '\n'
        << "total_bigrades " << r.total_bigrades << '\n'
        << "avg_entrance_points " << r.average << '\n'
        << "min_entrance_points " << r.min_size << '\n'
        << "max_entrance_points " << r.max_size << '\n'
        << "histogram";
    for (const auto& [size, count] : r.size_histogram) out << ' ' << size << ':' << count;
    out << '\n';
}

DiffReport compare(const BifiltrationResult& a, const BifiltrationResult& b) {
    if (a.width != b.width || a.height != b.height)
        throw std::invalid_argument("compare: image dimensions differ");
    if (a.metric != b.metric)
        throw std::invalid_argument("compare: metrics differ");
    if (a.value_set != b.value_set)
        throw std::invalid_argument("compare: value sets differ");

    DiffReport r;
    r.pixels = a.entrance_sets.size();
    const std::vector<PixelValue>& values = a.value_set;

    for (std::size_t pi = 0; pi < a.entrance_sets.size(); ++pi) {
        const EntranceSet& sa = a.entrance_sets[pi];
        const EntranceSet& sb = b.entrance_sets[pi];
        std::size_t ia = 0, ib = 0;
        bool have_a = false, have_b = false;
        Offset ta, tb;
        for (PixelValue v : values) {
            // Staircase walk: the minimal offset at value v is the offset of
            // the last entrance point with value <= v.
            while (ia < sa.size() && sa[ia].value <= v) { ta = sa[ia].offset; have_a = true; ++ia; }
            while (ib < sb.size() && sb[ib].value <= v) { tb = sb[ib].offset; have_b = true; ++ib; }
            ++r.values_compared;
            if (!have_a && !have_b) { ++r.exact_matches; continue; }
            if (have_a != have_b) { ++r.bound_violations; ++r.undershoots; continue; }
            if (ta == tb) { ++r.exact_matches; continue; }
            // The permitted error direction follows the side of the reference
            // offset: thickening offsets may only grow (no early presence),
            // thinning offsets may only sink (no early exit, magnitudes grow).
            const bool wrong_side =
                (tb.is_neg_infinity() || tb.sign() < 0) ? tb < ta : ta < tb;
            if (wrong_side) ++r.undershoots;
            if (ta.is_neg_infinity() || tb.is_neg_infinity()) {
                ++r.bound_violations;
                continue;
            }
            if (offsets_at_least_one_apart(ta, tb)) ++r.bound_violations;
            const double err = std::fabs(ta.real_value() - tb.real_value());
            if (err > r.max_error) {
                r.max_error = err;
                r.worst_pixel = {static_cast<int>(pi % a.width), static_cast<int>(pi / a.width)};
                r.worst_value = v;
            }
        }
    }
    return r;
}

void print_diff(const DiffReport& r, std::ostream& out) {
    out << "pixels " << r.pixels << '\n'
        << "values_compared " << r.values_compared << '\n'
        << "exact_matches " << r.exact_matches << '\n'
        << "differences " << (r.values_compared - r.exact_matches) << '\n'
        << "bound_violations " << r.bound_violations << '\n'
        << "undershoots " << r.undershoots << '\n'
        << "max_error " << r.max_error << '\n'
        << "worst_pixel " << r.worst_pixel.x << ' ' << r.worst_pixel.y << " value "
        << r.worst_value << '\n';
}

std::vector<BenchRow> bench_run(const BenchConfig& config) {
    std::vector<BenchRow> rows;
    if (config.repetitions <= 0) return rows;
    for (int size : config.sizes) {
        GrayImage img = gen_random(size, size, config.num_values, config.seed);
        BenchRow row;
        row.metric = config.metric;
        row.width = row.height = size;
        row.num_values = config.num_values;
        row.seed = config.seed;
        row.pixels = static_cast<std::uint64_t>(img.pixel_count());
        row.seconds = std::numeric_limits<double>::infinity();
        for (int rep = 0; rep < config.repetitions; ++rep) {
            const auto start = std::chrono::steady_clock::now();
            BifiltrationResult result = compute_bifiltration(img, config.metric);
            const auto stop = std::chrono::steady_clock::now();
            row.total_bigrades = result.total_bigrades();
            row.seconds = std::min(row.seconds, std::chrono::duration<double>(stop - start).count());
        }
        rows.push_back(row);
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "metric,width,height,num_values,seed,pixels,total_bigrades,seconds\n";
    for (const BenchRow& r : rows) {
        out << metric_name(r.metric) << ',' << r.width << ',' << r.height << ',' << r.num_values
            << ',' << r.seed << ',' << r.pixels << ',' << r.total_bigrades << ',' << r.seconds
            << '\n';
    }
    return out.str();
}

double bench_correlation(const std::vector<BenchRow>& rows) {
    const std::size_t n = rows.size();
    if (n < 2) return 0.0;
    double mx = 0, my = 0;
    for (const BenchRow& r : rows) {
        mx += static_cast<double>(r.total_bigrades);
        my += r.seconds;
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0, sxx = 0, syy = 0;
    for (const BenchRow& r : rows) {
        const double dx = static_cast<double>(r.total_bigrades) - mx;
        const double dy = r.seconds - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0 || syy == 0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace vob
