#include "vob/euclidean.hpp"

#include <algorithm>
#include <queue>

namespace vob {

namespace {

struct QueueEntry {
    std::uint64_t sq_dist;
    std::uint64_t sequence;  // FIFO tie-break for equal distances
    std::int32_t pixel;
    std::int32_t root;
};

struct LaterEntry {
    bool operator()(const QueueEntry& a, const QueueEntry& b) const {
        if (a.sq_dist != b.sq_dist) return a.sq_dist > b.sq_dist;
        return a.sequence > b.sequence;
    }
};

using MinQueue = std::priority_queue<QueueEntry, std::vector<QueueEntry>, LaterEntry>;

struct ValueBuckets {
    std::vector<PixelValue> values;
    std::vector<std::vector<std::int32_t>> members;
};

ValueBuckets bucket_by_value(const GrayImage& img) {
    ValueBuckets b;
    b.values = img.value_set();
    b.members.resize(b.values.size());
    const std::vector<PixelValue>& raw = img.values();
    for (std::size_t i = 0; i < raw.size(); ++i) {
        std::size_t vi = static_cast<std::size_t>(
            std::lower_bound(b.values.begin(), b.values.end(), raw[i]) - b.values.begin());
        b.members[vi].push_back(static_cast<std::int32_t>(i));
    }
    return b;
}

// Shared engine for both passes. Thickening appends (v, +d^2); thinning
// appends (v-1, -d^2). The dominance guard compares squared magnitudes, and
// the current per-pixel minimum magnitude is always the last list element.
template <bool Thinning>
EuclideanPassOutput run_pass(const GrayImage& img) {
    const int w = img.width();
    const std::size_t n = static_cast<std::size_t>(img.pixel_count());
    ValueBuckets buckets = bucket_by_value(img);

    EuclideanPassOutput out;
    out.lists.resize(n);

    std::vector<std::int32_t> visited_at(n, -1);
    MinQueue queue;

    auto min_magnitude = [&](std::int32_t p) -> std::int64_t {
        const std::vector<GradeEntry>& list = out.lists[p];
        if (list.empty()) return -1;  // no entry yet
        return Thinning ? -list.back().offset : list.back().offset;
    };

    const std::size_t count = buckets.values.size();
    for (std::size_t step = 0; step < (Thinning ? count - 1 : count); ++step) {
        const std::size_t vi = Thinning ? count - 1 - step : step;  // skip min(V) when thinning
        const PixelValue v = buckets.values[vi];
        const PixelValue emitted = Thinning ? static_cast<PixelValue>(v - 1) : v;
        std::uint64_t sequence = 0;
        std::uint64_t last_popped = 0;
        for (std::int32_t r : buckets.members[vi]) {
            queue.push({0, sequence++, r, r});
            ++out.stats.total_pushes;
        }
        out.stats.max_queue_size = std::max<std::uint64_t>(out.stats.max_queue_size, queue.size());
        while (!queue.empty()) {
            const QueueEntry e = queue.top();
            queue.pop();
            if (e.sq_dist < last_popped) out.stats.pops_monotonic = false;
            last_popped = e.sq_dist;
            if (visited_at[e.pixel] == static_cast<std::int32_t>(vi)) continue;  // stale
            const std::int64_t current = min_magnitude(e.pixel);
            if (current >= 0 && static_cast<std::int64_t>(e.sq_dist) >= current) continue;
            out.lists[e.pixel].push_back(
                {emitted, Thinning ? -static_cast<std::int64_t>(e.sq_dist)
                                   : static_cast<std::int64_t>(e.sq_dist)});
            visited_at[e.pixel] = static_cast<std::int32_t>(vi);

            const int px = e.pixel % w;
            const int py = e.pixel / w;
            const int rx = e.root % w;
            const int ry = e.root / w;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    const int qx = px + dx;
                    const int qy = py + dy;
                    if (qx < 0 || qx >= w || qy < 0 || qy >= img.height()) continue;
                    const std::int32_t q = static_cast<std::int32_t>(qy) * w + qx;
                    if (visited_at[q] == static_cast<std::int32_t>(vi)) continue;
                    const std::int64_t ddx = qx - rx;
                    const std::int64_t ddy = qy - ry;
                    const std::uint64_t d2 = static_cast<std::uint64_t>(ddx * ddx + ddy * ddy);
                    // Entries that could never pass the pop guard are not
                    // pushed; the guard repeats on pop since the minimum may
                    // drop while the entry waits.
                    const std::int64_t qmin = min_magnitude(q);
                    if (qmin >= 0 && static_cast<std::int64_t>(d2) >= qmin) continue;
                    queue.push({d2, sequence++, q, e.root});
                    ++out.stats.total_pushes;
                    out.stats.max_queue_size =
                        std::max<std::uint64_t>(out.stats.max_queue_size, queue.size());
                }
            }
        }
    }
    if (Thinning)
        for (std::vector<GradeEntry>& list : out.lists) std::reverse(list.begin(), list.end());
    return out;
}

}  // namespace

EuclideanPassOutput euclidean_thicken(const GrayImage& img) { return run_pass<false>(img); }

EuclideanPassOutput euclidean_thin(const GrayImage& img) { return run_pass<true>(img); }

}  // namespace vob
