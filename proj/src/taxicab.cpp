#include "vob/taxicab.hpp"

#include <algorithm>

namespace vob {

namespace {

// Pixel indices bucketed by value, buckets ordered ascending by value.
// Within a bucket the indices are in row-major order, which fixes the seed
// order of every breadth-first search and makes runs reproducible.
struct ValueBuckets {
    std::vector<PixelValue> values;           // sorted distinct
    std::vector<std::vector<std::int32_t>> members;  // parallel to values
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

}  // namespace

TaxicabPassOutput taxicab_thicken(const GrayImage& img) {
    const int w = img.width();
    const std::size_t n = static_cast<std::size_t>(img.pixel_count());
    ValueBuckets buckets = bucket_by_value(img);

    TaxicabPassOutput out;
    out.lists.resize(n);

    std::vector<std::int32_t> depth(n, 0);
    std::vector<std::int32_t> enqueued_at(n, -1);  // value index of last enqueue
    std::vector<std::int32_t> queue;
    queue.reserve(n);

    for (std::size_t vi = 0; vi < buckets.values.size(); ++vi) {
        const PixelValue v = buckets.values[vi];
        queue.clear();
        std::size_t head = 0;
        for (std::int32_t p : buckets.members[vi]) {
            depth[p] = 0;
            out.lists[p].push_back({v, 0});
            if (enqueued_at[p] == static_cast<std::int32_t>(vi))
                out.stats.per_pixel_value_unique = false;
            enqueued_at[p] = static_cast<std::int32_t>(vi);
            queue.push_back(p);
            ++out.stats.total_pushes;
        }
        out.stats.max_queue_size = std::max<std::uint64_t>(out.stats.max_queue_size, queue.size());
        while (head < queue.size()) {
            const std::int32_t p = queue[head++];
            const std::int32_t t = depth[p] + 1;
            const int px = p % w;
            const std::int32_t nbr[4] = {px > 0 ? p - 1 : -1, px + 1 < w ? p + 1 : -1,
                                         p >= w ? p - w : -1, p + w < static_cast<std::int32_t>(n) ? p + w : -1};
            for (std::int32_t q : nbr) {
                if (q < 0) continue;
                std::vector<GradeEntry>& list = out.lists[q];
                // The list grows with strictly decreasing offsets, so the
                // current minimum is the last element.
                if (!list.empty() && t >= list.back().offset) continue;
                depth[q] = t;
                list.push_back({v, t});
                if (enqueued_at[q] == static_cast<std::int32_t>(vi))
                    out.stats.per_pixel_value_unique = false;
                enqueued_at[q] = static_cast<std::int32_t>(vi);
                queue.push_back(q);
                ++out.stats.total_pushes;
                out.stats.max_queue_size =
                    std::max<std::uint64_t>(out.stats.max_queue_size, queue.size() - head);
            }
        }
    }
    return out;
}

TaxicabPassOutput taxicab_thin(const GrayImage& img) {
    const int w = img.width();
    const std::size_t n = static_cast<std::size_t>(img.pixel_count());
    ValueBuckets buckets = bucket_by_value(img);

    TaxicabPassOutput out;
    out.lists.resize(n);

    std::vector<std::int32_t> depth(n, 0);
    std::vector<std::int32_t> enqueued_at(n, -1);
    std::vector<std::int32_t> queue;
    queue.reserve(n);

    for (std::size_t vi = buckets.values.size(); vi-- > 1;) {  // skip min(V)
        const PixelValue v = buckets.values[vi];
        queue.clear();
        std::size_t head = 0;
        for (std::int32_t p : buckets.members[vi]) {
            depth[p] = 0;
            out.lists[p].push_back({static_cast<PixelValue>(v - 1), 0});
            if (enqueued_at[p] == static_cast<std::int32_t>(vi))
                out.stats.per_pixel_value_unique = false;
            enqueued_at[p] = static_cast<std::int32_t>(vi);
            queue.push_back(p);
            ++out.stats.total_pushes;
        }
        out.stats.max_queue_size = std::max<std::uint64_t>(out.stats.max_queue_size, queue.size());
        while (head < queue.size()) {
            const std::int32_t p = queue[head++];
            const std::int32_t t = depth[p] + 1;
            const int px = p % w;
            const std::int32_t nbr[4] = {px > 0 ? p - 1 : -1, px + 1 < w ? p + 1 : -1,
                                         p >= w ? p - w : -1, p + w < static_cast<std::int32_t>(n) ? p + w : -1};
            for (std::int32_t q : nbr) {
                if (q < 0) continue;
                std::vector<GradeEntry>& list = out.lists[q];
                // Offsets are negated depths; the magnitudes shrink along the
                // list, so the current minimum magnitude is the last element.
                if (!list.empty() && t >= -list.back().offset) continue;
                depth[q] = t;
                list.push_back({static_cast<PixelValue>(v - 1), -t});
                if (enqueued_at[q] == static_cast<std::int32_t>(vi))
                    out.stats.per_pixel_value_unique = false;
                enqueued_at[q] = static_cast<std::int32_t>(vi);
                queue.push_back(q);
                ++out.stats.total_pushes;
                out.stats.max_queue_size =
                    std::max<std::uint64_t>(out.stats.max_queue_size, queue.size() - head);
            }
        }
    }
    // Thinning visits values descending; conversion wants ascending lists.
    for (std::vector<GradeEntry>& list : out.lists) std::reverse(list.begin(), list.end());
    return out;
}

}  // namespace vob
