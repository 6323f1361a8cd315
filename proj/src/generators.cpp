#include "vob/generators.hpp"

#include <algorithm>
#include <cstdlib>

namespace vob {

namespace {

// SplitMix64 (Steele, Lea, Flood 2014). Fixed here so that seeded fixtures
// stay stable across implementations.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Multiply-shift bounded sample, bias < 2^-48 for bounds up to 2^16.
    std::uint32_t next_below(std::uint32_t bound) {
        return static_cast<std::uint32_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }
};

void check_params(int width, int height, int num_values) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("generator: dimensions must be positive");
    if (num_values < 1 || num_values > 65536)
        throw std::invalid_argument("generator: num_values must be in [1, 65536]");
}

}  // namespace

GrayImage gen_random(int width, int height, int num_values, std::uint64_t seed) {
    check_params(width, height, num_values);
    SplitMix64 rng{seed};
    std::vector<PixelValue> values(static_cast<std::size_t>(width) * height);
    for (PixelValue& v : values)
        v = static_cast<PixelValue>(rng.next_below(static_cast<std::uint32_t>(num_values)));
    return GrayImage(width, height, std::move(values));
}

GrayImage gen_centralized(int width, int height, int num_values) {
    check_params(width, height, num_values);
    const int k = num_values;
    const int max_ring = (std::min(width, height) - 1) / 2;
    const int ring_levels = (width <= 2 && height <= 2) ? 1 : 1 + std::min(max_ring + 1, k - 1);
    const int max_diamond = (width / 2) + (height / 2);  // ceil((dim-1)/2) each
    const int diamond_levels = std::min(k, max_diamond + 1);

    std::vector<PixelValue> values(static_cast<std::size_t>(width) * height);
    if (diamond_levels > ring_levels) {
        const int cx = (width - 1) / 2;
        const int cy = (height - 1) / 2;
        for (int y = 0; y < height; ++y)
            for (int x = 0; x < width; ++x)
                values[static_cast<std::size_t>(y) * width + x] = static_cast<PixelValue>(
                    k - 1 - std::min(k - 1, std::abs(x - cx) + std::abs(y - cy)));
    } else {
        for (int y = 0; y < height; ++y) {
            for (int x = 0; x < width; ++x) {
                const bool corner =
                    (x == 0 || x == width - 1) && (y == 0 || y == height - 1);
                const int ring = std::min(std::min(x, y), std::min(width - 1 - x, height - 1 - y));
                values[static_cast<std::size_t>(y) * width + x] =
                    static_cast<PixelValue>(corner ? 0 : std::min(ring + 1, k - 1));
            }
        }
    }
    return GrayImage(width, height, std::move(values));
}

GrayImage gen_diagonal(int width, int height, int num_values) {
    check_params(width, height, num_values);
    const int k = num_values;
    std::vector<PixelValue> values(static_cast<std::size_t>(width) * height, 0);
    if (k > 1) {
        const int period = 2 * (k - 1);
        for (int y = 0; y < height; ++y)
            for (int x = 0; x < width; ++x) {
                const int s = (x + (height - 1 - y)) % period;
                values[static_cast<std::size_t>(y) * width + x] =
                    static_cast<PixelValue>((k - 1) - std::abs(s - (k - 1)));
            }
    }
    return GrayImage(width, height, std::move(values));
}

}  // namespace vob
