#include <doctest.h>

#include "test_util.hpp"
#include "vob/conversion.hpp"
#include "vob/fixtures.hpp"
#include "vob/generators.hpp"
#include "vob/oracle.hpp"

using namespace vob;
using namespace vob::test;

TEST_CASE("prev distance under taxicab is simply r-1") {
    CHECK(prev_distance(2, {3, 3}, 8, 8, Metric::Taxicab) == 1);
    CHECK(prev_distance(1, {0, 0}, 4, 4, Metric::Taxicab) == 0);
    CHECK_THROWS_AS(prev_distance(0, {0, 0}, 4, 4, Metric::Taxicab), std::invalid_argument);
}

TEST_CASE("prev distance under Euclidean scans the realizable squared values") {
    // From the corner of a 6x6 image the largest squared distance below 13
    // is 3^2 + 1^2 = 10.
    CHECK(prev_distance(13, {0, 0}, 6, 6, Metric::Euclidean) == 10);
    CHECK(prev_distance(1, {0, 0}, 6, 6, Metric::Euclidean) == 0);
    CHECK(prev_distance(2, {0, 0}, 6, 6, Metric::Euclidean) == 1);
    // Center pixel of a 3x3 image: realizable magnitudes are {0, 1, 2}.
    CHECK(prev_distance(9, {1, 1}, 3, 3, Metric::Euclidean) == 2);
}

TEST_CASE("prev distance matches enumeration on random queries") {
    const int w = 7, h = 5;
    for (int px = 0; px < w; ++px)
        for (int py = 0; py < h; ++py) {
            std::vector<std::uint64_t> dp;
            for (int x = 0; x < w; ++x)
                for (int y = 0; y < h; ++y)
                    dp.push_back(distance({px, py}, {x, y}, Metric::Euclidean).magnitude());
            for (std::uint64_t r = 1; r <= 80; ++r) {
                std::uint64_t expect = 0;
                for (std::uint64_t d : dp)
                    if (d < r) expect = std::max(expect, d);
                CHECK(prev_distance(r, {px, py}, w, h, Metric::Euclidean) == expect);
            }
        }
}

TEST_CASE("conversion reproduces the plotted entrance set") {
    GrayImage img = fixture("fig3").image;
    BifiltrationResult result = compute_bifiltration(img, Metric::Taxicab);
    EntranceSet expect = {tb(0, 5), tb(1, 1), tb(2, -1), tb(3, -2), tb(5, -3), binf(6)};
    CHECK(result.at({0, 0}) == expect);
    CHECK(result.exact);
}

TEST_CASE("conversion on a constant image") {
    GrayImage img = GrayImage::filled(4, 4, 9);
    BifiltrationResult result = compute_bifiltration(img, Metric::Taxicab);
    for (const EntranceSet& set : result.entrance_sets) CHECK(set == EntranceSet{binf(9)});
}

TEST_CASE("conversion on the centralized 6x6 corner") {
    GrayImage img = fixture("fig9a").image;
    BifiltrationResult result = compute_bifiltration(img, Metric::Taxicab);
    EntranceSet expect = {tb(0, 0), tb(1, -1), tb(2, -3), binf(3)};
    CHECK(result.at({0, 0}) == expect);
}

TEST_CASE("1x1 image") {
    GrayImage img = GrayImage::filled(1, 1, 0);
    BifiltrationResult result = compute_bifiltration(img, Metric::Taxicab);
    CHECK(result.entrance_sets == std::vector<EntranceSet>{{binf(0)}});
}

TEST_CASE("taxicab bifiltration equals the oracle on random images") {
    GrayImage img = gen_random(16, 16, 8, 7);
    BifiltrationResult fast = compute_bifiltration(img, Metric::Taxicab);
    BifiltrationResult slow = oracle_bifiltration(img, Metric::Taxicab);
    REQUIRE(fast.entrance_sets.size() == slow.entrance_sets.size());
    for (std::size_t i = 0; i < fast.entrance_sets.size(); ++i)
        CHECK(fast.entrance_sets[i] == slow.entrance_sets[i]);
}

TEST_CASE("entrance sets are antichains ending at (max V, -inf)") {
    GrayImage img = gen_random(20, 14, 11, 9);
    BifiltrationResult result = compute_bifiltration(img, Metric::Taxicab);
    for (const EntranceSet& set : result.entrance_sets) {
        CHECK(is_staircase(set));
        REQUIRE(!set.empty());
        CHECK(set.back().value == img.max_value());
        CHECK(set.back().offset.is_neg_infinity());
    }
}

TEST_CASE("theorem round trip: complement points and negative entrance points interleave") {
    GrayImage img = gen_random(12, 12, 6, 15);
    BifiltrationResult result = compute_bifiltration(img, Metric::Taxicab);
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x) {
            std::vector<Bigrade> comp = oracle_complement_set(img, {x, y}, Metric::Taxicab);
            const EntranceSet& ent = result.at({x, y});
            auto negatives = [&](PixelValue lo, PixelValue hi) {  // (lo, hi]
                int count = 0;
                for (const Bigrade& e : ent)
                    if ((e.offset.is_neg_infinity() || e.offset.sign() <= 0) &&
                        e.value > lo && e.value <= hi)
                        ++count;
                return count;
            };
            for (std::size_t i = 1; i < comp.size(); ++i)
                CHECK(negatives(comp[i - 1].value, comp[i].value) == 1);
            // Conversely, between consecutive negative entrance points there
            // is exactly one complement point.
            std::vector<PixelValue> neg_values;
            for (const Bigrade& e : ent)
                if (e.offset.is_neg_infinity() || e.offset.sign() < 0 ||
                    (e.offset.sign() == 0 && e.value >= img.at(x, y)))
                    neg_values.push_back(e.value);
            for (std::size_t i = 1; i < neg_values.size(); ++i) {
                int count = 0;
                for (const Bigrade& c : comp)
                    if (c.value >= neg_values[i - 1] && c.value < neg_values[i]) ++count;
                CHECK(count == 1);
            }
        }
}

TEST_CASE("presence reconstruction agrees with the brute-force oracle") {
    for (std::uint64_t seed : {2ULL, 4ULL}) {
        GrayImage img = gen_random(10, 10, 5, seed);
        BifiltrationResult result = compute_bifiltration(img, Metric::Taxicab);
        const int maxd = img.width() + img.height() - 2;
        for (int y = 0; y < img.height(); ++y)
            for (int x = 0; x < img.width(); ++x) {
                const EntranceSet& set = result.at({x, y});
                for (PixelValue v : result.value_set)
                    for (int t = -maxd; t <= maxd; ++t) {
                        Bigrade b = tb(v, t);
                        bool reconstructed = false;
                        for (const Bigrade& e : set)
                            reconstructed = reconstructed || bigrade_le(e, b);
                        CHECK(reconstructed == present(img, {x, y}, b, Metric::Taxicab));
                    }
            }
    }
}

TEST_CASE("convert rejects unsorted complement lists") {
    GrayImage img = GrayImage::filled(2, 1, 1);
    GradeLists bplus(2), bcomp(2);
    bplus[0] = {{1, 0}};
    bplus[1] = {{1, 0}};
    bcomp[0] = {{3, -2}, {1, -1}};
    CHECK_THROWS_AS(convert(std::move(bplus), std::move(bcomp), img, Metric::Taxicab, true),
                    std::invalid_argument);
}
