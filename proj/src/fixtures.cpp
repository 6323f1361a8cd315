#include "vob/fixtures.hpp"

#include <initializer_list>

#include "vob/generators.hpp"

namespace vob {

namespace {

// Grids are written top row first, as the figures show them; rows are
// reversed here into the y-up layout.
GrayImage grid(int width, int height, std::initializer_list<int> topdown) {
    std::vector<PixelValue> values(topdown.size());
    auto it = topdown.begin();
    for (int row = 0; row < height; ++row)
        for (int x = 0; x < width; ++x)
            values[static_cast<std::size_t>(height - 1 - row) * width + x] =
                static_cast<PixelValue>(*it++);
    return GrayImage(width, height, std::move(values));
}

Bigrade tg(int v, int t) {
    return {static_cast<PixelValue>(v),
            Offset::finite(Metric::Taxicab, (t > 0) - (t < 0),
                           static_cast<std::uint64_t>(t < 0 ? -t : t))};
}
Bigrade tinf(int v) { return {static_cast<PixelValue>(v), Offset::neg_infinity()}; }

PaperFixture make_fig1() {
    PaperFixture f{"fig1",
                   grid(4, 4,
                        {0, 1, 2, 3,
                         1, 1, 2, 3,
                         2, 2, 2, 0,
                         1, 3, 1, 1}),
                   {},
                   {},
                   "4x4 grid with values {0,1,2,3} and its full presence table"};

    std::vector<PixelCoord> all;
    for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 4; ++x) all.push_back({x, y});
    auto except = [&](std::initializer_list<PixelCoord> skip) {
        std::vector<PixelCoord> out;
        for (PixelCoord p : all) {
            bool drop = false;
            for (PixelCoord s : skip) drop = drop || (s == p);
            if (!drop) out.push_back(p);
        }
        return out;
    };

    f.presence_frames = {
        {0, 3, all},
        {0, 2, except({{0, 0}, {1, 0}})},
        {0, 1, {{2, 1}, {3, 0}, {3, 1}, {3, 2}, {0, 2}, {0, 3}, {1, 3}}},
        {0, 0, {{3, 1}, {0, 3}}},
        {0, -1, {}},
        {0, -2, {}},
        {0, -3, {}},
        {1, 3, all},
        {1, 2, all},
        {1, 1, except({{3, 3}})},
        {1, 0, {{0, 0}, {2, 0}, {3, 0}, {3, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}},
        {1, -1, {{3, 0}, {0, 3}}},
        {1, -2, {}},
        {1, -3, {}},
        {2, 3, all},
        {2, 2, all},
        {2, 1, all},
        {2, 0, except({{1, 0}, {3, 2}, {3, 3}})},
        {2, -1, {{3, 0}, {0, 1}, {2, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}},
        {2, -2, {{0, 2}, {0, 3}}},
        {2, -3, {}},
        {3, 3, all},
        {3, 2, all},
        {3, 1, all},
        {3, 0, all},
        {3, -1, all},
        {3, -2, all},
        {3, -3, all},
    };
    f.expected = {{{3, 3}, {tg(0, 2), tg(2, 1), tinf(3)}, {tg(2, 0)}}};
    return f;
}

PaperFixture make_fig3() {
    PaperFixture f{"fig3",
                   grid(6, 6,
                        {4, 0, 2, 0, 4, 6,
                         6, 2, 6, 0, 4, 1,
                         4, 1, 1, 2, 0, 6,
                         3, 5, 5, 0, 4, 6,
                         1, 3, 1, 2, 4, 5,
                         2, 2, 1, 1, 6, 1}),
                   {},
                   {},
                   "6x6 grid shared by the presence examples and the entrance-set plot"};
    f.expected = {{{0, 0},
                   {tg(0, 5), tg(1, 1), tg(2, -1), tg(3, -2), tg(5, -3), tinf(6)},
                   {tg(1, 0), tg(2, -2), tg(4, -3), tg(5, -4)}}};
    return f;
}

PaperFixture make_fig5() {
    return PaperFixture{"fig5",
                        grid(3, 3,
                             {0, 1, 3,
                              2, 1, 0,
                              3, 2, 1}),
                        {},
                        {},
                        "3x3 grid of the best-first thickening walkthrough"};
}

PaperFixture make_fig9(bool centralized) {
    PaperFixture f{centralized ? "fig9a" : "fig9b",
                   centralized ? gen_centralized(6, 6, 4) : gen_diagonal(6, 6, 4),
                   {},
                   {},
                   centralized ? "6x6 centralized worst-case image"
                               : "6x6 diagonal worst-case image"};
    if (centralized) {
        f.expected = {{{0, 0},
                       {tg(0, 0), tg(1, -1), tg(2, -3), tinf(3)},
                       {tg(0, -1), tg(1, -2), tg(2, -4)}}};
    }
    return f;
}

}  // namespace

PaperFixture fixture(const std::string& name) {
    if (name == "fig1") return make_fig1();
    if (name == "fig3") return make_fig3();
    if (name == "fig5") return make_fig5();
    if (name == "fig9a") return make_fig9(true);
    if (name == "fig9b") return make_fig9(false);
    throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace vob
