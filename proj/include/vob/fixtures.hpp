#pragma once

#include <string>

#include "vob/core.hpp"

namespace vob {

/// One transcribed presence frame: the pixels present at (value, offset).
struct PresenceFrame {
    PixelValue value = 0;
    int offset = 0;  // taxicab
    std::vector<PixelCoord> pixels;
};

/// Expected per-pixel artifacts bundled with a fixture grid.
struct ExpectedSets {
    PixelCoord pixel{0, 0};
    EntranceSet entrance;            // taxicab, empty when not transcribed
    std::vector<Bigrade> complement; // taxicab, empty when not transcribed
};

/// A test grid transcribed digit-for-digit from its source figure, together
/// with the artifacts the figure shows for it.
struct PaperFixture {
    std::string name;
    GrayImage image;
    std::vector<PresenceFrame> presence_frames;  // fig1 only
    std::vector<ExpectedSets> expected;
    std::string provenance;
};

/// Known names: fig1, fig3, fig5, fig9a, fig9b. Throws std::invalid_argument
/// for anything else.
PaperFixture fixture(const std::string& name);

}  // namespace vob
