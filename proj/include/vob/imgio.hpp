#pragma once

#include <iosfwd>
#include <string>

#include "vob/core.hpp"

namespace vob {

/// Errors raised by the readers and writers; the message names the offending
/// property (format, header field, token, invariant).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Loads a PGM (P2 or P5, maxval up to 65535) or an 8-bit grayscale PNG.
/// File rows are stored top-down; they are flipped so that y grows upward.
GrayImage load_image(const std::string& path);

/// Writes a binary PGM (P5), flipping rows back to top-down order.
/// Maxval is 255 when every value fits in 8 bits, 65535 otherwise.
void save_pgm(const GrayImage& img, const std::string& path);

/// VOB text format v1:
///   line 1: `VOB1 <taxicab|euclidean> <width> <height> <exact|approx>`
///   line 2: `V <v1> <v2> ...` ascending
///   then one line per pixel, row-major y-up: `<x> <y> : (<v>,<off>) ...`
/// Taxicab offsets are signed decimal integers; `-inf` is negative infinity;
/// Euclidean offsets are `s<m>` / `-s<m>` with m the squared magnitude, and
/// plain `0` for zero. Output is byte-deterministic.
void write_entrance_sets(const BifiltrationResult& result, std::ostream& out);
void write_entrance_sets(const BifiltrationResult& result, const std::string& path);

/// Inverse of write_entrance_sets. Rejects version mismatches, malformed
/// bigrade tokens, and staircase-invariant violations.
BifiltrationResult read_entrance_sets(std::istream& in);
BifiltrationResult read_entrance_sets(const std::string& path);

}  // namespace vob
