#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_util.hpp"
#include "vob/conversion.hpp"
#include "vob/fixtures.hpp"
#include "vob/generators.hpp"
#include "vob/imgio.hpp"

using namespace vob;
using namespace vob::test;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("vob_io_" + name);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

}  // namespace

TEST_CASE("P2 PGM loads with the y-up flip") {
    auto path = temp_file("fig1.pgm");
    write_file(path,
               "P2\n# transcribed grid\n4 4\n3\n"
               "0 1 2 3\n1 1 2 3\n2 2 2 0\n1 3 1 1\n");
    GrayImage img = load_image(path.string());
    CHECK(img == fixture("fig1").image);
    CHECK(img.value_set() == std::vector<PixelValue>{0, 1, 2, 3});
    std::filesystem::remove(path);
}

TEST_CASE("1x1 P5 PGM") {
    auto path = temp_file("one.pgm");
    write_file(path, std::string("P5\n1 1\n255\n") + '\0');
    GrayImage img = load_image(path.string());
    CHECK(img.pixel_count() == 1);
    CHECK(img.at(0, 0) == 0);
    std::filesystem::remove(path);
}

TEST_CASE("PGM save/load round trip, including 16-bit") {
    auto path = temp_file("round.pgm");
    GrayImage img = gen_random(33, 17, 256, 5);
    save_pgm(img, path.string());
    CHECK(load_image(path.string()) == img);

    GrayImage wide(2, 2, {0, 300, 65535, 7});
    save_pgm(wide, path.string());
    CHECK(load_image(path.string()) == wide);
    std::filesystem::remove(path);
}

TEST_CASE("loader error cases name the offending property") {
    auto path = temp_file("bad");
    write_file(path, "GIF89a");
    CHECK_THROWS_WITH_AS(load_image(path.string()),
                         doctest::Contains("unsupported image format"), IoError);
    write_file(path, "P2\n4 x\n255\n");
    CHECK_THROWS_WITH_AS(load_image(path.string()), doctest::Contains("corrupt PGM header"),
                         IoError);
    write_file(path, "P2\n1 1\n70000\n0\n");
    CHECK_THROWS_WITH_AS(load_image(path.string()), doctest::Contains("maxval"), IoError);
    CHECK_THROWS_AS(load_image("/nonexistent/file.pgm"), IoError);
    std::filesystem::remove(path);
}

TEST_CASE("VOB writing: trivial and plotted lines") {
    GrayImage one = GrayImage::filled(1, 1, 0);
    std::ostringstream tiny;
    write_entrance_sets(compute_bifiltration(one, Metric::Taxicab), tiny);
    CHECK(tiny.str() == "VOB1 taxicab 1 1 exact\nV 0\n0 0 : (0,-inf)\n");

    GrayImage img = fixture("fig3").image;
    std::ostringstream out;
    write_entrance_sets(compute_bifiltration(img, Metric::Taxicab), out);
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "VOB1 taxicab 6 6 exact");
    std::getline(lines, line);
    CHECK(line == "V 0 1 2 3 4 5 6");
    std::getline(lines, line);
    CHECK(line == "0 0 : (0,5) (1,1) (2,-1) (3,-2) (5,-3) (6,-inf)");
}

TEST_CASE("Euclidean offsets serialize as signed squared magnitudes") {
    GrayImage img = fixture("fig3").image;
    std::ostringstream out;
    write_entrance_sets(compute_bifiltration(img, Metric::Euclidean), out);
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "VOB1 euclidean 6 6 approx");
    std::getline(lines, line);  // value set
    std::getline(lines, line);
    CHECK(line == "0 0 : (0,s13) (1,s1) (2,-s1) (3,-s4) (5,-s13) (6,-inf)");
}

TEST_CASE("write-read round trip is the identity") {
    for (Metric metric : {Metric::Taxicab, Metric::Euclidean}) {
        GrayImage img = gen_random(12, 9, 6, 13);
        BifiltrationResult result = compute_bifiltration(img, metric);
        std::ostringstream first;
        write_entrance_sets(result, first);
        std::istringstream in(first.str());
        BifiltrationResult back = read_entrance_sets(in);
        CHECK(back.metric == result.metric);
        CHECK(back.exact == result.exact);
        CHECK(back.width == result.width);
        CHECK(back.height == result.height);
        CHECK(back.value_set == result.value_set);
        CHECK(back.entrance_sets == result.entrance_sets);
        std::ostringstream second;
        write_entrance_sets(back, second);
        CHECK(second.str() == first.str());  // write . read . write is byte-stable
    }
}

TEST_CASE("VOB header parsing") {
    std::istringstream in("VOB1 euclidean 1 1 approx\nV 3\n0 0 : (3,-inf)\n");
    BifiltrationResult r = read_entrance_sets(in);
    CHECK(r.metric == Metric::Euclidean);
    CHECK_FALSE(r.exact);
}

TEST_CASE("VOB reader rejects bad input") {
    std::istringstream wrong_version("VOB2 taxicab 1 1 exact\nV 0\n0 0 : (0,-inf)\n");
    CHECK_THROWS_WITH_AS(read_entrance_sets(wrong_version), doctest::Contains("version"),
                         IoError);
    std::istringstream bad_token("VOB1 taxicab 1 1 exact\nV 0\n0 0 : (0;-inf)\n");
    CHECK_THROWS_WITH_AS(read_entrance_sets(bad_token), doctest::Contains("malformed"), IoError);
    // Offsets out of descending order violate the staircase invariant.
    std::istringstream bad_stairs(
        "VOB1 taxicab 1 1 exact\nV 0 2\n0 0 : (0,-3) (2,-1) (2,-inf)\n");
    CHECK_THROWS_WITH_AS(read_entrance_sets(bad_stairs), doctest::Contains("staircase"), IoError);
    std::istringstream truncated("VOB1 taxicab 2 2 exact\nV 0\n0 0 : (0,-inf)\n");
    CHECK_THROWS_WITH_AS(read_entrance_sets(truncated), doctest::Contains("truncated"), IoError);
    std::istringstream mixed_metric("VOB1 taxicab 1 1 exact\nV 0 1\n0 0 : (0,s2) (1,-inf)\n");
    CHECK_THROWS_AS(read_entrance_sets(mixed_metric), IoError);
}
