#include "vob/imgio.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace vob {

namespace {

// ---- PGM ----

// Reads the next header token, treating '#' comments as whitespace.
std::string pgm_token(std::istream& in) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
            continue;
        }
        if (std::isspace(c)) {
            if (!tok.empty()) break;
            continue;
        }
        tok.push_back(static_cast<char>(c));
    }
    return tok;
}

long parse_header_number(std::istream& in, const char* field) {
    std::string tok = pgm_token(in);
    long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
        throw IoError(std::string("corrupt PGM header: bad ") + field);
    return value;
}

GrayImage flip_rows(int width, int height, std::vector<PixelValue> topdown) {
    std::vector<PixelValue> values(topdown.size());
    for (int row = 0; row < height; ++row) {
        std::copy_n(topdown.begin() + static_cast<std::size_t>(row) * width, width,
                    values.begin() + static_cast<std::size_t>(height - 1 - row) * width);
    }
    return GrayImage(width, height, std::move(values));
}

GrayImage load_pgm(std::istream& in, bool binary) {
    long width = parse_header_number(in, "width");
    long height = parse_header_number(in, "height");
    long maxval = parse_header_number(in, "maxval");
    if (width < 1 || height < 1) throw IoError("corrupt PGM header: non-positive dimensions");
    if (maxval < 1) throw IoError("corrupt PGM header: non-positive maxval");
    if (maxval > 65535) throw IoError("PGM maxval exceeds 65535");

    std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    std::vector<PixelValue> data(count);
    if (binary) {
        // Header ends with exactly one whitespace byte, already consumed by
        // the token reader.
        if (maxval > 255) {
            std::vector<unsigned char> raw(count * 2);
            in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
            if (static_cast<std::size_t>(in.gcount()) != raw.size())
                throw IoError("corrupt PGM: truncated pixel data");
            for (std::size_t i = 0; i < count; ++i)
                data[i] = static_cast<PixelValue>((raw[2 * i] << 8) | raw[2 * i + 1]);
        } else {
            std::vector<unsigned char> raw(count);
            in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
            if (static_cast<std::size_t>(in.gcount()) != raw.size())
                throw IoError("corrupt PGM: truncated pixel data");
            for (std::size_t i = 0; i < count; ++i) data[i] = raw[i];
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            long v = parse_header_number(in, "sample");
            if (v < 0 || v > maxval) throw IoError("corrupt PGM: sample out of range");
            data[i] = static_cast<PixelValue>(v);
        }
    }
    return flip_rows(static_cast<int>(width), static_cast<int>(height), std::move(data));
}

// ---- PNG ----

struct PngReader {
    png_structp png = nullptr;
    png_infop info = nullptr;
    std::FILE* file = nullptr;

    ~PngReader() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
        if (file) std::fclose(file);
    }
};

GrayImage load_png(const std::string& path) {
    PngReader r;
    r.file = std::fopen(path.c_str(), "rb");
    if (!r.file) throw IoError("cannot open file: " + path);
    r.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!r.png) throw IoError("PNG reader initialization failed");
    r.info = png_create_info_struct(r.png);
    if (!r.info) throw IoError("PNG reader initialization failed");
    if (setjmp(png_jmpbuf(r.png))) throw IoError("corrupt PNG: " + path);

    png_init_io(r.png, r.file);
    png_read_info(r.png, r.info);

    const png_uint_32 width = png_get_image_width(r.png, r.info);
    const png_uint_32 height = png_get_image_height(r.png, r.info);
    const int color = png_get_color_type(r.png, r.info);
    const int depth = png_get_bit_depth(r.png, r.info);
    if (color != PNG_COLOR_TYPE_GRAY)
        throw IoError("color PNG not supported; convert to grayscale first");
    if (depth != 8) throw IoError("unsupported PNG bit depth (only 8-bit grayscale)");

    png_read_update_info(r.png, r.info);
    std::vector<unsigned char> raw(static_cast<std::size_t>(width) * height);
    std::vector<png_bytep> rows(height);
    for (png_uint_32 i = 0; i < height; ++i) rows[i] = raw.data() + static_cast<std::size_t>(i) * width;
    png_read_image(r.png, rows.data());

    std::vector<PixelValue> data(raw.begin(), raw.end());
    return flip_rows(static_cast<int>(width), static_cast<int>(height), std::move(data));
}

// ---- VOB ----

void write_offset(std::ostream& out, const Offset& o, Metric metric) {
    if (o.is_neg_infinity()) {
        out << "-inf";
    } else if (metric == Metric::Taxicab) {
        if (o.sign() < 0) out << '-';
        out << o.magnitude();
    } else if (o.sign() == 0) {
        out << '0';
    } else {
        if (o.sign() < 0) out << '-';
        out << 's' << o.magnitude();
    }
}

Offset parse_offset(const std::string& tok, Metric metric) {
    if (tok == "-inf") return Offset::neg_infinity();
    std::string body = tok;
    int sign = 1;
    if (!body.empty() && body[0] == '-') {
        sign = -1;
        body.erase(0, 1);
    }
    bool squared = !body.empty() && body[0] == 's';
    if (squared) body.erase(0, 1);
    if (squared != (metric == Metric::Euclidean) && !(body == "0" && !squared))
        throw IoError("malformed bigrade token: offset '" + tok + "' does not match metric");
    std::uint64_t mag = 0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), mag);
    if (ec != std::errc() || ptr != body.data() + body.size() || body.empty())
        throw IoError("malformed bigrade token: offset '" + tok + "'");
    return Offset::finite(metric, mag == 0 ? 0 : sign, mag);
}

}  // namespace

GrayImage load_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    unsigned char magic[2] = {0, 0};
    in.read(reinterpret_cast<char*>(magic), 2);
    if (in.gcount() == 2 && magic[0] == 'P' && (magic[1] == '2' || magic[1] == '5'))
        return load_pgm(in, magic[1] == '5');
    if (in.gcount() == 2 && magic[0] == 0x89 && magic[1] == 'P') {
        in.close();
        return load_png(path);
    }
    throw IoError("unsupported image format (expected PGM P2/P5 or grayscale PNG): " + path);
}

void save_pgm(const GrayImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open file for writing: " + path);
    const bool wide = img.max_value() > 255;
    out << "P5\n" << img.width() << ' ' << img.height() << '\n' << (wide ? 65535 : 255) << '\n';
    for (int y = img.height() - 1; y >= 0; --y) {
        for (int x = 0; x < img.width(); ++x) {
            PixelValue v = img.at(x, y);
            if (wide) out.put(static_cast<char>(v >> 8));
            out.put(static_cast<char>(v & 0xFF));
        }
    }
    if (!out) throw IoError("write failed: " + path);
}

void write_entrance_sets(const BifiltrationResult& result, std::ostream& out) {
    out << "VOB1 " << metric_name(result.metric) << ' ' << result.width << ' ' << result.height
        << ' ' << (result.exact ? "exact" : "approx") << '\n';
    out << 'V';
    for (PixelValue v : result.value_set) out << ' ' << v;
    out << '\n';
    for (int y = 0; y < result.height; ++y) {
        for (int x = 0; x < result.width; ++x) {
            out << x << ' ' << y << " :";
            for (const Bigrade& b : result.at({x, y})) {
                out << " (" << b.value << ',';
                write_offset(out, b.offset, result.metric);
                out << ')';
            }
            out << '\n';
        }
    }
}

void write_entrance_sets(const BifiltrationResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open file for writing: " + path);
    write_entrance_sets(result, out);
    if (!out) throw IoError("write failed: " + path);
}

BifiltrationResult read_entrance_sets(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty VOB file");
    std::istringstream header(line);
    std::string version, metric_tok, exact_tok;
    BifiltrationResult result;
    header >> version >> metric_tok >> result.width >> result.height >> exact_tok;
    if (version != "VOB1") throw IoError("VOB version mismatch: got '" + version + "'");
    if (!header || result.width < 1 || result.height < 1)
        throw IoError("corrupt VOB header");
    if (metric_tok == "taxicab") result.metric = Metric::Taxicab;
    else if (metric_tok == "euclidean") result.metric = Metric::Euclidean;
    else throw IoError("corrupt VOB header: unknown metric '" + metric_tok + "'");
    if (exact_tok == "exact") result.exact = true;
    else if (exact_tok == "approx") result.exact = false;
    else throw IoError("corrupt VOB header: unknown exactness '" + exact_tok + "'");

    if (!std::getline(in, line)) throw IoError("missing VOB value-set line");
    std::istringstream vline(line);
    std::string tag;
    vline >> tag;
    if (tag != "V") throw IoError("missing VOB value-set line");
    long v;
    while (vline >> v) {
        if (v < 0 || v > 65535) throw IoError("VOB value out of range");
        if (!result.value_set.empty() && result.value_set.back() >= v)
            throw IoError("VOB value set not strictly increasing");
        result.value_set.push_back(static_cast<PixelValue>(v));
    }
    if (result.value_set.empty()) throw IoError("VOB value set empty");

    const std::size_t count =
        static_cast<std::size_t>(result.width) * static_cast<std::size_t>(result.height);
    result.entrance_sets.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (!std::getline(in, line)) throw IoError("truncated VOB file");
        std::istringstream ls(line);
        int x, yy;
        std::string colon;
        ls >> x >> yy >> colon;
        if (!ls || colon != ":")
            throw IoError("malformed VOB pixel line: '" + line + "'");
        std::size_t expect = static_cast<std::size_t>(yy) * result.width + x;
        if (expect != i) throw IoError("VOB pixel lines out of order");
        EntranceSet& set = result.entrance_sets[i];
        std::string tok;
        while (ls >> tok) {
            if (tok.size() < 5 || tok.front() != '(' || tok.back() != ')')
                throw IoError("malformed bigrade token: '" + tok + "'");
            std::string inner = tok.substr(1, tok.size() - 2);
            std::size_t comma = inner.find(',');
            if (comma == std::string::npos)
                throw IoError("malformed bigrade token: '" + tok + "'");
            long value = 0;
            const char* vb = inner.data();
            auto [p1, e1] = std::from_chars(vb, vb + comma, value);
            if (e1 != std::errc() || p1 != vb + comma || value < 0 || value > 65535)
                throw IoError("malformed bigrade token: '" + tok + "'");
            Offset off = parse_offset(inner.substr(comma + 1), result.metric);
            set.push_back({static_cast<PixelValue>(value), off});
        }
        if (set.empty()) throw IoError("empty entrance set in VOB file");
        if (!is_staircase(set))
            throw IoError("staircase invariant violation in VOB entrance set");
        if (!(set.back().value == result.value_set.back() && set.back().offset.is_neg_infinity()))
            throw IoError("entrance set does not end with (max value, -inf)");
    }
    return result;
}

BifiltrationResult read_entrance_sets(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    return read_entrance_sets(in);
}

}  // namespace vob
