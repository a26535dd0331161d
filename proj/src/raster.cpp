#include "obr/raster.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

namespace obr {

namespace {

constexpr std::size_t kMaxPixels = std::size_t{1} << 28;  // sanity bound for header dims

bool is_pnm_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

struct ByteCursor {
    std::span<const std::uint8_t> bytes;
    std::size_t pos = 0;

    bool eof() const { return pos >= bytes.size(); }
    std::uint8_t peek() const { return bytes[pos]; }

    // Whitespace and "#" comments are interchangeable separators in PNM headers.
    void skip_separators() {
        while (!eof()) {
            if (is_pnm_space(peek())) {
                ++pos;
            } else if (peek() == '#') {
                while (!eof() && peek() != '\n') ++pos;
            } else {
                break;
            }
        }
    }

    long read_uint(const char* what) {
        skip_separators();
        if (eof() || peek() < '0' || peek() > '9')
            throw MalformedHeader(std::string("expected ") + what);
        long value = 0;
        while (!eof() && peek() >= '0' && peek() <= '9') {
            value = value * 10 + (peek() - '0');
            if (value > 1'000'000'000L) throw MalformedHeader(std::string(what) + " out of range");
            ++pos;
        }
        return value;
    }
};

}  // namespace

LoadedImage load_pnm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6'))
        throw MalformedHeader("not a binary PGM/PPM (magic must be P5 or P6)");
    const bool rgb = bytes[1] == '6';

    ByteCursor cur{bytes, 2};
    const long w = cur.read_uint("width");
    const long h = cur.read_uint("height");
    const long maxval = cur.read_uint("maxval");
    if (w < 1 || h < 1) throw MalformedHeader("dimensions must be at least 1x1");
    if (static_cast<std::size_t>(w) * static_cast<std::size_t>(h) > kMaxPixels)
        throw MalformedHeader("dimensions out of range");
    if (maxval != 255) throw MalformedHeader("maxval must be 255, got " + std::to_string(maxval));

    // Exactly one whitespace byte separates the header from the pixel body.
    if (cur.eof() || !is_pnm_space(cur.peek()))
        throw MalformedHeader("missing separator before pixel data");
    ++cur.pos;

    const std::size_t channels = rgb ? 3 : 1;
    const std::size_t need = static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * channels;
    const std::size_t have = bytes.size() - cur.pos;
    if (have < need)
        throw TruncatedBody("need " + std::to_string(need) + " pixel bytes, have " +
                            std::to_string(have));

    if (rgb) {
        RasterRgb img(static_cast<int>(w), static_cast<int>(h));
        std::copy_n(bytes.begin() + static_cast<std::ptrdiff_t>(cur.pos), need, img.data.begin());
        return img;
    }
    GrayImage img(static_cast<int>(w), static_cast<int>(h));
    std::copy_n(bytes.begin() + static_cast<std::ptrdiff_t>(cur.pos), need, img.data.begin());
    return img;
}

namespace {

std::vector<std::uint8_t> save_pnm_impl(const char* magic, int width, int height,
                                        const std::vector<std::uint8_t>& data,
                                        std::size_t expected) {
    if (width < 1 || height < 1 || data.size() != expected)
        throw std::invalid_argument("save_pnm: inconsistent image buffer");
    std::string header = std::string(magic) + "\n" + std::to_string(width) + " " +
                         std::to_string(height) + "\n255\n";
    std::vector<std::uint8_t> out;
    out.reserve(header.size() + data.size());
    out.insert(out.end(), header.begin(), header.end());
    out.insert(out.end(), data.begin(), data.end());
    return out;
}

}  // namespace

std::vector<std::uint8_t> save_pnm(const GrayImage& image) {
    return save_pnm_impl("P5", image.width, image.height, image.data, image.pixel_count());
}

std::vector<std::uint8_t> save_pnm(const RasterRgb& image) {
    return save_pnm_impl("P6", image.width, image.height, image.data, image.pixel_count() * 3);
}

GrayImage rgb_to_gray(const RasterRgb& image) {
    GrayImage out(image.width, image.height);
    const std::size_t n = image.pixel_count();
    for (std::size_t i = 0; i < n; ++i) {
        const double r = image.data[3 * i];
        const double g = image.data[3 * i + 1];
        const double b = image.data[3 * i + 2];
        // Round half away from zero; inputs are non-negative so this is half-up.
        double v = std::floor(0.2989 * r + 0.5870 * g + 0.1140 * b + 0.5);
        if (v < 0.0) v = 0.0;
        if (v > 255.0) v = 255.0;
        out.data[i] = static_cast<std::uint8_t>(v);
    }
    return out;
}

std::vector<std::uint8_t> read_binary_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) throw Error("read failed: " + path.string());
    return bytes;
}

void write_binary_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open file for writing: " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("write failed: " + path.string());
}

LoadedImage load_pnm_file(const std::filesystem::path& path) {
    return load_pnm(read_binary_file(path));
}

void save_pnm_file(const std::filesystem::path& path, const GrayImage& image) {
    write_binary_file(path, save_pnm(image));
}

void save_pnm_file(const std::filesystem::path& path, const RasterRgb& image) {
    write_binary_file(path, save_pnm(image));
}

}  // namespace obr
