#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <variant>
#include <vector>

#include "obr/errors.hpp"

namespace obr {

/// 8-bit RGB raster, row-major, three bytes (R,G,B) per pixel.
struct RasterRgb {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    RasterRgb() = default;
    RasterRgb(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3, fill) {}

    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
    std::uint8_t* pixel(int x, int y) {
        return data.data() + 3 * (static_cast<std::size_t>(y) * width + x);
    }
    const std::uint8_t* pixel(int x, int y) const {
        return data.data() + 3 * (static_cast<std::size_t>(y) * width + x);
    }
    bool operator==(const RasterRgb&) const = default;
};

/// 8-bit grayscale raster, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
    std::uint8_t& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    bool operator==(const GrayImage&) const = default;
};

/// Binary raster with values 0/1; 1 marks dot foreground.
struct BinaryImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    BinaryImage() = default;
    BinaryImage(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
    std::uint8_t& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    bool operator==(const BinaryImage&) const = default;
};

using LoadedImage = std::variant<GrayImage, RasterRgb>;

/// Parses a binary PGM (P5) or PPM (P6) file with maxval 255.
/// Header comments ("#" to end of line) are accepted; trailing bytes after
/// the pixel body are ignored.
/// Throws MalformedHeader or TruncatedBody.
LoadedImage load_pnm(std::span<const std::uint8_t> bytes);

/// Serializes to binary PGM/PPM, maxval 255, header "P5\n<w> <h>\n255\n".
/// load_pnm(save_pnm(x)) == x, bit for bit.
std::vector<std::uint8_t> save_pnm(const GrayImage& image);
std::vector<std::uint8_t> save_pnm(const RasterRgb& image);

/// Luma conversion: round_half_up(0.2989 R + 0.5870 G + 0.1140 B), clamped to [0,255].
GrayImage rgb_to_gray(const RasterRgb& image);

// File convenience wrappers. Read errors surface as obr::Error.
LoadedImage load_pnm_file(const std::filesystem::path& path);
void save_pnm_file(const std::filesystem::path& path, const GrayImage& image);
void save_pnm_file(const std::filesystem::path& path, const RasterRgb& image);

std::vector<std::uint8_t> read_binary_file(const std::filesystem::path& path);
void write_binary_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace obr
