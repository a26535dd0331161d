#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "obr/raster.hpp"

namespace obr {

/// 256-bin intensity histogram; counts sum to the source pixel count.
struct Histogram {
    std::array<std::uint64_t, 256> counts{};

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (auto c : counts) t += c;
        return t;
    }
};

Histogram histogram_of(const GrayImage& image);

/// 3x3 box filter, replicate border padding, round-half-up quantization.
GrayImage mean_filter3(const GrayImage& image);

struct StretchResult {
    GrayImage image;
    std::optional<std::string> diagnostic;  // set when the percentile window is degenerate
};

/// Percentile contrast stretch: [p_low, p_high] percentiles map to [0, 255].
/// Percentiles are nearest-rank. When both percentiles land on the same
/// intensity the image is returned unchanged with a diagnostic.
/// Preconditions: p_low in [0,50), p_high in (50,100].
StretchResult contrast_stretch(const GrayImage& image, double p_low = 1.0, double p_high = 99.0);

/// Pointwise 255 - v.
GrayImage complement(const GrayImage& image);

/// Grayscale 3x3 dilation (max filter), replicate border padding.
GrayImage dilate3(const GrayImage& image);

/// Smallest threshold t in [0,254] maximizing the between-class variance
/// w0(t) * w1(t) * (mu0(t) - mu1(t))^2 with class 0 = intensities <= t.
/// Throws DegenerateHistogram when fewer than two bins are populated.
int otsu_level(const Histogram& hist);

/// Pixel -> 1 iff intensity > level. Precondition: level in [0,254].
BinaryImage binarize(const GrayImage& image, int level);

}  // namespace obr
