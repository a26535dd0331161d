#include "obr/enhance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace obr {

namespace {

int clampi(int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); }

}  // namespace

Histogram histogram_of(const GrayImage& image) {
    Histogram h;
    for (auto v : image.data) ++h.counts[v];
    return h;
}

GrayImage mean_filter3(const GrayImage& image) {
    GrayImage out(image.width, image.height);
    const int w = image.width, h = image.height;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            int sum = 0;
            for (int dy = -1; dy <= 1; ++dy) {
                const int yy = clampi(y + dy, 0, h - 1);
                for (int dx = -1; dx <= 1; ++dx) {
                    const int xx = clampi(x + dx, 0, w - 1);
                    sum += image.at(xx, yy);
                }
            }
            // round_half_up(sum / 9) in exact integer arithmetic
            out.at(x, y) = static_cast<std::uint8_t>((2 * sum + 9) / 18);
        }
    }
    return out;
}

StretchResult contrast_stretch(const GrayImage& image, double p_low, double p_high) {
    if (!(p_low >= 0.0 && p_low < 50.0) || !(p_high > 50.0 && p_high <= 100.0))
        throw std::invalid_argument("contrast_stretch: percentiles out of range");

    const Histogram hist = histogram_of(image);
    const std::uint64_t n = image.pixel_count();

    // Nearest-rank percentile: smallest intensity whose cumulative count
    // reaches ceil(p/100 * n), clamped to [1, n].
    auto percentile = [&](double p) -> int {
        auto rank = static_cast<std::uint64_t>(std::ceil(p * static_cast<double>(n) / 100.0 - 1e-9));
        rank = std::clamp<std::uint64_t>(rank, 1, n);
        std::uint64_t cum = 0;
        for (int v = 0; v < 256; ++v) {
            cum += hist.counts[v];
            if (cum >= rank) return v;
        }
        return 255;
    };

    const int lo = percentile(p_low);
    const int hi = percentile(p_high);
    if (lo == hi) {
        return {image, "degenerate contrast: percentile window collapsed at intensity " +
                           std::to_string(lo)};
    }

    std::array<std::uint8_t, 256> lut{};
    const int span = hi - lo;
    for (int v = 0; v < 256; ++v) {
        const int c = clampi(v, lo, hi);
        lut[v] = static_cast<std::uint8_t>((2 * 255 * (c - lo) + span) / (2 * span));
    }
    GrayImage out(image.width, image.height);
    for (std::size_t i = 0; i < image.data.size(); ++i) out.data[i] = lut[image.data[i]];
    return {std::move(out), std::nullopt};
}

GrayImage complement(const GrayImage& image) {
    GrayImage out(image.width, image.height);
    for (std::size_t i = 0; i < image.data.size(); ++i)
        out.data[i] = static_cast<std::uint8_t>(255 - image.data[i]);
    return out;
}

GrayImage dilate3(const GrayImage& image) {
    GrayImage out(image.width, image.height);
    const int w = image.width, h = image.height;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            std::uint8_t m = 0;
            for (int dy = -1; dy <= 1; ++dy) {
                const int yy = clampi(y + dy, 0, h - 1);
                for (int dx = -1; dx <= 1; ++dx) {
                    const int xx = clampi(x + dx, 0, w - 1);
                    m = std::max(m, image.at(xx, yy));
                }
            }
            out.at(x, y) = m;
        }
    }
    return out;
}

namespace {

// a1/b1 > a2/b2 for the between-class variance ratios. The cross products
// stay exact in 128 bits for any page up to the raster size limit; should a
// product still overflow, that single comparison degrades to long double.
bool ratio_greater(unsigned __int128 a1, unsigned __int128 b1, unsigned __int128 a2,
                   unsigned __int128 b2) {
    unsigned __int128 lhs = 0, rhs = 0;
    if (!__builtin_mul_overflow(a1, b2, &lhs) && !__builtin_mul_overflow(a2, b1, &rhs))
        return lhs > rhs;
    return static_cast<long double>(a1) / static_cast<long double>(b1) >
           static_cast<long double>(a2) / static_cast<long double>(b2);
}

}  // namespace

int otsu_level(const Histogram& hist) {
    int populated = 0;
    for (auto c : hist.counts)
        if (c > 0) ++populated;
    if (populated < 2)
        throw DegenerateHistogram("need at least two populated intensity bins, have " +
                                  std::to_string(populated));

    std::uint64_t n = 0, total_sum = 0;
    for (int v = 0; v < 256; ++v) {
        n += hist.counts[v];
        total_sum += static_cast<std::uint64_t>(v) * hist.counts[v];
    }

    // The criterion w0*w1*(mu0-mu1)^2 (class weights as fractions) equals
    // (s0*w1 - s1*w0)^2 / (n^2 * w0 * w1) with counts; the n^2 factor is
    // constant, so compare d^2 / (w0*w1) exactly in integers.
    int best_t = 0;
    bool have_best = false;
    unsigned __int128 best_num = 0;
    unsigned __int128 best_den = 1;
    std::uint64_t w0 = 0, s0 = 0;
    for (int t = 0; t <= 254; ++t) {
        w0 += hist.counts[t];
        s0 += static_cast<std::uint64_t>(t) * hist.counts[t];
        const std::uint64_t w1 = n - w0;
        if (w0 == 0 || w1 == 0)
            continue;
        const std::uint64_t s1 = total_sum - s0;
        const unsigned __int128 lhs = static_cast<unsigned __int128>(s0) * w1;
        const unsigned __int128 rhs = static_cast<unsigned __int128>(s1) * w0;
        const unsigned __int128 d = lhs > rhs ? lhs - rhs : rhs - lhs;
        const unsigned __int128 num = d * d;
        const unsigned __int128 den = static_cast<unsigned __int128>(w0) * w1;
        // strict: ties keep the smallest t
        if (!have_best || ratio_greater(num, den, best_num, best_den)) {
            have_best = true;
            best_num = num;
            best_den = den;
            best_t = t;
        }
    }
    return best_t;
}

BinaryImage binarize(const GrayImage& image, int level) {
    if (level < 0 || level > 254) throw std::invalid_argument("binarize: level must be in [0,254]");
    BinaryImage out(image.width, image.height);
    for (std::size_t i = 0; i < image.data.size(); ++i)
        out.data[i] = image.data[i] > level ? 1 : 0;
    return out;
}

}  // namespace obr
