#include "obr/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "obr/errors.hpp"

namespace obr {
namespace {

// All randomness flows through one fixed 64-bit generator so pages are
// reproducible from the seed alone.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform01() {  // [0, 1)
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform_pm(double amplitude) {  // [-amplitude, +amplitude]
        return (2.0 * uniform01() - 1.0) * amplitude;
    }

    double gaussian() {  // Box-Muller, pairs cached
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
        const double u2 = uniform01();
        const double mag = std::sqrt(-2.0 * std::log(u1));
        const double ang = 2.0 * std::numbers::pi * u2;
        spare_ = mag * std::sin(ang);
        have_spare_ = true;
        return mag * std::cos(ang);
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

void validate(const SynthConfig& c) {
    if (!(c.dpi > 0.0))
        throw std::invalid_argument("dpi must be positive");
    if (c.dot_radius_px < 0.0)
        throw std::invalid_argument("dot radius must be non-negative");
    if (c.dot_intensity < 0 || c.dot_intensity > 255 || c.background < 0 ||
        c.background > 255)
        throw std::invalid_argument("intensities must lie in [0, 255]");
    if (c.dot_intensity >= c.background)
        throw std::invalid_argument("dot intensity must be darker than the background");
    if (c.noise_sigma < 0.0 || c.jitter_px < 0.0 || c.margin_px < 0)
        throw std::invalid_argument("noise, jitter and margin must be non-negative");
}

}  // namespace

std::vector<std::vector<BrailleCell>> encode_text(std::string_view text,
                                                  const CodeTable& table) {
    struct Entry {
        std::u32string grapheme;
        BrailleCell cell;
    };
    std::vector<Entry> entries;
    for (const auto& [grapheme, cell] : table.grapheme_codes())
        entries.push_back({utf8_decode(grapheme), cell});

    const std::u32string source = utf8_decode(text);
    std::vector<std::vector<BrailleCell>> lines(1);
    std::size_t pos = 0;
    while (pos < source.size()) {
        const char32_t cp = source[pos];
        if (cp == U'\n') {
            lines.emplace_back();
            ++pos;
            continue;
        }
        if (cp == U' ') {
            lines.back().push_back(kSpaceCell);
            ++pos;
            continue;
        }
        const Entry* best = nullptr;
        for (const Entry& e : entries) {
            if (best && e.grapheme.size() <= best->grapheme.size())
                continue;
            if (source.compare(pos, e.grapheme.size(), e.grapheme) == 0)
                best = &e;
        }
        if (!best)
            throw UnencodableGrapheme(utf8_encode(cp), pos + 1);
        lines.back().push_back(best->cell);
        pos += best->grapheme.size();
    }
    return lines;
}

RenderedPage render_page(const std::vector<std::vector<BrailleCell>>& cells,
                         const SynthConfig& config) {
    validate(config);

    std::size_t max_cols = 0;
    bool any_dot = false;
    for (const auto& line : cells) {
        max_cols = std::max(max_cols, line.size());
        for (const BrailleCell& cell : line)
            if (!cell.empty())
                any_dot = true;
    }
    if (!any_dot)
        throw EmptyPage("no cell has a dot; nothing to render");

    LatticeGeometry geometry = geometry_from_dpi(config.dpi, config.dims);
    geometry.origin_x = config.margin_px;
    geometry.origin_y = config.margin_px;
    if (!geometry.valid())
        throw std::invalid_argument("physical dimensions violate lattice invariants");

    const double radius = config.dot_radius_px > 0.0
                              ? config.dot_radius_px
                              : 0.3 * geometry.dot_pitch;
    const double width_f = 2.0 * config.margin_px +
                           static_cast<double>(max_cols - 1) * geometry.cell_advance_x +
                           geometry.dot_pitch;
    const double height_f = 2.0 * config.margin_px +
                            static_cast<double>(cells.size() - 1) * geometry.line_advance_y +
                            2.0 * geometry.dot_pitch;
    const int width = static_cast<int>(std::ceil(width_f)) + 1;
    const int height = static_cast<int>(std::ceil(height_f)) + 1;
    if (static_cast<long long>(width) * height > (1LL << 27))
        throw std::invalid_argument("page dimensions exceed practical bounds");

    RenderedPage page;
    page.geometry = geometry;
    page.image = GrayImage(width, height, static_cast<std::uint8_t>(config.background));

    Rng rng(config.seed);
    const double r2 = radius * radius;
    for (std::size_t line = 0; line < cells.size(); ++line) {
        for (std::size_t col = 0; col < cells[line].size(); ++col) {
            const BrailleCell cell = cells[line][col];
            for (int dot = 1; dot <= 6; ++dot) {
                if (!cell.has_dot(dot))
                    continue;
                const int sx = (dot - 1) / 3;
                const int sy = (dot - 1) % 3;
                // Jitter is always drawn so the random stream does not
                // depend on its amplitude.
                const double jx = rng.uniform_pm(config.jitter_px);
                const double jy = rng.uniform_pm(config.jitter_px);
                const double cx = geometry.origin_x +
                                  static_cast<double>(col) * geometry.cell_advance_x +
                                  sx * geometry.dot_pitch + jx;
                const double cy = geometry.origin_y +
                                  static_cast<double>(line) * geometry.line_advance_y +
                                  sy * geometry.dot_pitch + jy;
                int painted = 0;
                const int x0 = std::max(0, static_cast<int>(std::floor(cx - radius)));
                const int x1 = std::min(width - 1, static_cast<int>(std::ceil(cx + radius)));
                const int y0 = std::max(0, static_cast<int>(std::floor(cy - radius)));
                const int y1 = std::min(height - 1, static_cast<int>(std::ceil(cy + radius)));
                for (int iy = y0; iy <= y1; ++iy) {
                    for (int ix = x0; ix <= x1; ++ix) {
                        const double dx = ix - cx;
                        const double dy = iy - cy;
                        if (dx * dx + dy * dy <= r2) {
                            page.image.at(ix, iy) =
                                static_cast<std::uint8_t>(config.dot_intensity);
                            ++painted;
                        }
                    }
                }
                page.truth.push_back({cx, cy, painted});
            }
        }
    }

    if (config.noise_sigma > 0.0) {
        for (std::uint8_t& v : page.image.data) {
            const double noisy = v + config.noise_sigma * rng.gaussian();
            v = static_cast<std::uint8_t>(std::clamp<long>(std::lround(noisy), 0, 255));
        }
    }
    return page;
}

std::string truth_sidecar(std::span<const DotCentroid> truth) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(6);
    for (const DotCentroid& dot : truth)
        out << dot.x << " " << dot.y << " " << dot.area << "\n";
    return out.str();
}

}  // namespace obr
