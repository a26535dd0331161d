#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "obr/cell.hpp"
#include "obr/codec.hpp"
#include "obr/dots.hpp"
#include "obr/grid.hpp"
#include "obr/raster.hpp"

namespace obr {

struct SynthConfig {
    double dpi = 300.0;
    PhysicalDims dims;
    double dot_radius_px = 0.0;  // 0 derives 0.3 * dot pitch
    int dot_intensity = 40;      // dark dots on a light page
    int background = 220;
    double noise_sigma = 0.0;
    double jitter_px = 0.0;  // uniform displacement in [-jitter, +jitter] per axis
    int margin_px = 24;
    std::uint64_t seed = 0;
};

/// One Braille cell per grapheme; " " becomes the empty cell, "\n" starts a
/// new line. Graphemes match greedily (longest first) against the table.
/// Throws UnencodableGrapheme with the 1-based codepoint position.
std::vector<std::vector<BrailleCell>> encode_text(std::string_view text,
                                                  const CodeTable& table);

struct RenderedPage {
    GrayImage image;
    std::vector<DotCentroid> truth;  // jittered disk centres, painted pixel areas
    LatticeGeometry geometry;
};

/// Renders every set dot as a filled disk (pixel painted iff its centre lies
/// in the disk) at its jittered lattice position, then adds clamped Gaussian
/// noise. Deterministic given the config, including the seed. Throws
/// EmptyPage when no cell has a dot.
RenderedPage render_page(const std::vector<std::vector<BrailleCell>>& cells,
                         const SynthConfig& config);

/// Ground-truth sidecar: one "x y area" line per dot.
std::string truth_sidecar(std::span<const DotCentroid> truth);

}  // namespace obr
