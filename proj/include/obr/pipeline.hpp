#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "obr/codec.hpp"
#include "obr/dots.hpp"
#include "obr/grid.hpp"
#include "obr/raster.hpp"

namespace obr {

struct PipelineConfig {
    std::string language = "en";
    std::optional<std::filesystem::path> table_path;  // overrides language
    double dpi = 300.0;
    PhysicalDims dims;
    bool auto_grid = false;
    std::optional<int> threshold;  // skips Otsu when set
    double p_low = 1.0;
    double p_high = 99.0;
    double snap_tolerance = 0.35;
    std::optional<DotFilter> dot_filter;  // overrides the derived area window
    std::optional<std::filesystem::path> dump_dir;
};

struct DecodeReport {
    DecodedDocument document;
    LatticeGeometry geometry;
    std::vector<GridDiagnostic> grid_diagnostics;
    std::vector<std::string> notes;  // non-fatal stage observations
    std::size_t dot_count = 0;
};

/// Resolves the code table: explicit table file first, else the built-in
/// language. Throws BadTableFile for unknown languages or bad files.
CodeTable table_for_config(const PipelineConfig& config);

/// Full recognition pass:
/// gray -> mean filter -> contrast stretch -> complement -> dilate ->
/// binarize -> components -> lattice fit -> cell assignment -> decode.
/// With dump_dir set, writes numbered PGMs for the six image stages.
/// Throws InsufficientDots / NoLatticeFit when no grid can be recovered.
DecodeReport decode_image(const GrayImage& input, const PipelineConfig& config);
DecodeReport decode_image(const LoadedImage& input, const PipelineConfig& config);

}  // namespace obr
