#include "obr/pipeline.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <variant>

#include "obr/enhance.hpp"
#include "obr/errors.hpp"

namespace obr {
namespace {

void dump_stage(const std::optional<std::filesystem::path>& dir,
                const char* name, const GrayImage& image) {
    if (!dir)
        return;
    std::filesystem::create_directories(*dir);
    save_pnm_file(*dir / name, image);
}

GrayImage binary_as_gray(const BinaryImage& binary) {
    GrayImage out(binary.width, binary.height);
    for (std::size_t i = 0; i < binary.data.size(); ++i)
        out.data[i] = binary.data[i] ? 255 : 0;
    return out;
}

std::string slurp_text(const std::filesystem::path& path) {
    const std::vector<std::uint8_t> bytes = read_binary_file(path);
    return std::string(bytes.begin(), bytes.end());
}

}  // namespace

CodeTable table_for_config(const PipelineConfig& config) {
    if (config.table_path)
        return parse_code_table(slurp_text(*config.table_path),
                                config.table_path->string());
    if (config.language == "en")
        return english_grade1_table();
    if (config.language == "ml")
        return malayalam_vowel_table();
    throw BadTableFile("unknown language \"" + config.language +
                       "\" (expected en, ml, or a table file)");
}

DecodeReport decode_image(const GrayImage& input, const PipelineConfig& config) {
    const CodeTable table = table_for_config(config);

    DecodeReport report;
    dump_stage(config.dump_dir, "01-gray.pgm", input);

    const GrayImage mean = mean_filter3(input);
    dump_stage(config.dump_dir, "02-mean.pgm", mean);

    StretchResult stretched = contrast_stretch(mean, config.p_low, config.p_high);
    if (stretched.diagnostic)
        report.notes.push_back(*stretched.diagnostic);
    dump_stage(config.dump_dir, "03-stretch.pgm", stretched.image);

    const GrayImage comp = complement(stretched.image);
    dump_stage(config.dump_dir, "04-complement.pgm", comp);

    const GrayImage dilated = dilate3(comp);
    dump_stage(config.dump_dir, "05-dilate.pgm", dilated);

    BinaryImage binary;
    if (config.threshold) {
        binary = binarize(dilated, *config.threshold);
    } else {
        try {
            binary = binarize(dilated, otsu_level(histogram_of(dilated)));
        } catch (const DegenerateHistogram& e) {
            // A single-intensity page has no separable dots; an empty
            // foreground lets the lattice stage report InsufficientDots.
            binary = BinaryImage(dilated.width, dilated.height, 0);
            report.notes.push_back(e.what());
        }
    }
    dump_stage(config.dump_dir, "06-binary.pgm", binary_as_gray(binary));

    const std::vector<Component> components = label_components(binary);

    std::vector<DotCentroid> centroids;
    LatticeGeometry geometry;
    if (!config.auto_grid) {
        const LatticeGeometry nominal = geometry_from_dpi(config.dpi, config.dims);
        const DotFilter filter =
            config.dot_filter
                ? *config.dot_filter
                : dot_filter_for_radius(0.3 * nominal.dot_pitch);
        centroids = extract_centroids(components, filter);
        if (centroids.empty())
            throw InsufficientDots("no dot-sized components on the page");
        geometry = estimate_lattice_calibrated(centroids, config.dpi, config.dims);
    } else if (config.dot_filter) {
        centroids = extract_centroids(components, *config.dot_filter);
        if (centroids.empty())
            throw InsufficientDots("no dot-sized components on the page");
        geometry = estimate_lattice_auto(centroids);
    } else {
        // No scale is known yet: take everything except single-pixel
        // speckle, fit once, then refit with the pitch-derived size window.
        const int cap = std::max(
            3, static_cast<int>(std::min<std::size_t>(binary.pixel_count() / 4,
                                                      1 << 30)));
        centroids = extract_centroids(components, DotFilter{3, cap});
        if (centroids.empty())
            throw InsufficientDots("no dot-sized components on the page");
        geometry = estimate_lattice_auto(centroids);
        const DotFilter refined = dot_filter_for_radius(0.3 * geometry.dot_pitch);
        std::vector<DotCentroid> kept = extract_centroids(components, refined);
        if (kept.size() >= 6) {
            centroids = std::move(kept);
            geometry = estimate_lattice_auto(centroids);
        }
    }
    report.dot_count = centroids.size();

    CellGridResult grid = assign_cells(centroids, geometry, config.snap_tolerance);
    report.geometry = grid.geometry;
    report.document = decode_lines(cells_to_lines(grid), table);
    report.grid_diagnostics = std::move(grid.diagnostics);
    return report;
}

DecodeReport decode_image(const LoadedImage& input, const PipelineConfig& config) {
    if (const GrayImage* gray = std::get_if<GrayImage>(&input))
        return decode_image(*gray, config);
    return decode_image(rgb_to_gray(std::get<RasterRgb>(input)), config);
}

}  // namespace obr
