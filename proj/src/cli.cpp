#include "obr/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "obr/codec.hpp"
#include "obr/errors.hpp"
#include "obr/pipeline.hpp"
#include "obr/raster.hpp"
#include "obr/synth.hpp"

namespace obr {
namespace {

std::string slurp_text(const std::filesystem::path& path) {
    const std::vector<std::uint8_t> bytes = read_binary_file(path);
    return std::string(bytes.begin(), bytes.end());
}

int cmd_decode(const std::filesystem::path& input, const PipelineConfig& config,
               std::ostream& out, std::ostream& err) {
    try {
        const DecodeReport report = decode_image(load_pnm_file(input), config);
        for (const std::string& line : report.document.lines)
            out << line << "\n";
        for (const std::string& note : report.notes)
            err << "note: " << note << "\n";
        for (const GridDiagnostic& d : report.grid_diagnostics)
            err << "grid: " << d.detail << "\n";
        for (const DecodeDiagnostic& d : report.document.diagnostics)
            err << "decode: line " << d.line + 1 << " col " << d.col + 1 << ": "
                << d.detail << "\n";
        return 0;
    } catch (const InsufficientDots& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const NoLatticeFit& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const DegenerateHistogram& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

struct SynthRequest {
    std::optional<std::filesystem::path> text_path;
    std::optional<std::string> text_string;
    PipelineConfig table_source;  // language / table file only
    SynthConfig config;
    std::filesystem::path output;
    std::optional<std::filesystem::path> truth_path;
};

int cmd_synth(const SynthRequest& request, std::ostream& err) {
    try {
        std::string text;
        if (request.text_path) {
            text = slurp_text(*request.text_path);
            if (!text.empty() && text.back() == '\n')
                text.pop_back();  // file convention: one trailing newline
        } else {
            text = *request.text_string;
        }
        const CodeTable table = table_for_config(request.table_source);
        const RenderedPage page = render_page(encode_text(text, table), request.config);
        save_pnm_file(request.output, page.image);
        if (request.truth_path) {
            const std::string sidecar = truth_sidecar(page.truth);
            write_binary_file(*request.truth_path,
                              {reinterpret_cast<const std::uint8_t*>(sidecar.data()),
                               sidecar.size()});
        }
        err << page.image.width << "x" << page.image.height << "\n";
        return 0;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_tables(const PipelineConfig& table_source, std::ostream& out,
               std::ostream& err) {
    try {
        const CodeTable table = table_for_config(table_source);
        for (const auto& [mask, grapheme] : table.entries) {
            const BrailleCell cell{mask};
            const std::string braille = utf8_encode(to_unicode_braille(cell));
            out << cell.dot_string() << " " << braille << " " << grapheme << "\n";
            const auto alias_it = table.aliases.find(mask);
            if (alias_it == table.aliases.end())
                continue;
            for (const std::string& alias : alias_it->second)
                out << cell.dot_string() << " " << braille << " " << alias
                    << " (alias)\n";
        }
        return 0;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    const char* env_lang = std::getenv("OBR_DEFAULT_LANG");
    const std::string default_lang = env_lang ? env_lang : "en";

    CLI::App app{"optical Braille recognition toolkit", "obr"};
    app.require_subcommand(1);

    // decode
    CLI::App* decode = app.add_subcommand("decode", "Decode a Braille page image to text");
    std::string decode_input;
    PipelineConfig pconf;
    pconf.language = default_lang;
    std::string decode_table;
    int threshold = 0;
    int area_min = 0, area_max = 0;
    std::string dump_dir;
    decode->add_option("input", decode_input, "PGM/PPM page image")->required();
    decode->add_option("--lang", pconf.language, "Code table: en or ml");
    decode->add_option("--table", decode_table, "Custom code table file (overrides --lang)");
    decode->add_option("--dpi", pconf.dpi, "Scan resolution")->capture_default_str();
    decode->add_flag("--auto-grid", pconf.auto_grid,
                     "Infer lattice spacing from the dots instead of --dpi");
    CLI::Option* threshold_opt =
        decode->add_option("--threshold", threshold, "Fixed binarization level 0..254");
    decode->add_option("--p-low", pconf.p_low, "Contrast stretch low percentile")->capture_default_str();
    decode->add_option("--p-high", pconf.p_high, "Contrast stretch high percentile")->capture_default_str();
    decode->add_option("--snap", pconf.snap_tolerance,
                       "Snap tolerance as a fraction of dot pitch")->capture_default_str();
    CLI::Option* area_min_opt =
        decode->add_option("--area-min", area_min, "Dot area lower bound, px");
    CLI::Option* area_max_opt =
        decode->add_option("--area-max", area_max, "Dot area upper bound, px");
    area_min_opt->needs(area_max_opt);
    area_max_opt->needs(area_min_opt);
    CLI::Option* dump_opt =
        decode->add_option("--dump", dump_dir, "Directory for numbered stage images");
    decode->add_option("--pitch-mm", pconf.dims.dot_pitch_mm, "Dot pitch, mm")->capture_default_str();
    decode->add_option("--cell-mm", pconf.dims.cell_advance_mm, "Cell advance, mm")->capture_default_str();
    decode->add_option("--line-mm", pconf.dims.line_advance_mm, "Line advance, mm")->capture_default_str();

    // synth
    CLI::App* synth = app.add_subcommand("synth", "Render a synthetic Braille page");
    SynthRequest request;
    request.table_source.language = default_lang;
    std::string synth_text_path, synth_string, synth_table, synth_output, synth_truth;
    CLI::Option* text_opt =
        synth->add_option("--text", synth_text_path, "Text file to render");
    CLI::Option* string_opt =
        synth->add_option("--string", synth_string, "Literal text to render");
    text_opt->excludes(string_opt);
    synth->add_option("--lang", request.table_source.language, "Code table: en or ml");
    synth->add_option("--table", synth_table, "Custom code table file (overrides --lang)");
    synth->add_option("--dpi", request.config.dpi, "Render resolution")->capture_default_str();
    synth->add_option("--noise", request.config.noise_sigma, "Gaussian noise sigma")->capture_default_str();
    synth->add_option("--jitter", request.config.jitter_px,
                      "Max dot displacement per axis, px")->capture_default_str();
    synth->add_option("--seed", request.config.seed, "Random seed")->capture_default_str();
    synth->add_option("--radius", request.config.dot_radius_px,
                      "Dot radius, px (0 derives from pitch)")->capture_default_str();
    synth->add_option("--intensity", request.config.dot_intensity, "Dot gray level")->capture_default_str();
    synth->add_option("--background", request.config.background,
                      "Background gray level")->capture_default_str();
    synth->add_option("--margin", request.config.margin_px, "Page margin, px")->capture_default_str();
    synth->add_option("--pitch-mm", request.config.dims.dot_pitch_mm, "Dot pitch, mm")->capture_default_str();
    synth->add_option("--cell-mm", request.config.dims.cell_advance_mm,
                      "Cell advance, mm")->capture_default_str();
    synth->add_option("--line-mm", request.config.dims.line_advance_mm,
                      "Line advance, mm")->capture_default_str();
    synth->add_option("-o,--output", synth_output, "Output PGM path")->required();
    CLI::Option* truth_opt =
        synth->add_option("--truth", synth_truth, "Ground-truth sidecar path");

    // tables
    CLI::App* tables = app.add_subcommand("tables", "Print a code table");
    PipelineConfig tconf;
    tconf.language = default_lang;
    std::string tables_table;
    tables->add_option("--lang", tconf.language, "Code table: en or ml");
    tables->add_option("--table", tables_table, "Custom code table file");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    if (decode->parsed()) {
        if (!decode_table.empty())
            pconf.table_path = decode_table;
        if (*threshold_opt)
            pconf.threshold = threshold;
        if (*area_min_opt)
            pconf.dot_filter = DotFilter{area_min, area_max};
        if (*dump_opt)
            pconf.dump_dir = dump_dir;
        return cmd_decode(decode_input, pconf, out, err);
    }
    if (synth->parsed()) {
        if (*text_opt)
            request.text_path = synth_text_path;
        else if (*string_opt)
            request.text_string = synth_string;
        else {
            err << "error: synth requires --text or --string\n";
            return 1;
        }
        if (!synth_table.empty())
            request.table_source.table_path = synth_table;
        request.output = synth_output;
        if (*truth_opt)
            request.truth_path = synth_truth;
        return cmd_synth(request, err);
    }
    if (!tables_table.empty())
        tconf.table_path = tables_table;
    return cmd_tables(tconf, out, err);
}

}  // namespace obr
