#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "obr/grid.hpp"

using namespace obr;

namespace {

constexpr double kPitch300 = 29.527559055118111;  // 2.5 mm at 300 dpi

// Dot center for (line, col, dot) under a geometry; dots 1..3 left column,
// 4..6 right, top to bottom.
std::pair<double, double> dot_center(const LatticeGeometry& g, int line, int col,
                                     int dot) {
    const int sx = (dot - 1) / 3;
    const int sy = (dot - 1) % 3;
    return {g.origin_x + col * g.cell_advance_x + sx * g.dot_pitch,
            g.origin_y + line * g.line_advance_y + sy * g.dot_pitch};
}

std::vector<DotCentroid> centroids_for(
    const LatticeGeometry& g,
    const std::map<CellAddress, BrailleCell>& cells, double jitter = 0.0,
    unsigned seed = 0) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> disp(-jitter, jitter);
    std::vector<DotCentroid> out;
    for (const auto& [addr, cell] : cells) {
        for (int dot = 1; dot <= 6; ++dot) {
            if (!cell.has_dot(dot)) continue;
            auto [x, y] = dot_center(g, addr.line, addr.col, dot);
            if (jitter > 0.0) {
                x += disp(rng);
                y += disp(rng);
            }
            out.push_back({x, y, 60});
        }
    }
    return out;
}

}  // namespace

TEST_CASE("mm_to_px converts with the 25.4 mm inch") {
    CHECK(mm_to_px(2.5, 300.0) == doctest::Approx(29.53).epsilon(1e-3));
    CHECK(mm_to_px(2.5, 300.0) == doctest::Approx(kPitch300).epsilon(1e-12));
    CHECK(mm_to_px(25.4, 300.0) == doctest::Approx(300.0).epsilon(1e-12));
}

TEST_CASE("geometry_from_dpi scales the default dimensions") {
    const LatticeGeometry g = geometry_from_dpi(300.0);
    CHECK(g.dot_pitch == doctest::Approx(kPitch300).epsilon(1e-12));
    CHECK(g.cell_advance_x == doctest::Approx(mm_to_px(6.0, 300.0)).epsilon(1e-12));
    CHECK(g.line_advance_y == doctest::Approx(mm_to_px(10.0, 300.0)).epsilon(1e-12));
    CHECK(g.origin_x == 0.0);
    CHECK(g.origin_y == 0.0);
    CHECK(g.valid());
    CHECK(geometry_from_dpi(72.0).valid());
    CHECK_THROWS_AS(geometry_from_dpi(0.0), std::invalid_argument);
    CHECK_THROWS_AS(geometry_from_dpi(-300.0), std::invalid_argument);
}

TEST_CASE("LatticeGeometry::valid enforces the spacing invariants") {
    LatticeGeometry g{0.0, 0.0, 10.0, 25.0, 35.0};
    CHECK(g.valid());
    CHECK_FALSE(LatticeGeometry{0.0, 0.0, 0.0, 25.0, 35.0}.valid());
    CHECK_FALSE(LatticeGeometry{0.0, 0.0, 10.0, 20.0, 35.0}.valid());  // = 2p
    CHECK_FALSE(LatticeGeometry{0.0, 0.0, 10.0, 25.0, 30.0}.valid());  // = 3p
}

TEST_CASE("calibrated fit recovers the origin of exact lattice centroids") {
    LatticeGeometry truth = geometry_from_dpi(300.0);
    truth.origin_x = 100.25;
    truth.origin_y = 80.5;
    // Letters a, p, t, x: together they populate all six slot offsets.
    const std::map<CellAddress, BrailleCell> cells{
        {{0, 0}, BrailleCell::from_dots({1})},
        {{0, 1}, BrailleCell::from_dots({1, 2, 3, 4})},
        {{1, 0}, BrailleCell::from_dots({2, 3, 4, 5})},
        {{1, 1}, BrailleCell::from_dots({1, 3, 4, 6})},
    };
    const auto centroids = centroids_for(truth, cells);
    const LatticeGeometry fit = estimate_lattice_calibrated(centroids, 300.0);
    CHECK(std::abs(fit.origin_x - truth.origin_x) < 0.5);
    CHECK(std::abs(fit.origin_y - truth.origin_y) < 0.5);
    CHECK(fit.dot_pitch == doctest::Approx(truth.dot_pitch).epsilon(1e-12));

    const CellGridResult grid = assign_cells(centroids, fit);
    CHECK(grid.diagnostics.empty());
    CHECK(grid.cells == cells);
}

TEST_CASE("calibrated fit reads a single centroid as dot 1") {
    const std::vector<DotCentroid> one{{37.2, 91.4, 50}};
    const LatticeGeometry fit = estimate_lattice_calibrated(one, 300.0);
    CHECK(fit.origin_x == doctest::Approx(37.2).epsilon(1e-9));
    CHECK(fit.origin_y == doctest::Approx(91.4).epsilon(1e-9));
    const CellGridResult grid = assign_cells(one, fit);
    REQUIRE(grid.cells.size() == 1);
    CHECK(grid.cells.at({0, 0}) == BrailleCell::from_dots({1}));
}

TEST_CASE("calibrated fit validates its inputs") {
    CHECK_THROWS_AS(estimate_lattice_calibrated({}, 300.0), InsufficientDots);
    const std::vector<DotCentroid> one{{0.0, 0.0, 50}};
    CHECK_THROWS_AS(estimate_lattice_calibrated(one, 0.0), std::invalid_argument);
    PhysicalDims bad;
    bad.cell_advance_mm = 4.0;  // not > 2 * 2.5
    CHECK_THROWS_AS(estimate_lattice_calibrated(one, 300.0, bad),
                    std::invalid_argument);
}

TEST_CASE("pages that never use the top dot row read it as slot 0") {
    // Only rows 1 and 2 are populated, so the slot labeling is inherently
    // ambiguous; the dot-1 convention reads the topmost observed row as the
    // smallest consistent slot.
    LatticeGeometry truth = geometry_from_dpi(300.0);
    truth.origin_x = 50.0;
    truth.origin_y = 60.0;
    const std::map<CellAddress, BrailleCell> cells{
        {{0, 0}, BrailleCell::from_dots({2, 5})},
        {{0, 1}, BrailleCell::from_dots({2, 3})},
    };
    const auto centroids = centroids_for(truth, cells);
    const LatticeGeometry fit = estimate_lattice_calibrated(centroids, 300.0);
    CHECK(fit.origin_y == doctest::Approx(truth.origin_y + truth.dot_pitch).epsilon(1e-9));
    const CellGridResult grid = assign_cells(centroids, fit);
    CHECK(grid.cells.at({0, 0}) == BrailleCell::from_dots({1, 4}));
    CHECK(grid.cells.at({0, 1}) == BrailleCell::from_dots({1, 2}));
}

TEST_CASE("auto fit requires six dots spanning two rows and two columns") {
    LatticeGeometry g = geometry_from_dpi(300.0);
    g.origin_x = g.origin_y = 30.0;
    const std::map<CellAddress, BrailleCell> five{
        {{0, 0}, BrailleCell::from_dots({1, 2, 3, 4, 5})}};
    CHECK_THROWS_AS(estimate_lattice_auto(centroids_for(g, five)),
                    InsufficientDots);

    std::vector<DotCentroid> one_row;
    for (int i = 0; i < 8; ++i)
        one_row.push_back({30.0 + i * g.dot_pitch, 40.0, 50});
    CHECK_THROWS_AS(estimate_lattice_auto(one_row), InsufficientDots);

    std::vector<DotCentroid> one_col;
    for (int i = 0; i < 8; ++i)
        one_col.push_back({40.0, 30.0 + i * g.dot_pitch, 50});
    CHECK_THROWS_AS(estimate_lattice_auto(one_col), InsufficientDots);
}

TEST_CASE("auto fit rejects spacings that collapse the lattice") {
    // Column spacing fits to exactly 2 * pitch; the cell advance invariant
    // (strictly > 2 * pitch) then fails.
    const std::vector<DotCentroid> dots{
        {0.0, 0.0, 50},  {0.0, 24.0, 50},  {49.0, 48.0, 50},
        {49.0, 0.0, 50}, {96.0, 24.0, 50}, {96.0, 48.0, 50},
    };
    CHECK_THROWS_AS(estimate_lattice_auto(dots), NoLatticeFit);
}

TEST_CASE("auto fit recovers geometry and codes under jitter") {
    LatticeGeometry truth = geometry_from_dpi(300.0);
    truth.origin_x = 24.0;
    truth.origin_y = 24.0;
    const std::map<CellAddress, BrailleCell> cells{
        {{0, 0}, BrailleCell{0x3F}}, {{0, 1}, BrailleCell{0x2D}},
        {{0, 2}, BrailleCell{0x3A}}, {{0, 3}, BrailleCell{0x1B}},
        {{0, 4}, BrailleCell{0x07}}, {{1, 0}, BrailleCell{0x19}},
        {{1, 1}, BrailleCell{0x26}}, {{1, 2}, BrailleCell{0x31}},
        {{1, 3}, BrailleCell{0x15}}, {{1, 4}, BrailleCell{0x0E}},
    };
    int dot_count = 0;
    for (const auto& [addr, cell] : cells)
        for (int d = 1; d <= 6; ++d) dot_count += cell.has_dot(d) ? 1 : 0;
    REQUIRE(dot_count >= 20);

    for (unsigned seed = 1; seed <= 5; ++seed) {
        const double jitter = 0.1 * truth.dot_pitch;
        const auto centroids = centroids_for(truth, cells, jitter, seed);
        const LatticeGeometry fit = estimate_lattice_auto(centroids);
        CHECK(std::abs(fit.dot_pitch - truth.dot_pitch) <
              0.05 * truth.dot_pitch);
        const CellGridResult grid = assign_cells(centroids, fit);
        CHECK(grid.diagnostics.empty());
        CHECK(grid.cells == cells);
    }
}

TEST_CASE("assign_cells maps the anchor centroid to dot 1 of cell (0,0)") {
    LatticeGeometry g = geometry_from_dpi(300.0);
    g.origin_x = 40.0;
    g.origin_y = 60.0;
    const std::vector<DotCentroid> one{{40.0, 60.0, 50}};
    const CellGridResult grid = assign_cells(one, g);
    REQUIRE(grid.cells.size() == 1);
    CHECK(grid.cells.at({0, 0}).dot_string() == "100000");
    CHECK(grid.diagnostics.empty());
}

TEST_CASE("assign_cells accumulates all six dots of one cell") {
    LatticeGeometry g = geometry_from_dpi(300.0);
    g.origin_x = 40.0;
    g.origin_y = 60.0;
    std::vector<DotCentroid> six;
    for (int dot = 1; dot <= 6; ++dot) {
        auto [x, y] = dot_center(g, 0, 0, dot);
        six.push_back({x, y, 50});
    }
    const CellGridResult grid = assign_cells(six, g);
    REQUIRE(grid.cells.size() == 1);
    CHECK(grid.cells.at({0, 0}).mask == 0x3F);
}

TEST_CASE("assign_cells sets the documented bits for dots 1,3,4,6 of cell (0,2)") {
    LatticeGeometry g = geometry_from_dpi(300.0);
    g.origin_x = 25.0;
    g.origin_y = 25.0;
    std::vector<DotCentroid> dots;
    for (int dot : {1, 3, 4, 6}) {
        auto [x, y] = dot_center(g, 0, 2, dot);
        dots.push_back({x, y, 50});
    }
    const CellGridResult grid = assign_cells(dots, g);
    REQUIRE(grid.cells.size() == 1);
    CHECK(grid.cells.at({0, 2}).dot_string() == "101101");
    CHECK(grid.cells.at({0, 2}).mask == 45);
}

TEST_CASE("assign_cells reports off-lattice and out-of-page dots") {
    LatticeGeometry g = geometry_from_dpi(300.0);
    g.origin_x = 100.0;
    g.origin_y = 100.0;

    SUBCASE("residual beyond the tolerance") {
        const std::vector<DotCentroid> off{{100.0 + 0.4 * g.dot_pitch, 100.0, 50}};
        const CellGridResult grid = assign_cells(off, g);
        CHECK(grid.cells.empty());
        REQUIRE(grid.diagnostics.size() == 1);
        CHECK(grid.diagnostics[0].kind == GridDiagnostic::Kind::UnassignedDot);
    }
    SUBCASE("residual inside the tolerance") {
        const std::vector<DotCentroid> near{{100.0 + 0.3 * g.dot_pitch, 100.0, 50}};
        const CellGridResult grid = assign_cells(near, g);
        CHECK(grid.cells.size() == 1);
        CHECK(grid.diagnostics.empty());
    }
    SUBCASE("negative cell index") {
        const std::vector<DotCentroid> left{{100.0 - g.cell_advance_x, 100.0, 50}};
        const CellGridResult grid = assign_cells(left, g);
        CHECK(grid.cells.empty());
        REQUIRE(grid.diagnostics.size() == 1);
        CHECK(grid.diagnostics[0].kind == GridDiagnostic::Kind::UnassignedDot);

        const std::vector<DotCentroid> above{{100.0, 100.0 - g.line_advance_y, 50}};
        CHECK(assign_cells(above, g).diagnostics.size() == 1);
    }
}

TEST_CASE("assign_cells keeps the closer of two dots claiming one position") {
    LatticeGeometry g = geometry_from_dpi(300.0);
    g.origin_x = 100.0;
    g.origin_y = 100.0;
    const std::vector<DotCentroid> pair{{103.0, 100.0, 50}, {98.0, 100.0, 55}};
    const CellGridResult grid = assign_cells(pair, g);
    REQUIRE(grid.cells.size() == 1);
    CHECK(grid.cells.at({0, 0}) == BrailleCell::from_dots({1}));
    REQUIRE(grid.diagnostics.size() == 1);
    CHECK(grid.diagnostics[0].kind == GridDiagnostic::Kind::DuplicateDot);
    CHECK(grid.diagnostics[0].x == 103.0);  // the farther dot lost
}

TEST_CASE("assign_cells accounts for every centroid exactly once") {
    LatticeGeometry g = geometry_from_dpi(300.0);
    g.origin_x = 50.0;
    g.origin_y = 50.0;
    std::mt19937 rng(95);
    std::uniform_real_distribution<double> px(0.0, 500.0);
    std::vector<DotCentroid> dots;
    for (int i = 0; i < 120; ++i) dots.push_back({px(rng), px(rng), 50});
    const CellGridResult grid = assign_cells(dots, g);
    std::size_t bits = 0;
    for (const auto& [addr, cell] : grid.cells) {
        CHECK(!cell.empty());
        CHECK(addr.line >= 0);
        CHECK(addr.col >= 0);
        for (int d = 1; d <= 6; ++d) bits += cell.has_dot(d) ? 1 : 0;
    }
    CHECK(bits + grid.diagnostics.size() == dots.size());
}

TEST_CASE("assign_cells validates tolerance and geometry") {
    const LatticeGeometry g = geometry_from_dpi(300.0);
    const std::vector<DotCentroid> one{{0.0, 0.0, 50}};
    CHECK_THROWS_AS(assign_cells(one, g, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(assign_cells(one, g, 0.6), std::invalid_argument);
    CHECK_THROWS_AS(assign_cells(one, LatticeGeometry{}), std::invalid_argument);
}

namespace {

CellGridResult grid_of(std::initializer_list<std::pair<CellAddress, BrailleCell>> cells) {
    CellGridResult r;
    r.geometry = geometry_from_dpi(300.0);
    for (const auto& [addr, cell] : cells) r.cells.emplace(addr, cell);
    return r;
}

}  // namespace

TEST_CASE("cells_to_lines fills interior gaps with empty cells") {
    const BrailleCell a{0x01};
    const BrailleCell b{0x03};
    const auto lines = cells_to_lines(grid_of({{{0, 0}, a}, {{0, 2}, b}}));
    REQUIRE(lines.size() == 1);
    CHECK(lines[0] == std::vector<BrailleCell>{a, kSpaceCell, b});
}

TEST_CASE("cells_to_lines preserves interior blank lines") {
    const BrailleCell a{0x01};
    const BrailleCell b{0x03};
    const auto lines = cells_to_lines(grid_of({{{0, 0}, a}, {{2, 0}, b}}));
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == std::vector<BrailleCell>{a});
    CHECK(lines[1].empty());
    CHECK(lines[2] == std::vector<BrailleCell>{b});
}

TEST_CASE("cells_to_lines trims leading empty columns and lines") {
    const BrailleCell a{0x01};
    const auto lines = cells_to_lines(grid_of({{{0, 3}, a}}));
    REQUIRE(lines.size() == 1);
    CHECK(lines[0] == std::vector<BrailleCell>{a});

    const auto shifted = cells_to_lines(grid_of({{{2, 1}, a}}));
    REQUIRE(shifted.size() == 1);
    CHECK(shifted[0] == std::vector<BrailleCell>{a});
}

TEST_CASE("cells_to_lines emits populated cells in (line, col) order") {
    const auto grid = grid_of({{{0, 1}, BrailleCell{0x05}},
                               {{0, 4}, BrailleCell{0x07}},
                               {{1, 0}, BrailleCell{0x0B}},
                               {{3, 2}, BrailleCell{0x1F}}});
    const auto lines = cells_to_lines(grid);
    std::vector<BrailleCell> flattened;
    for (const auto& line : lines)
        for (const BrailleCell& c : line)
            if (!c.empty()) flattened.push_back(c);
    std::vector<BrailleCell> expected;
    for (const auto& [addr, cell] : grid.cells) expected.push_back(cell);
    CHECK(flattened == expected);
    CHECK(lines.size() == 4);  // lines 0..3 with line 2 empty
    CHECK(lines[2].empty());
}

TEST_CASE("cells_to_lines of an empty grid is empty") {
    CHECK(cells_to_lines(grid_of({})).empty());
}
