#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "obr/cell.hpp"
#include "obr/dots.hpp"

namespace obr {

/// Physical page dimensions in millimetres. Defaults are common
/// Braille-authority values.
struct PhysicalDims {
    double dot_pitch_mm = 2.5;
    double cell_advance_mm = 6.0;
    double line_advance_mm = 10.0;
};

double mm_to_px(double mm, double dpi);

/// Pixel-space model of the dot lattice. (origin_x, origin_y) is the centre
/// of dot 1 of cell (0,0). Dot positions relative to a cell anchor:
/// dot 1 (0,0), 2 (0,+p), 3 (0,+2p), 4 (+p,0), 5 (+p,+p), 6 (+p,+2p).
struct LatticeGeometry {
    double origin_x = 0.0;
    double origin_y = 0.0;
    double dot_pitch = 0.0;
    double cell_advance_x = 0.0;
    double line_advance_y = 0.0;

    /// dot_pitch > 0, cell_advance_x > 2*pitch, line_advance_y > 3*pitch.
    bool valid() const;
};

/// Lattice with pitch and advances fixed by resolution, origin at (0,0).
LatticeGeometry geometry_from_dpi(double dpi, const PhysicalDims& dims = {});

struct CellAddress {
    int line = 0;
    int col = 0;
    auto operator<=>(const CellAddress&) const = default;
};

struct GridDiagnostic {
    enum class Kind { UnassignedDot, DuplicateDot };
    Kind kind = Kind::UnassignedDot;
    double x = 0.0;
    double y = 0.0;
    std::string detail;
};

struct CellGridResult {
    LatticeGeometry geometry;
    std::map<CellAddress, BrailleCell> cells;  // only non-empty cells stored
    std::vector<GridDiagnostic> diagnostics;
};

/// Fixes pitch and advances from the scan resolution, then fits the grid
/// phase minimising the sum of squared snap residuals over the centroids.
/// Phase ties resolve toward the dot-1 interpretation. Throws
/// InsufficientDots when centroids is empty.
LatticeGeometry estimate_lattice_calibrated(std::span<const DotCentroid> centroids,
                                            double dpi,
                                            const PhysicalDims& dims = {});

/// Recovers pitch, advances and phase from the centroids alone. Requires at
/// least 6 centroids spanning 2+ dot-columns and 2+ dot-rows
/// (InsufficientDots otherwise); throws NoLatticeFit when the inferred
/// spacings cannot form a valid lattice.
LatticeGeometry estimate_lattice_auto(std::span<const DotCentroid> centroids);

/// Snaps each centroid to its nearest lattice dot position and accumulates
/// 6-bit cell codes. Centroids farther than snap_tolerance*dot_pitch from
/// the lattice, or snapping to negative cell indices, become UnassignedDot
/// diagnostics; two centroids claiming one position keep the closer one and
/// report the other as DuplicateDot.
CellGridResult assign_cells(std::span<const DotCentroid> centroids,
                            const LatticeGeometry& geometry,
                            double snap_tolerance = 0.35);

/// Flattens the cell map into lines. Each line spans its first to last
/// populated column with 000000 filling interior gaps; interior empty lines
/// are preserved as empty vectors; leading and trailing empty lines and
/// columns are trimmed.
std::vector<std::vector<BrailleCell>> cells_to_lines(const CellGridResult& result);

}  // namespace obr
