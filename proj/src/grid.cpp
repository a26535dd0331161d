#include "obr/grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "obr/errors.hpp"

namespace obr {

double mm_to_px(double mm, double dpi) {
    return mm * dpi / 25.4;
}

bool LatticeGeometry::valid() const {
    return dot_pitch > 0.0 && cell_advance_x > 2.0 * dot_pitch &&
           line_advance_y > 3.0 * dot_pitch;
}

LatticeGeometry geometry_from_dpi(double dpi, const PhysicalDims& dims) {
    if (!(dpi > 0.0))
        throw std::invalid_argument("dpi must be positive");
    LatticeGeometry g;
    g.dot_pitch = mm_to_px(dims.dot_pitch_mm, dpi);
    g.cell_advance_x = mm_to_px(dims.cell_advance_mm, dpi);
    g.line_advance_y = mm_to_px(dims.line_advance_mm, dpi);
    return g;
}

namespace {

// Nearest lattice coordinate along one axis. Slots are the within-cell dot
// offsets (x: 2 columns, y: 3 rows); ties keep the smallest slot, which makes
// a lone dot read as dot 1.
struct AxisSnap {
    long index = 0;
    int slot = 0;
    double offset = 0.0;  // signed: value minus snapped position
};

AxisSnap snap_axis(double value, double origin, double advance, double pitch,
                   int slot_count) {
    AxisSnap best;
    bool have = false;
    for (int slot = 0; slot < slot_count; ++slot) {
        const double base = origin + slot * pitch;
        const long k = std::lround((value - base) / advance);
        const double offset = value - (base + static_cast<double>(k) * advance);
        if (!have || std::abs(offset) < std::abs(best.offset)) {
            best = {k, slot, offset};
            have = true;
        }
    }
    return best;
}

double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1)
        return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

struct Cluster {
    double mean = 0.0;
    int count = 0;
};

// 1D clustering of coordinates. The split threshold is the midpoint of the
// largest relative jump (>= 3x) in the sorted gap spectrum; without such a
// jump every distinct coordinate is its own cluster.
std::vector<Cluster> cluster_axis(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    std::vector<double> gaps;
    gaps.reserve(values.size());
    for (std::size_t i = 1; i < values.size(); ++i) {
        const double g = values[i] - values[i - 1];
        if (g > 0.0)
            gaps.push_back(g);
    }
    std::sort(gaps.begin(), gaps.end());

    double tau = 0.0;
    if (gaps.size() >= 2) {
        double best_ratio = 0.0;
        double best_tau = 0.0;
        for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
            const double ratio = gaps[i + 1] / std::max(gaps[i], 0.25);
            if (ratio > best_ratio) {
                best_ratio = ratio;
                best_tau = 0.5 * (gaps[i] + gaps[i + 1]);
            }
        }
        if (best_ratio >= 3.0)
            tau = best_tau;
    }

    std::vector<Cluster> clusters;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= values.size(); ++i) {
        if (i == values.size() || values[i] - values[i - 1] > tau) {
            double sum = 0.0;
            for (std::size_t j = start; j < i; ++j)
                sum += values[j];
            clusters.push_back({sum / static_cast<double>(i - start),
                                static_cast<int>(i - start)});
            start = i;
        }
    }
    return clusters;
}

std::vector<double> cluster_gaps(const std::vector<Cluster>& clusters) {
    std::vector<double> gaps;
    for (std::size_t i = 1; i < clusters.size(); ++i) {
        const double g = clusters[i].mean - clusters[i - 1].mean;
        if (g > 0.0)
            gaps.push_back(g);
    }
    return gaps;
}

// Pitch = median of "small" gaps pooled over both axes; a gap is small iff
// it is below 1.5x the smallest gap. The pool mixes within-cell gaps (1.0p)
// with adjacent-column gaps (1.4p at default dims); the former dominate on
// text pages, so the median lands on the pitch.
double estimate_pitch(const std::vector<Cluster>& x_clusters,
                      const std::vector<Cluster>& y_clusters) {
    std::vector<double> gaps = cluster_gaps(x_clusters);
    const std::vector<double> ygaps = cluster_gaps(y_clusters);
    gaps.insert(gaps.end(), ygaps.begin(), ygaps.end());
    if (gaps.empty())
        throw InsufficientDots("dot positions give no usable spacing information");
    const double g_min = *std::min_element(gaps.begin(), gaps.end());
    std::vector<double> small;
    for (double g : gaps)
        if (g < 1.5 * g_min)
            small.push_back(g);
    return median_of(std::move(small));
}

// Advance = the candidate spacing explaining the most large gaps, where a
// gap g is explained iff g ~ m*A + e*pitch for a cell count m and a
// within-cell slot shift e. Candidates come from decomposing single gaps;
// ties prefer the spacing nearest the default-dimension ratio, since a
// single blank-separated gap decomposes equally well several ways. Axes
// without large gaps fall back to the same ratio.
double estimate_advance(const std::vector<Cluster>& clusters, double pitch,
                        int slot_count, double min_mult, double fallback_mult) {
    const int e_max = slot_count - 1;
    std::vector<double> large;
    for (double g : cluster_gaps(clusters))
        if (g >= 1.3 * pitch)
            large.push_back(g);
    if (large.empty())
        return fallback_mult * pitch;

    std::vector<double> candidates;
    for (double g : large) {
        for (int m = 1; m <= 2; ++m) {
            for (int e = -e_max; e <= e_max; ++e) {
                const double a = (g - e * pitch) / m;
                if (a > min_mult * pitch)
                    candidates.push_back(a);
            }
        }
    }
    if (candidates.empty())
        return fallback_mult * pitch;
    std::sort(candidates.begin(), candidates.end());

    const auto explains = [&](double a, double g) {
        for (int m = 1; m <= 8; ++m)
            for (int e = -e_max; e <= e_max; ++e)
                if (std::abs(g - (m * a + e * pitch)) <= 0.25 * pitch)
                    return true;
        return false;
    };

    const double canonical = fallback_mult * pitch;
    double best_a = candidates.front();
    int best_score = -1;
    for (double a : candidates) {
        int score = 0;
        for (double g : large)
            if (explains(a, g))
                ++score;
        const bool better =
            score > best_score ||
            (score == best_score &&
             std::abs(a - canonical) < std::abs(best_a - canonical));
        if (better) {
            best_score = score;
            best_a = a;
        }
    }

    // Refine: median of the per-gap spacings implied by the best
    // decomposition of each explained gap.
    std::vector<double> implied;
    for (double g : large) {
        double best_err = std::numeric_limits<double>::infinity();
        double value = 0.0;
        for (int m = 1; m <= 8; ++m) {
            for (int e = -e_max; e <= e_max; ++e) {
                const double err = std::abs(g - (m * best_a + e * pitch));
                if (err < best_err) {
                    best_err = err;
                    value = (g - e * pitch) / m;
                }
            }
        }
        if (best_err <= 0.25 * pitch)
            implied.push_back(value);
    }
    if (!implied.empty())
        best_a = median_of(std::move(implied));
    return best_a;
}

// Relative (cell index, slot) per cluster along one axis. Each inter-cluster
// gap decomposes as m*advance + s*pitch; at the default dimensions the y
// axis aliases (line_advance - 2*pitch equals 2*pitch), so near-tied
// decompositions are resolved by feasibility of the running slot chain
// (every slot must fit one within-cell range after a common base shift) and
// then by crossing as few cells or lines as possible. The chain is finally
// anchored at the smallest feasible base slot (dot-1 preference).
struct AxisAssign {
    std::vector<int> index;
    std::vector<int> slot;
};

AxisAssign decompose_axis(const std::vector<Cluster>& clusters, double pitch,
                          double advance, int slot_count) {
    const std::size_t n = clusters.size();
    AxisAssign out;
    out.index.assign(n, 0);
    out.slot.assign(n, 0);
    const int s_max = slot_count - 1;
    const double band = 0.15 * pitch;
    int lo = 0, hi = 0;  // slot range of the chain built so far
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double g = clusters[i + 1].mean - clusters[i].mean;
        const int m_hi =
            std::min(1000, static_cast<int>(std::ceil(g / advance)) + 1);
        const int cur = out.slot[i];

        double min_err = std::numeric_limits<double>::infinity();
        for (int m = 0; m <= m_hi; ++m)
            for (int s = -s_max; s <= s_max; ++s) {
                if (m == 0 && s <= 0)
                    continue;  // clusters are ordered and distinct
                min_err = std::min(min_err, std::abs(g - (m * advance + s * pitch)));
            }

        // Preferred: feasible options within the band, fewest crossings
        // first. Fallback: the closest feasible option regardless of band;
        // (m=1, s=0) keeps the range, so a feasible option always exists.
        std::tuple<int, int, double> best_rank{std::numeric_limits<int>::max(), 0,
                                               0.0};
        int best_m = 1, best_s = 0;
        double fallback_err = std::numeric_limits<double>::infinity();
        int fb_m = 1, fb_s = 0;
        for (int m = 0; m <= m_hi; ++m) {
            for (int s = -s_max; s <= s_max; ++s) {
                if (m == 0 && s <= 0)
                    continue;
                const int next = cur + s;
                if (std::max(hi, next) - std::min(lo, next) > s_max)
                    continue;  // no base shift could keep all slots in range
                const double err = std::abs(g - (m * advance + s * pitch));
                if (err <= min_err + band) {
                    const std::tuple<int, int, double> rank{m, std::abs(s), err};
                    if (rank < best_rank) {
                        best_rank = rank;
                        best_m = m;
                        best_s = s;
                    }
                }
                if (err < fallback_err) {
                    fallback_err = err;
                    fb_m = m;
                    fb_s = s;
                }
            }
        }
        if (std::get<0>(best_rank) == std::numeric_limits<int>::max()) {
            best_m = fb_m;
            best_s = fb_s;
        }
        out.index[i + 1] = out.index[i] + best_m;
        out.slot[i + 1] = cur + best_s;
        lo = std::min(lo, out.slot[i + 1]);
        hi = std::max(hi, out.slot[i + 1]);
    }

    // Anchor so the smallest chain slot reads as slot 0.
    for (std::size_t i = 0; i < n; ++i)
        out.slot[i] -= lo;
    return out;
}

int distinct_count(const std::vector<int>& values) {
    std::vector<int> v = values;
    std::sort(v.begin(), v.end());
    return static_cast<int>(std::unique(v.begin(), v.end()) - v.begin());
}

// Joint weighted least squares over cluster means for the five lattice
// parameters (x phase, cell advance, pitch, y phase, line advance); pitch is
// shared between the axes. Parameters whose design column is degenerate
// (all-equal indices or slots, or a vanishing pivot) are frozen at their
// incoming estimates.
void solve_joint_lsq(const std::vector<Cluster>& xc, const AxisAssign& ax,
                     const std::vector<Cluster>& yc, const AxisAssign& ay,
                     double& phi_x, double& advance_x, double& pitch,
                     double& phi_y, double& advance_y) {
    constexpr int kParams = 5;  // phi_x, advance_x, pitch, phi_y, advance_y

    double wsum_x = 0.0, phi_x0 = 0.0;
    for (std::size_t j = 0; j < xc.size(); ++j) {
        const double w = xc[j].count;
        phi_x0 += w * (xc[j].mean - ax.index[j] * advance_x - ax.slot[j] * pitch);
        wsum_x += w;
    }
    phi_x0 /= wsum_x;
    double wsum_y = 0.0, phi_y0 = 0.0;
    for (std::size_t j = 0; j < yc.size(); ++j) {
        const double w = yc[j].count;
        phi_y0 += w * (yc[j].mean - ay.index[j] * advance_y - ay.slot[j] * pitch);
        wsum_y += w;
    }
    phi_y0 /= wsum_y;

    std::array<double, kParams> theta = {phi_x0, advance_x, pitch, phi_y0,
                                         advance_y};
    std::array<bool, kParams> frozen = {false, false, false, false, false};
    if (distinct_count(ax.index) < 2)
        frozen[1] = true;
    if (distinct_count(ax.slot) < 2 && distinct_count(ay.slot) < 2)
        frozen[2] = true;
    if (distinct_count(ay.index) < 2)
        frozen[4] = true;

    struct Row {
        std::array<double, kParams> a;
        double y;
        double w;
    };
    std::vector<Row> rows;
    rows.reserve(xc.size() + yc.size());
    for (std::size_t j = 0; j < xc.size(); ++j)
        rows.push_back({{1.0, static_cast<double>(ax.index[j]),
                         static_cast<double>(ax.slot[j]), 0.0, 0.0},
                        xc[j].mean, static_cast<double>(xc[j].count)});
    for (std::size_t j = 0; j < yc.size(); ++j)
        rows.push_back({{0.0, 0.0, static_cast<double>(ay.slot[j]), 1.0,
                         static_cast<double>(ay.index[j])},
                        yc[j].mean, static_cast<double>(yc[j].count)});

    while (true) {
        std::vector<int> free;
        for (int i = 0; i < kParams; ++i)
            if (!frozen[i])
                free.push_back(i);
        if (free.empty())
            break;
        const int k = static_cast<int>(free.size());

        std::vector<std::vector<double>> m(k, std::vector<double>(k + 1, 0.0));
        for (const Row& row : rows) {
            double y = row.y;
            for (int i = 0; i < kParams; ++i)
                if (frozen[i])
                    y -= row.a[i] * theta[i];
            for (int a = 0; a < k; ++a) {
                const double ca = row.a[free[a]];
                if (ca == 0.0)
                    continue;
                for (int b = 0; b < k; ++b)
                    m[a][b] += row.w * ca * row.a[free[b]];
                m[a][k] += row.w * ca * y;
            }
        }

        double scale = 1.0;
        for (int i = 0; i < k; ++i)
            scale = std::max(scale, std::abs(m[i][i]));
        const double eps = 1e-9 * scale;

        bool refrozen = false;
        for (int col = 0; col < k && !refrozen; ++col) {
            int pivot = col;
            for (int r = col + 1; r < k; ++r)
                if (std::abs(m[r][col]) > std::abs(m[pivot][col]))
                    pivot = r;
            if (std::abs(m[pivot][col]) <= eps) {
                frozen[free[col]] = true;  // unidentifiable from this page
                refrozen = true;
                break;
            }
            std::swap(m[col], m[pivot]);
            for (int r = col + 1; r < k; ++r) {
                const double f = m[r][col] / m[col][col];
                for (int c = col; c <= k; ++c)
                    m[r][c] -= f * m[col][c];
            }
        }
        if (refrozen)
            continue;

        std::vector<double> sol(k, 0.0);
        for (int i = k - 1; i >= 0; --i) {
            double v = m[i][k];
            for (int j = i + 1; j < k; ++j)
                v -= m[i][j] * sol[j];
            sol[i] = v / m[i][i];
        }
        for (int a = 0; a < k; ++a)
            theta[free[a]] = sol[a];
        break;
    }

    phi_x = theta[0];
    advance_x = theta[1];
    pitch = theta[2];
    phi_y = theta[3];
    advance_y = theta[4];
}

// Enumerate candidate phases from the observed coordinates, keep the one
// with the smallest sum of squared snap residuals (ties resolve toward the
// smallest slot interpretation), then polish by mean-shift iterations.
double fit_phase(const std::vector<double>& values, double advance, double pitch,
                 int slot_count) {
    struct Cand {
        int slot;
        double phi;
    };
    std::vector<Cand> cands;
    cands.reserve(values.size() * slot_count);
    for (int slot = 0; slot < slot_count; ++slot) {
        for (double v : values) {
            double phi = std::fmod(v - slot * pitch, advance);
            if (phi < 0.0)
                phi += advance;
            cands.push_back({slot, phi});
        }
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.slot != b.slot)
            return a.slot < b.slot;
        return a.phi < b.phi;
    });

    double best_phi = 0.0;
    double best_ssr = std::numeric_limits<double>::infinity();
    for (const Cand& cand : cands) {
        double ssr = 0.0;
        for (double v : values) {
            const AxisSnap s = snap_axis(v, cand.phi, advance, pitch, slot_count);
            ssr += s.offset * s.offset;
        }
        if (ssr < best_ssr) {
            best_ssr = ssr;
            best_phi = cand.phi;
        }
    }

    double phi = best_phi;
    for (int iter = 0; iter < 32; ++iter) {
        double shift = 0.0;
        for (double v : values)
            shift += snap_axis(v, phi, advance, pitch, slot_count).offset;
        shift /= static_cast<double>(values.size());
        phi += shift;
        if (std::abs(shift) < 1e-9 * pitch)
            break;
    }

    // Pages that do not span all slots fit several slot labelings of the
    // same physical lattice equally well (up to scatter); shifting the phase
    // by whole pitches keeps every fitted position and makes the smallest
    // observed slot 0, the dot-1 convention.
    int min_slot = slot_count - 1;
    for (double v : values)
        min_slot = std::min(min_slot, snap_axis(v, phi, advance, pitch, slot_count).slot);
    return phi + min_slot * pitch;
}

// Shift the origin by whole advances so the smallest snapped cell index over
// the centroids is 0 on each axis.
void normalize_origin(LatticeGeometry& g, std::span<const DotCentroid> centroids) {
    long min_kx = std::numeric_limits<long>::max();
    long min_ky = std::numeric_limits<long>::max();
    for (const DotCentroid& c : centroids) {
        min_kx = std::min(
            min_kx, snap_axis(c.x, g.origin_x, g.cell_advance_x, g.dot_pitch, 2).index);
        min_ky = std::min(
            min_ky, snap_axis(c.y, g.origin_y, g.line_advance_y, g.dot_pitch, 3).index);
    }
    g.origin_x += static_cast<double>(min_kx) * g.cell_advance_x;
    g.origin_y += static_cast<double>(min_ky) * g.line_advance_y;
}

}  // namespace

LatticeGeometry estimate_lattice_calibrated(std::span<const DotCentroid> centroids,
                                            double dpi, const PhysicalDims& dims) {
    if (centroids.empty())
        throw InsufficientDots("calibrated lattice fit requires at least one dot");
    LatticeGeometry g = geometry_from_dpi(dpi, dims);
    if (!g.valid())
        throw std::invalid_argument("physical dimensions violate lattice invariants");

    std::vector<double> xs, ys;
    xs.reserve(centroids.size());
    ys.reserve(centroids.size());
    for (const DotCentroid& c : centroids) {
        xs.push_back(c.x);
        ys.push_back(c.y);
    }
    g.origin_x = fit_phase(xs, g.cell_advance_x, g.dot_pitch, 2);
    g.origin_y = fit_phase(ys, g.line_advance_y, g.dot_pitch, 3);
    normalize_origin(g, centroids);
    return g;
}

LatticeGeometry estimate_lattice_auto(std::span<const DotCentroid> centroids) {
    if (centroids.size() < 6)
        throw InsufficientDots("automatic lattice fit requires at least 6 dots");

    std::vector<double> xs, ys;
    xs.reserve(centroids.size());
    ys.reserve(centroids.size());
    for (const DotCentroid& c : centroids) {
        xs.push_back(c.x);
        ys.push_back(c.y);
    }
    const std::vector<Cluster> xc = cluster_axis(std::move(xs));
    const std::vector<Cluster> yc = cluster_axis(std::move(ys));
    if (xc.size() < 2 || yc.size() < 2)
        throw InsufficientDots(
            "automatic lattice fit requires dots spanning 2+ columns and 2+ rows");

    double pitch = estimate_pitch(xc, yc);
    double advance_x = estimate_advance(xc, pitch, 2, 2.0, 2.4);
    double advance_y = estimate_advance(yc, pitch, 3, 3.0, 4.0);

    double phi_x = 0.0;
    double phi_y = 0.0;
    for (int round = 0; round < 2; ++round) {
        const AxisAssign ax = decompose_axis(xc, pitch, advance_x, 2);
        const AxisAssign ay = decompose_axis(yc, pitch, advance_y, 3);
        solve_joint_lsq(xc, ax, yc, ay, phi_x, advance_x, pitch, phi_y, advance_y);
    }

    LatticeGeometry g;
    g.origin_x = phi_x;
    g.origin_y = phi_y;
    g.dot_pitch = pitch;
    g.cell_advance_x = advance_x;
    g.line_advance_y = advance_y;
    if (!g.valid())
        throw NoLatticeFit("inferred spacings are inconsistent with a Braille lattice");
    normalize_origin(g, centroids);
    return g;
}

CellGridResult assign_cells(std::span<const DotCentroid> centroids,
                            const LatticeGeometry& geometry, double snap_tolerance) {
    if (!(snap_tolerance > 0.0 && snap_tolerance <= 0.5))
        throw std::invalid_argument("snap tolerance must lie in (0, 0.5]");
    if (!geometry.valid())
        throw std::invalid_argument("lattice geometry violates its invariants");

    CellGridResult result;
    result.geometry = geometry;
    const double tol = snap_tolerance * geometry.dot_pitch;

    struct Winner {
        double residual;
        double x;
        double y;
    };
    std::map<std::tuple<long, long, int>, Winner> taken;

    const auto report = [&result](GridDiagnostic::Kind kind, double x, double y,
                                  std::string detail) {
        result.diagnostics.push_back({kind, x, y, std::move(detail)});
    };

    for (const DotCentroid& c : centroids) {
        const AxisSnap sx =
            snap_axis(c.x, geometry.origin_x, geometry.cell_advance_x,
                      geometry.dot_pitch, 2);
        const AxisSnap sy =
            snap_axis(c.y, geometry.origin_y, geometry.line_advance_y,
                      geometry.dot_pitch, 3);
        const double residual = std::hypot(sx.offset, sy.offset);
        std::ostringstream msg;
        if (residual > tol) {
            msg << "dot at (" << c.x << ", " << c.y << ") is " << residual
                << " px off-lattice (tolerance " << tol << " px)";
            report(GridDiagnostic::Kind::UnassignedDot, c.x, c.y, msg.str());
            continue;
        }
        if (sx.index < 0 || sy.index < 0) {
            msg << "dot at (" << c.x << ", " << c.y
                << ") snaps before the page origin (line " << sy.index << ", col "
                << sx.index << ")";
            report(GridDiagnostic::Kind::UnassignedDot, c.x, c.y, msg.str());
            continue;
        }
        const int dot = sx.slot * 3 + sy.slot + 1;
        const auto key = std::make_tuple(sy.index, sx.index, dot);
        const auto it = taken.find(key);
        if (it == taken.end()) {
            taken.emplace(key, Winner{residual, c.x, c.y});
            continue;
        }
        // Keep the closer centroid; on a tie the earlier one stays.
        const Winner loser =
            residual < it->second.residual
                ? std::exchange(it->second, Winner{residual, c.x, c.y})
                : Winner{residual, c.x, c.y};
        msg << "dot at (" << loser.x << ", " << loser.y << ") duplicates line "
            << std::get<0>(key) << " col " << std::get<1>(key) << " dot " << dot;
        report(GridDiagnostic::Kind::DuplicateDot, loser.x, loser.y, msg.str());
    }

    for (const auto& [key, winner] : taken) {
        const CellAddress addr{static_cast<int>(std::get<0>(key)),
                               static_cast<int>(std::get<1>(key))};
        result.cells[addr].mask |= static_cast<std::uint8_t>(1u << (std::get<2>(key) - 1));
    }
    return result;
}

std::vector<std::vector<BrailleCell>> cells_to_lines(const CellGridResult& result) {
    std::vector<std::vector<BrailleCell>> lines;
    if (result.cells.empty())
        return lines;

    const int line_min = result.cells.begin()->first.line;
    const int line_max = result.cells.rbegin()->first.line;
    auto it = result.cells.begin();
    for (int line = line_min; line <= line_max; ++line) {
        std::vector<std::pair<int, BrailleCell>> populated;
        while (it != result.cells.end() && it->first.line == line) {
            populated.emplace_back(it->first.col, it->second);
            ++it;
        }
        if (populated.empty()) {
            lines.emplace_back();
            continue;
        }
        const int col_min = populated.front().first;
        const int col_max = populated.back().first;
        std::vector<BrailleCell> cells(static_cast<std::size_t>(col_max - col_min + 1),
                                       kSpaceCell);
        for (const auto& [col, cell] : populated)
            cells[static_cast<std::size_t>(col - col_min)] = cell;
        lines.push_back(std::move(cells));
    }
    return lines;
}

}  // namespace obr
