#pragma once

#include <span>
#include <utility>
#include <vector>

#include "obr/raster.hpp"

namespace obr {

/// Sub-pixel center and pixel area of one candidate Braille dot.
struct DotCentroid {
    double x = 0.0;
    double y = 0.0;
    int area = 0;
};

/// Area acceptance window for dot candidates. 1 <= area_min <= area_max.
struct DotFilter {
    int area_min = 1;
    int area_max = 1 << 30;
};

/// One maximal 8-connected component of foreground pixels.
struct Component {
    std::vector<std::pair<int, int>> pixels;  // (x, y), discovery order
    double centroid_x = 0.0;
    double centroid_y = 0.0;
    int min_x = 0, min_y = 0, max_x = 0, max_y = 0;

    int area() const { return static_cast<int>(pixels.size()); }
};

/// Partitions all 1-pixels into maximal 8-connected components.
/// Components are ordered by (min y, min x) of their pixel sets.
std::vector<Component> label_components(const BinaryImage& image);

/// Keeps components with area in [area_min, area_max], preserving order.
std::vector<DotCentroid> extract_centroids(std::span<const Component> components,
                                           const DotFilter& filter);

/// Area window for an expected dot radius (px):
/// [max(3, round(0.2*pi*r^2)), round(5*pi*r^2)].
DotFilter dot_filter_for_radius(double radius_px);

}  // namespace obr
