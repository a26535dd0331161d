#include "obr/dots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace obr {

std::vector<Component> label_components(const BinaryImage& image) {
    const int w = image.width;
    const int h = image.height;
    std::vector<Component> components;
    if (w <= 0 || h <= 0)
        return components;

    std::vector<std::uint8_t> visited(static_cast<std::size_t>(w) * h, 0);
    std::vector<std::pair<int, int>> queue;

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t idx = static_cast<std::size_t>(y) * w + x;
            if (visited[idx] || image.data[idx] == 0)
                continue;

            Component comp;
            comp.min_x = comp.max_x = x;
            comp.min_y = comp.max_y = y;
            queue.clear();
            queue.emplace_back(x, y);
            visited[idx] = 1;

            std::int64_t sum_x = 0;
            std::int64_t sum_y = 0;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                const auto [px, py] = queue[head];
                comp.pixels.emplace_back(px, py);
                sum_x += px;
                sum_y += py;
                comp.min_x = std::min(comp.min_x, px);
                comp.max_x = std::max(comp.max_x, px);
                comp.min_y = std::min(comp.min_y, py);
                comp.max_y = std::max(comp.max_y, py);

                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        if (dx == 0 && dy == 0)
                            continue;
                        const int nx = px + dx;
                        const int ny = py + dy;
                        if (nx < 0 || ny < 0 || nx >= w || ny >= h)
                            continue;
                        const std::size_t nidx = static_cast<std::size_t>(ny) * w + nx;
                        if (visited[nidx] || image.data[nidx] == 0)
                            continue;
                        visited[nidx] = 1;
                        queue.emplace_back(nx, ny);
                    }
                }
            }

            const double n = static_cast<double>(comp.pixels.size());
            comp.centroid_x = static_cast<double>(sum_x) / n;
            comp.centroid_y = static_cast<double>(sum_y) / n;
            components.push_back(std::move(comp));
        }
    }

    std::stable_sort(components.begin(), components.end(),
                     [](const Component& a, const Component& b) {
                         if (a.min_y != b.min_y)
                             return a.min_y < b.min_y;
                         return a.min_x < b.min_x;
                     });
    return components;
}

std::vector<DotCentroid> extract_centroids(std::span<const Component> components,
                                           const DotFilter& filter) {
    if (filter.area_min < 1 || filter.area_min > filter.area_max)
        throw std::invalid_argument("dot filter requires 1 <= area_min <= area_max");
    std::vector<DotCentroid> centroids;
    for (const Component& comp : components) {
        const int a = comp.area();
        if (a < filter.area_min || a > filter.area_max)
            continue;
        centroids.push_back({comp.centroid_x, comp.centroid_y, a});
    }
    return centroids;
}

DotFilter dot_filter_for_radius(double radius_px) {
    if (!(radius_px > 0.0))
        throw std::invalid_argument("dot radius must be positive");
    const double disk = std::numbers::pi * radius_px * radius_px;
    DotFilter filter;
    filter.area_min = std::max(3, static_cast<int>(std::floor(0.2 * disk + 0.5)));
    filter.area_max = static_cast<int>(std::floor(5.0 * disk + 0.5));
    return filter;
}

}  // namespace obr
