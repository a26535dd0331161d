#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "obr/dots.hpp"
#include "oracles.hpp"

using namespace obr;

TEST_CASE("label_components of a blank image is empty") {
    const BinaryImage img(8, 8, 0);
    CHECK(label_components(img).empty());
}

TEST_CASE("label_components handles a single pixel") {
    BinaryImage img(8, 8, 0);
    img.at(3, 4) = 1;
    const auto comps = label_components(img);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].area() == 1);
    CHECK(comps[0].centroid_x == 3.0);
    CHECK(comps[0].centroid_y == 4.0);
}

TEST_CASE("label_components joins diagonal neighbours") {
    BinaryImage img(2, 2, 0);
    img.at(0, 0) = 1;
    img.at(1, 1) = 1;
    const auto comps = label_components(img);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].area() == 2);
    CHECK(comps[0].centroid_x == 0.5);
    CHECK(comps[0].centroid_y == 0.5);
}

TEST_CASE("label_components matches the flood-fill reference on random images") {
    std::mt19937 rng(2024);
    std::bernoulli_distribution bit(0.35);
    for (int trial = 0; trial < 50; ++trial) {
        BinaryImage img(32, 32, 0);
        for (auto& v : img.data) v = bit(rng) ? 1 : 0;

        const auto got = label_components(img);
        const auto want = oracle::components8(img);
        REQUIRE(got.size() == want.size());
        std::size_t ones = 0;
        for (auto v : img.data) ones += v;
        std::size_t area_sum = 0;

        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].area() == static_cast<int>(want[i].pixels.size()));
            // Partial coordinate sums are integers well below 2^53, so the
            // centroid division is exact-comparable in double.
            CHECK(got[i].centroid_x == want[i].cx);
            CHECK(got[i].centroid_y == want[i].cy);

            std::vector<std::pair<int, int>> pixels;  // (y, x) like the oracle
            for (const auto& [x, y] : got[i].pixels) pixels.emplace_back(y, x);
            std::sort(pixels.begin(), pixels.end());
            CHECK(pixels == want[i].pixels);

            CHECK(got[i].centroid_x >= got[i].min_x);
            CHECK(got[i].centroid_x <= got[i].max_x);
            CHECK(got[i].centroid_y >= got[i].min_y);
            CHECK(got[i].centroid_y <= got[i].max_y);
            area_sum += static_cast<std::size_t>(got[i].area());
        }
        CHECK(area_sum == ones);
    }
}

TEST_CASE("label_components orders components by (min y, min x)") {
    BinaryImage img(6, 6, 0);
    img.at(4, 0) = 1;  // first row, rightish
    img.at(0, 0) = 1;  // first row, leftmost
    img.at(2, 3) = 1;  // later row
    const auto comps = label_components(img);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0].min_x == 0);
    CHECK(comps[0].min_y == 0);
    CHECK(comps[1].min_x == 4);
    CHECK(comps[1].min_y == 0);
    CHECK(comps[2].min_x == 2);
    CHECK(comps[2].min_y == 3);
}

namespace {

Component blob_of_area(int area, int offset) {
    Component c;
    for (int i = 0; i < area; ++i) c.pixels.emplace_back(offset + i, offset);
    c.centroid_x = offset + (area - 1) / 2.0;
    c.centroid_y = offset;
    c.min_x = offset;
    c.max_x = offset + area - 1;
    c.min_y = offset;
    c.max_y = offset;
    return c;
}

}  // namespace

TEST_CASE("extract_centroids filters on area") {
    std::vector<Component> comps;
    comps.push_back(blob_of_area(2, 0));
    comps.push_back(blob_of_area(60, 1));
    comps.push_back(blob_of_area(900, 2));
    const auto kept = extract_centroids(comps, DotFilter{3, 500});
    REQUIRE(kept.size() == 1);
    CHECK(kept[0].area == 60);
    CHECK(kept[0].x == comps[1].centroid_x);
    CHECK(kept[0].y == comps[1].centroid_y);

    CHECK(extract_centroids(std::vector<Component>{blob_of_area(1, 0)},
                            DotFilter{3, 500})
              .empty());
    CHECK(extract_centroids(std::vector<Component>{blob_of_area(50, 0)},
                            DotFilter{3, 500})
              .size() == 1);
}

TEST_CASE("extract_centroids keeps input order as a subsequence") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> area(1, 30);
    std::vector<Component> comps;
    for (int i = 0; i < 40; ++i) comps.push_back(blob_of_area(area(rng), i));
    const DotFilter filter{5, 20};
    const auto kept = extract_centroids(comps, filter);
    std::size_t cursor = 0;
    for (const Component& c : comps) {
        if (c.area() < filter.area_min || c.area() > filter.area_max) continue;
        REQUIRE(cursor < kept.size());
        CHECK(kept[cursor].x == c.centroid_x);
        CHECK(kept[cursor].area == c.area());
        ++cursor;
    }
    CHECK(cursor == kept.size());
}

TEST_CASE("extract_centroids validates the filter window") {
    const std::vector<Component> comps;
    CHECK_THROWS_AS(extract_centroids(comps, DotFilter{0, 5}), std::invalid_argument);
    CHECK_THROWS_AS(extract_centroids(comps, DotFilter{6, 5}), std::invalid_argument);
}

TEST_CASE("dot_filter_for_radius derives the documented area window") {
    // r = 8.8583 px (0.3 of the 300 dpi pitch): 0.2*pi*r^2 = 49.3, 5*pi*r^2 = 1232.6.
    const DotFilter f = dot_filter_for_radius(0.3 * 29.527559055118111);
    CHECK(f.area_min == 49);
    CHECK(f.area_max == 1233);

    const DotFilter tiny = dot_filter_for_radius(0.5);
    CHECK(tiny.area_min == 3);  // clamped floor
    CHECK(tiny.area_max == 4);  // round(5*pi*0.25) = round(3.93)

    CHECK_THROWS_AS(dot_filter_for_radius(0.0), std::invalid_argument);
}
