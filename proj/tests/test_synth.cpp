#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "obr/dots.hpp"
#include "obr/synth.hpp"

using namespace obr;

namespace {

// Foreground mask of a noise-free rendering: dots are strictly darker than
// the background.
BinaryImage foreground_of(const GrayImage& image, const SynthConfig& config) {
    const int mid = (config.dot_intensity + config.background) / 2;
    BinaryImage out(image.width, image.height, 0);
    for (std::size_t i = 0; i < image.data.size(); ++i)
        out.data[i] = image.data[i] < mid ? 1 : 0;
    return out;
}

int total_dots(const std::vector<std::vector<BrailleCell>>& cells) {
    int n = 0;
    for (const auto& line : cells)
        for (const BrailleCell& cell : line)
            for (int d = 1; d <= 6; ++d) n += cell.has_dot(d) ? 1 : 0;
    return n;
}

}  // namespace

TEST_CASE("encode_text maps graphemes, spaces and newlines") {
    const CodeTable en = english_grade1_table();
    const auto a = encode_text("a", en);
    REQUIRE(a.size() == 1);
    REQUIRE(a[0].size() == 1);
    CHECK(a[0][0].dot_string() == "100000");

    const auto ml = encode_text("അ", malayalam_vowel_table());
    CHECK(ml[0][0].dot_string() == "100000");

    const auto doc = encode_text("a b\nc", en);
    REQUIRE(doc.size() == 2);
    CHECK(doc[0] == std::vector<BrailleCell>{BrailleCell{0x01}, kSpaceCell,
                                             BrailleCell{0x03}});
    CHECK(doc[1] == std::vector<BrailleCell>{BrailleCell{0x09}});
}

TEST_CASE("encode_text accepts aliased graphemes") {
    const auto cells = encode_text("ഐ", malayalam_vowel_table());
    CHECK(cells[0][0].dot_string() == "010010");
}

TEST_CASE("encode_text names the offending grapheme and position") {
    const CodeTable en = english_grade1_table();
    CHECK_THROWS_WITH_AS(encode_text("a€", en),
                         "UnencodableGrapheme: \"€\" at position 2",
                         UnencodableGrapheme);
    try {
        encode_text("ab ß", en);
        FAIL("expected UnencodableGrapheme");
    } catch (const UnencodableGrapheme& e) {
        CHECK(e.grapheme == "ß");
        CHECK(e.position == 4);
    }
}

TEST_CASE("a single dot renders one disk centred on the lattice position") {
    SynthConfig config;
    const auto page = render_page({{BrailleCell{0x01}}}, config);
    REQUIRE(page.truth.size() == 1);
    CHECK(page.truth[0].x == page.geometry.origin_x);
    CHECK(page.truth[0].y == page.geometry.origin_y);
    CHECK(page.geometry.origin_x == config.margin_px);

    const BinaryImage fg = foreground_of(page.image, config);
    const auto comps = label_components(fg);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].area() == page.truth[0].area);
    CHECK(std::abs(comps[0].centroid_x - page.truth[0].x) <= 0.25);
    CHECK(std::abs(comps[0].centroid_y - page.truth[0].y) <= 0.25);
}

TEST_CASE("disk count equals the number of set dots") {
    const CodeTable en = english_grade1_table();
    const auto cells = encode_text("the quick\nbrown fox", en);
    SynthConfig config;
    const auto page = render_page(cells, config);
    CHECK(static_cast<int>(page.truth.size()) == total_dots(cells));

    const auto comps = label_components(foreground_of(page.image, config));
    CHECK(comps.size() == page.truth.size());
}

TEST_CASE("rendering is deterministic for a fixed config") {
    const auto cells = encode_text("waltz bad nymph", english_grade1_table());
    SynthConfig config;
    config.noise_sigma = 6.0;
    config.jitter_px = 2.0;
    config.seed = 97;
    const auto first = render_page(cells, config);
    const auto second = render_page(cells, config);
    CHECK(first.image == second.image);
    REQUIRE(first.truth.size() == second.truth.size());
    for (std::size_t i = 0; i < first.truth.size(); ++i) {
        CHECK(first.truth[i].x == second.truth[i].x);
        CHECK(first.truth[i].y == second.truth[i].y);
    }

    SynthConfig reseeded = config;
    reseeded.seed = 98;
    CHECK_FALSE(render_page(cells, reseeded).image == first.image);
}

TEST_CASE("ground truth matches extracted centroids on noise-free pages") {
    const auto cells = encode_text("jackdaws love", english_grade1_table());
    SynthConfig config;
    config.jitter_px = 1.5;
    config.seed = 3;
    const auto page = render_page(cells, config);

    const auto comps = label_components(foreground_of(page.image, config));
    const auto centroids = extract_centroids(comps, DotFilter{3, 1 << 20});
    REQUIRE(centroids.size() == page.truth.size());
    for (const DotCentroid& t : page.truth) {
        double best = 1e9;
        for (const DotCentroid& c : centroids)
            best = std::min(best, std::hypot(c.x - t.x, c.y - t.y));
        CHECK(best <= 0.5);
    }
}

TEST_CASE("pages with no raised dot are rejected") {
    CHECK_THROWS_AS(render_page({}, SynthConfig{}), EmptyPage);
    CHECK_THROWS_AS(render_page({{kSpaceCell, kSpaceCell}, {}}, SynthConfig{}),
                    EmptyPage);
}

TEST_CASE("render_page validates its configuration") {
    const std::vector<std::vector<BrailleCell>> cells{{BrailleCell{0x01}}};
    SynthConfig bad;
    bad.dot_intensity = 230;  // not darker than the background
    CHECK_THROWS_AS(render_page(cells, bad), std::invalid_argument);
    bad = {};
    bad.noise_sigma = -1.0;
    CHECK_THROWS_AS(render_page(cells, bad), std::invalid_argument);
    bad = {};
    bad.dpi = 0.0;
    CHECK_THROWS_AS(render_page(cells, bad), std::invalid_argument);
    bad = {};
    bad.dpi = 100000.0;  // page would exceed practical bounds
    CHECK_THROWS_AS(render_page(cells, bad), std::invalid_argument);
}

TEST_CASE("truth_sidecar emits one x y area line per dot") {
    const std::vector<DotCentroid> truth{{1.5, 2.25, 7}, {30.0, 40.5, 52}};
    CHECK(truth_sidecar(truth) ==
          "1.500000 2.250000 7\n30.000000 40.500000 52\n");
    CHECK(truth_sidecar({}).empty());
}

TEST_CASE("jitter displaces dots by at most its amplitude") {
    const auto cells = encode_text("pack my box", english_grade1_table());
    SynthConfig config;
    config.jitter_px = 2.5;
    config.seed = 11;
    const auto jittered = render_page(cells, config);
    config.jitter_px = 0.0;
    const auto straight = render_page(cells, config);
    REQUIRE(jittered.truth.size() == straight.truth.size());
    for (std::size_t i = 0; i < straight.truth.size(); ++i) {
        CHECK(std::abs(jittered.truth[i].x - straight.truth[i].x) <= 2.5);
        CHECK(std::abs(jittered.truth[i].y - straight.truth[i].y) <= 2.5);
    }
}
