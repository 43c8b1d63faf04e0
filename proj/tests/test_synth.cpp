// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "pmdice/metrics.hpp"
#include "pmdice/synth.hpp"

using namespace pmdice;

TEST_CASE("scene generation is pure in (seed, index)") {
    SceneConfig cfg = preset_moderate();
    Scene a = gen_scene(cfg, 3);
    Scene b = gen_scene(cfg, 3);
    CHECK(a.image.data == b.image.data);
    CHECK(a.labels.data == b.labels.data);
    CHECK(a.small_object_mask.data == b.small_object_mask.data);

    Scene c = gen_scene(cfg, 4);
    CHECK(a.image.data != c.image.data);

    cfg.seed = 2;
    Scene d = gen_scene(cfg, 3);
    CHECK(a.image.data != d.image.data);
}

TEST_CASE("scenes satisfy their geometric invariants") {
    SceneConfig cfg = preset_moderate();
    for (std::size_t idx = 0; idx < 8; ++idx) {
        Scene s = gen_scene(cfg, idx);
        for (double v : s.image.data) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
        CHECK(s.big_radius >= cfg.big_radius_min);
        CHECK(s.big_radius <= cfg.big_radius_max);

        // The small-object mask is exactly the small disk's label support.
        std::size_t labeled_small = 0;
        for (std::size_t i = 0; i < s.labels.size(); ++i) {
            if (s.small_object_mask[i]) CHECK(s.labels[i] == 1);
            labeled_small += s.small_object_mask[i];
        }
        CHECK(labeled_small > 0);

        // Disks keep their enforced separation, so they never overlap.
        double dr = s.big_row - s.small_row, dc = s.big_col - s.small_col;
        CHECK(std::sqrt(dr * dr + dc * dc) >= s.big_radius + s.small_radius);
    }
}

TEST_CASE("multiclass mode labels the disks separately") {
    SceneConfig cfg = preset_moderate();
    cfg.multiclass = true;
    CHECK(cfg.num_classes() == 3);
    Scene s = gen_scene(cfg, 0);
    bool has1 = false, has2 = false;
    for (std::size_t i = 0; i < s.labels.size(); ++i) {
        has1 |= s.labels[i] == 1;
        has2 |= s.labels[i] == 2;
        if (s.small_object_mask[i]) CHECK(s.labels[i] == 2);
    }
    CHECK(has1);
    CHECK(has2);
}

TEST_CASE("presets hit their imbalance targets within 30 percent") {
    for (const SceneConfig& cfg : {preset_moderate(), preset_severe()}) {
        double frac = 0.0;
        const std::size_t trials = 100;
        for (std::size_t idx = 0; idx < trials; ++idx) {
            Scene s = gen_scene(cfg, idx);
            std::size_t fg = 0;
            for (int v : s.labels.data) fg += v != 0;
            frac += static_cast<double>(fg) / static_cast<double>(s.labels.size());
        }
        frac /= static_cast<double>(trials);
        CHECK(frac > 0.7 * cfg.fg_fraction);
        CHECK(frac < 1.3 * cfg.fg_fraction);
    }
}

TEST_CASE("zero contrast and zero noise hide the small object exactly") {
    SceneConfig cfg = preset_moderate();
    cfg.small_contrast = 0.0;
    cfg.noise_sigma = 0.0;
    Scene s = gen_scene(cfg, 0);
    double bg = -1.0;
    for (std::size_t i = 0; i < s.image.size(); ++i) {
        if (s.labels[i] == 0 && bg < 0.0) bg = s.image[i];
        if (s.small_object_mask[i]) CHECK(s.image[i] == bg);
    }
}

TEST_CASE("impossible geometry raises a generation error") {
    SceneConfig cfg;
    cfg.height = 16;
    cfg.width = 16;
    cfg.big_radius_min = cfg.big_radius_max = 10.0;  // cannot fit
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("feature stack contract") {
    SUBCASE("constant image: zero gradient channel, unit bias") {
        ScalarField img({4, 4}, 0.7);
        ScalarField f = extract_features(img);
        REQUIRE(f.dims == Dims{kFeatureCount, 4, 4});
        for (std::size_t i = 0; i < 16; ++i) {
            CHECK(f[0 * 16 + i] == 0.7);  // intensity
            CHECK(f[1 * 16 + i] == doctest::Approx(0.7).epsilon(1e-12));
            CHECK(f[2 * 16 + i] == 0.0);  // gradient magnitude
            CHECK(f[5 * 16 + i] == 1.0);  // bias
        }
    }
    SUBCASE("single bright pixel spreads 1/9 through the box mean") {
        ScalarField img({5, 5}, 0.0);
        img[2 * 5 + 2] = 1.0;
        ScalarField f = extract_features(img);
        for (std::size_t r = 0; r < 5; ++r)
            for (std::size_t c = 0; c < 5; ++c) {
                bool near = r >= 1 && r <= 3 && c >= 1 && c <= 3;
                CHECK(f[1 * 25 + r * 5 + c] ==
                      doctest::Approx(near ? 1.0 / 9.0 : 0.0).epsilon(1e-12));
            }
    }
    SUBCASE("coordinate channels span [-1,1]") {
        ScalarField f = extract_features(ScalarField({3, 5}, 0.0));
        CHECK(f[3 * 15 + 0] == -1.0);           // first row
        CHECK(f[3 * 15 + 2 * 5] == 1.0);        // last row
        CHECK(f[4 * 15 + 0] == -1.0);           // first column
        CHECK(f[4 * 15 + 4] == 1.0);            // last column
        CHECK(f[4 * 15 + 2] == 0.0);            // center column
    }
}

TEST_CASE("the easy-dominated instance is a valid two-class field") {
    ScalarField probs;
    LabelField labels;
    easy_dominated_instance(probs, labels);
    REQUIRE(probs.dims == Dims{2, 16, 16});
    std::size_t fg = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        CHECK(probs[i] + probs[256 + i] == doctest::Approx(1.0).epsilon(1e-12));
        fg += labels[i] != 0;
    }
    CHECK(fg > 0);
    CHECK(fg < labels.size() / 2);
}

TEST_CASE("small_region_dice scores the small object's neighborhood only") {
    SceneConfig cfg = preset_moderate();
    Scene s = gen_scene(cfg, 1);

    CHECK(small_region_dice(s.labels, s) == 1.0);
    CHECK(small_region_dice(LabelField(s.labels.dims, 0), s) == 0.0);

    // Corrupting a prediction far away from the small object changes nothing.
    LabelField corrupted = s.labels;
    std::size_t w = s.labels.dims[1];
    std::size_t far = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < corrupted.size(); ++i) {
        double dr = static_cast<double>(i / w) - s.small_row;
        double dc = static_cast<double>(i % w) - s.small_col;
        if (dr * dr + dc * dc > best) {
            best = dr * dr + dc * dc;
            far = i;
        }
    }
    corrupted[far] = corrupted[far] == 0 ? 1 : 0;
    CHECK(small_region_dice(corrupted, s) == 1.0);
}
