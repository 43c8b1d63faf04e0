// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "pmdice/field.hpp"

namespace pmdice {

// Imbalanced two-disk scene: one large high-contrast object, one small object
// whose contrast (and the noise floor) controls difficulty.
struct SceneConfig {
    std::size_t height = 48;
    std::size_t width = 48;
    std::size_t n_scenes = 16;
    double big_radius_min = 7.0;
    double big_radius_max = 9.0;
    double small_radius_min = 2.0;
    double small_radius_max = 3.0;
    double small_contrast = 0.15;  // intensity step of the small disk over the background
    double noise_sigma = 0.05;
    double fg_fraction = 0.10;  // expected foreground share, descriptive
    std::uint64_t seed = 1;
    bool multiclass = false;  // big disk -> class 1, small disk -> class 2

    std::size_t num_classes() const { return multiclass ? 3 : 2; }
    void validate() const;  // throws std::invalid_argument
};

struct Scene {
    ScalarField image;  // intensities in [0,1], dims [H,W]
    LabelField labels;  // 0 background, disks per SceneConfig
    Mask small_object_mask;
    double big_radius = 0.0;
    double small_radius = 0.0;
    double big_row = 0.0, big_col = 0.0;
    double small_row = 0.0, small_col = 0.0;
};

// Deterministic in (cfg.seed, index). Throws std::runtime_error when the two
// disks cannot be placed after bounded retries.
Scene gen_scene(const SceneConfig& cfg, std::size_t index);

// Fixed per-pixel feature stack over a 2D intensity image, replicate-padded:
// intensity, 3x3 box mean, central-difference gradient magnitude, row and
// column coordinates normalized to [-1,1], constant bias. Dims [6,H,W].
ScalarField extract_features(const ScalarField& image);
inline constexpr std::size_t kFeatureCount = 6;

SceneConfig preset_moderate();  // ~10% foreground
SceneConfig preset_severe();    // ~1% foreground, small low-contrast objects

// Deterministic demonstration instance: a large confidently-correct disk and
// a small confidently-missed one on a 16x16 grid, as two-class probabilities.
void easy_dominated_instance(ScalarField& probs, LabelField& labels);

// Hard Dice of the foreground prediction restricted to the small object's
// neighborhood (Chebyshev dilation of its mask).
double small_region_dice(const LabelField& pred, const Scene& scene, int dilate = 3);

}  // namespace pmdice
