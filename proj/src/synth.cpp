// SPDX-License-Identifier: Apache-2.0
#include "pmdice/synth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pmdice/rng.hpp"

namespace pmdice {

namespace {

constexpr double kBackground = 0.25;
constexpr double kBigContrast = 0.5;
constexpr int kPlacementRetries = 1000;

void paint_disk(LabelField& labels, double cy, double cx, double radius, int cls) {
    const auto height = static_cast<std::ptrdiff_t>(labels.dims[0]);
    const auto width = static_cast<std::ptrdiff_t>(labels.dims[1]);
    const double r2 = radius * radius;
    for (std::ptrdiff_t r = 0; r < height; ++r)
        for (std::ptrdiff_t c = 0; c < width; ++c) {
            const double dr = static_cast<double>(r) - cy;
            const double dc = static_cast<double>(c) - cx;
            if (dr * dr + dc * dc <= r2) labels[static_cast<std::size_t>(r * width + c)] = cls;
        }
}

}  // namespace

void SceneConfig::validate() const {
    if (height < 8 || width < 8) throw std::invalid_argument("scene: image too small");
    if (n_scenes < 1) throw std::invalid_argument("scene: n_scenes must be >= 1");
    if (!(big_radius_min > 0.0 && big_radius_max >= big_radius_min))
        throw std::invalid_argument("scene: bad big radius range");
    if (!(small_radius_min > 0.0 && small_radius_max >= small_radius_min))
        throw std::invalid_argument("scene: bad small radius range");
    const double span = static_cast<double>(std::min(height, width));
    if (2.0 * big_radius_max + 4.0 >= span || 2.0 * small_radius_max + 4.0 >= span)
        throw std::invalid_argument("scene: radii do not fit inside the image");
    if (!(small_contrast >= 0.0 && small_contrast <= 1.0))
        throw std::invalid_argument("scene: small_contrast must lie in [0,1]");
    if (!(noise_sigma >= 0.0)) throw std::invalid_argument("scene: noise_sigma must be >= 0");
    if (!(fg_fraction > 0.0 && fg_fraction < 1.0))
        throw std::invalid_argument("scene: fg_fraction must lie in (0,1)");
}

Scene gen_scene(const SceneConfig& cfg, std::size_t index) {
    cfg.validate();
    Rng rng(Rng::mix(cfg.seed, index));
    const double hh = static_cast<double>(cfg.height);
    const double ww = static_cast<double>(cfg.width);

    Scene scene;
    scene.big_radius = rng.uniform_in(cfg.big_radius_min, cfg.big_radius_max);
    scene.small_radius = rng.uniform_in(cfg.small_radius_min, cfg.small_radius_max);

    const auto place = [&](double radius, double& row, double& col) {
        row = rng.uniform_in(radius + 1.0, hh - radius - 2.0);
        col = rng.uniform_in(radius + 1.0, ww - radius - 2.0);
    };
    place(scene.big_radius, scene.big_row, scene.big_col);

    const double min_sep = scene.big_radius + scene.small_radius + 6.0;
    int attempt = 0;
    for (;; ++attempt) {
        if (attempt >= kPlacementRetries)
            throw std::runtime_error("scene: could not place the small object clear of the big one");
        place(scene.small_radius, scene.small_row, scene.small_col);
        const double dr = scene.small_row - scene.big_row;
        const double dc = scene.small_col - scene.big_col;
        if (std::sqrt(dr * dr + dc * dc) >= min_sep) break;
    }

    scene.labels = LabelField({cfg.height, cfg.width}, 0);
    paint_disk(scene.labels, scene.big_row, scene.big_col, scene.big_radius, 1);
    LabelField small_only({cfg.height, cfg.width}, 0);
    paint_disk(small_only, scene.small_row, scene.small_col, scene.small_radius, 1);
    const int small_cls = cfg.multiclass ? 2 : 1;
    scene.small_object_mask = Mask({cfg.height, cfg.width}, 0);
    for (std::size_t i = 0; i < small_only.size(); ++i) {
        if (small_only[i]) {
            scene.labels[i] = small_cls;
            scene.small_object_mask.data[i] = 1;
        }
    }

    scene.image = ScalarField({cfg.height, cfg.width}, kBackground);
    for (std::size_t i = 0; i < scene.image.size(); ++i) {
        if (scene.small_object_mask.data[i]) scene.image[i] = kBackground + cfg.small_contrast;
        else if (scene.labels[i] == 1) scene.image[i] = kBackground + kBigContrast;
        scene.image[i] = std::clamp(scene.image[i] + rng.normal(0.0, cfg.noise_sigma), 0.0, 1.0);
    }
    return scene;
}

ScalarField extract_features(const ScalarField& image) {
    if (image.dims.size() != 2) throw std::invalid_argument("features: expects a 2D image");
    const auto height = static_cast<std::ptrdiff_t>(image.dims[0]);
    const auto width = static_cast<std::ptrdiff_t>(image.dims[1]);
    const std::size_t n = image.size();
    ScalarField out({kFeatureCount, image.dims[0], image.dims[1]}, 0.0);

    const auto at = [&](std::ptrdiff_t r, std::ptrdiff_t c) {
        r = std::clamp<std::ptrdiff_t>(r, 0, height - 1);
        c = std::clamp<std::ptrdiff_t>(c, 0, width - 1);
        return image[static_cast<std::size_t>(r * width + c)];
    };

    for (std::ptrdiff_t r = 0; r < height; ++r) {
        for (std::ptrdiff_t c = 0; c < width; ++c) {
            const auto i = static_cast<std::size_t>(r * width + c);
            double box = 0.0;
            for (std::ptrdiff_t dr = -1; dr <= 1; ++dr)
                for (std::ptrdiff_t dc = -1; dc <= 1; ++dc) box += at(r + dr, c + dc);
            const double gr = (at(r + 1, c) - at(r - 1, c)) / 2.0;
            const double gc = (at(r, c + 1) - at(r, c - 1)) / 2.0;
            out[0 * n + i] = image[i];
            out[1 * n + i] = box / 9.0;
            out[2 * n + i] = std::sqrt(gr * gr + gc * gc);
            out[3 * n + i] = height > 1 ? -1.0 + 2.0 * static_cast<double>(r) / (height - 1) : 0.0;
            out[4 * n + i] = width > 1 ? -1.0 + 2.0 * static_cast<double>(c) / (width - 1) : 0.0;
            out[5 * n + i] = 1.0;
        }
    }
    return out;
}

SceneConfig preset_moderate() {
    SceneConfig cfg;
    cfg.height = 48;
    cfg.width = 48;
    cfg.big_radius_min = 7.0;
    cfg.big_radius_max = 9.0;
    cfg.small_radius_min = 2.0;
    cfg.small_radius_max = 3.0;
    cfg.small_contrast = 0.15;
    cfg.noise_sigma = 0.05;
    cfg.fg_fraction = 0.10;
    return cfg;
}

SceneConfig preset_severe() {
    SceneConfig cfg;
    cfg.height = 64;
    cfg.width = 64;
    cfg.big_radius_min = 3.0;
    cfg.big_radius_max = 4.0;
    cfg.small_radius_min = 1.2;
    cfg.small_radius_max = 1.8;
    cfg.small_contrast = 0.15;
    cfg.noise_sigma = 0.05;
    cfg.fg_fraction = 0.01;
    return cfg;
}

void easy_dominated_instance(ScalarField& probs, LabelField& labels) {
    labels = LabelField({16, 16}, 0);
    paint_disk(labels, 5.0, 5.0, 5.0, 1);
    LabelField small_only({16, 16}, 0);
    paint_disk(small_only, 12.0, 12.0, 2.0, 1);

    probs = ScalarField({2, 16, 16}, 0.0);
    const std::size_t n = labels.size();
    for (std::size_t i = 0; i < n; ++i) {
        double p_fg = 0.05;           // background and the missed small disk
        if (labels[i] == 1) p_fg = 0.95;  // the big disk is confidently right
        if (small_only[i]) {
            labels[i] = 1;
            p_fg = 0.05;
        }
        probs[0 * n + i] = 1.0 - p_fg;
        probs[1 * n + i] = p_fg;
    }
}

double small_region_dice(const LabelField& pred, const Scene& scene, int dilate) {
    if (!same_dims(pred.dims, scene.labels.dims))
        throw std::invalid_argument("small_region_dice: dims mismatch");
    const auto height = static_cast<std::ptrdiff_t>(pred.dims[0]);
    const auto width = static_cast<std::ptrdiff_t>(pred.dims[1]);
    int small_cls = 1;
    for (std::size_t i = 0; i < scene.small_object_mask.data.size(); ++i)
        if (scene.small_object_mask.data[i]) {
            small_cls = scene.labels[i];
            break;
        }

    Mask region(pred.dims, 0);
    for (std::ptrdiff_t r = 0; r < height; ++r)
        for (std::ptrdiff_t c = 0; c < width; ++c) {
            if (!scene.small_object_mask.data[static_cast<std::size_t>(r * width + c)]) continue;
            for (std::ptrdiff_t dr = -dilate; dr <= dilate; ++dr)
                for (std::ptrdiff_t dc = -dilate; dc <= dilate; ++dc) {
                    const std::ptrdiff_t rr = r + dr;
                    const std::ptrdiff_t cc = c + dc;
                    if (rr >= 0 && rr < height && cc >= 0 && cc < width)
                        region.data[static_cast<std::size_t>(rr * width + cc)] = 1;
                }
        }

    std::size_t tp = 0;
    std::size_t pred_count = 0;
    std::size_t true_count = 0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        if (!region.data[i]) continue;
        const bool p = pred[i] == small_cls;
        const bool t = scene.small_object_mask.data[i] != 0;
        if (p) ++pred_count;
        if (t) ++true_count;
        if (p && t) ++tp;
    }
    const std::size_t denom = pred_count + true_count;
    return denom == 0 ? 1.0 : 2.0 * static_cast<double>(tp) / static_cast<double>(denom);
}

}  // namespace pmdice
