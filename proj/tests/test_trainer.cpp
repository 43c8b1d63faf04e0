// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "pmdice/ops.hpp"
#include "pmdice/rng.hpp"
#include "pmdice/trainer.hpp"

using namespace pmdice;

namespace {

// Small fast configuration shared by the training tests.
TrainConfig tiny_config() {
    TrainConfig cfg;
    cfg.scenes = preset_moderate();
    // Roomy enough that the separation rule stays satisfiable wherever the
    // big disk lands, for every (seed, index) a test may pick.
    cfg.scenes.height = 32;
    cfg.scenes.width = 32;
    cfg.scenes.big_radius_min = 4.0;
    cfg.scenes.big_radius_max = 5.0;
    cfg.scenes.n_scenes = 4;
    cfg.eval_scenes = 2;
    cfg.epochs = 5;
    return cfg;
}

}  // namespace

TEST_CASE("poly_lr follows the schedule") {
    CHECK(poly_lr(0.01, 0, 100) == 0.01);
    CHECK(poly_lr(0.01, 100, 100) == 0.0);
    CHECK(poly_lr(0.01, 150, 100) == 0.0);
    CHECK(poly_lr(0.01, 50, 100) == doctest::Approx(0.01 * 0.535887).epsilon(1e-5));

    double prev = poly_lr(1.0, 0, 10);
    for (std::size_t it = 1; it < 10; ++it) {
        double lr = poly_lr(1.0, it, 10);
        CHECK(lr < prev);
        prev = lr;
    }
}

TEST_CASE("adam_step") {
    SUBCASE("zero gradient and zero decay leave weights unchanged") {
        std::vector<double> w{0.5, -0.25};
        std::vector<double> g{0.0, 0.0};
        AdamState st;
        adam_step(w, g, st, 0.1, 0.0);
        CHECK(w[0] == 0.5);
        CHECK(w[1] == -0.25);
        CHECK(st.t == 1);
    }
    SUBCASE("first step moves each coordinate by ~lr against the gradient") {
        std::vector<double> w{0.0, 0.0, 0.0};
        std::vector<double> g{0.3, -2.0, 1e-3};
        AdamState st;
        adam_step(w, g, st, 0.1, 0.0);
        for (std::size_t k = 0; k < w.size(); ++k) {
            CHECK(std::fabs(w[k]) == doctest::Approx(0.1).epsilon(1e-4));
            CHECK(w[k] * g[k] < 0.0);
        }
    }
    SUBCASE("decoupled decay shrinks weights before the update") {
        std::vector<double> w{1.0};
        std::vector<double> g{0.0};
        AdamState st;
        adam_step(w, g, st, 0.5, 0.1);
        CHECK(w[0] == doctest::Approx(1.0 - 0.5 * 0.1).epsilon(1e-12));
    }
}

TEST_CASE("training is deterministic and epochs=0 is the identity") {
    TrainConfig cfg = tiny_config();
    auto [model_a, hist_a] = train(cfg);
    auto [model_b, hist_b] = train(cfg);
    CHECK(model_a.weights == model_b.weights);
    CHECK(hist_a.loss == hist_b.loss);
    REQUIRE(hist_a.loss.size() == cfg.epochs * cfg.scenes.n_scenes);
    CHECK(hist_a.epochs.size() == cfg.epochs);

    cfg.epochs = 0;
    auto [zero_model, zero_hist] = train(cfg);
    for (double w : zero_model.weights) CHECK(w == 0.0);
    CHECK(zero_hist.loss.empty());
    CHECK(zero_hist.epochs.empty());
}

TEST_CASE("compound with weights (1,0) trains identically to its first child") {
    TrainConfig plain = tiny_config();
    plain.loss = make_loss(LossKind::dice);

    TrainConfig wrapped = tiny_config();
    wrapped.loss = make_compound(make_loss(LossKind::dice), make_loss(LossKind::ce), 1.0, 0.0);

    auto [model_a, hist_a] = train(plain);
    auto [model_b, hist_b] = train(wrapped);
    CHECK(model_a.weights == model_b.weights);
    CHECK(hist_a.loss == hist_b.loss);
}

TEST_CASE("dice on a noise-free high-contrast preset trains to mDice > 0.95") {
    TrainConfig cfg;
    cfg.scenes = preset_moderate();
    cfg.scenes.noise_sigma = 0.0;
    cfg.scenes.small_contrast = 0.5;
    cfg.loss = make_loss(LossKind::dice);
    cfg.epochs = 100;
    cfg.epoch_evals = false;

    auto [model, hist] = train(cfg);
    (void)hist;
    // Score on the training scenes themselves (smoke baseline, not held out).
    SceneConfig sc = cfg.scenes;
    sc.seed = cfg.seed;
    double mdice = 0.0;
    for (std::size_t idx = 0; idx < sc.n_scenes; ++idx) {
        Scene s = gen_scene(sc, idx);
        LabelField pred = hard_argmax(softmax(model.logits(extract_features(s.image))));
        mdice += panel_from_labels(pred, s.labels, 2, cfg.tau).mdice;
    }
    CHECK(mdice / static_cast<double>(sc.n_scenes) > 0.95);
}

TEST_CASE("weight-space gradients match finite differences end to end") {
    SceneConfig sc = preset_moderate();
    sc.height = 24;
    sc.width = 24;
    sc.big_radius_min = 3.0;
    sc.big_radius_max = 4.0;
    sc.small_radius_min = 1.0;
    sc.small_radius_max = 1.5;
    Scene scene = gen_scene(sc, 0);
    ScalarField feats = extract_features(scene.image);

    Model model(kFeatureCount, 2);
    Rng rng(77);
    for (auto& w : model.weights) w = 0.3 * rng.normal();

    for (auto kind : {LossKind::dice, LossKind::pm_dice}) {
        LossSpec loss = make_loss(kind);
        std::vector<double> analytic;
        weight_gradient(model, feats, scene.labels, loss, analytic);

        // Frozen modulation: every finite-difference evaluation reuses the
        // snapshot from the unperturbed weights.
        ScalarField base_probs = softmax(model.logits(feats));
        const double h = 1e-6;
        double max_rel = 0.0;
        double scale = 1e-8;
        for (double a : analytic) scale = std::max(scale, std::fabs(a));
        for (std::size_t k = 0; k < model.weights.size(); ++k) {
            Model up = model, down = model;
            up.weights[k] += h;
            down.weights[k] -= h;
            double lu = loss_value(loss, softmax(up.logits(feats)), scene.labels, base_probs);
            double ld = loss_value(loss, softmax(down.logits(feats)), scene.labels, base_probs);
            double fd = (lu - ld) / (2.0 * h);
            max_rel = std::max(max_rel, std::fabs(analytic[k] - fd) / scale);
        }
        INFO("kind ", to_string(kind));
        CHECK(max_rel < 1e-4);
    }
}

TEST_CASE("gamma_sweep emits one row per (gamma pair, seed)") {
    TrainConfig base = tiny_config();
    base.epochs = 2;
    base.epoch_evals = false;
    auto rows = gamma_sweep(base, {{0.0, 0.0}, {1.0, 1.0}}, {1, 2, 3});
    REQUIRE(rows.size() == 6);

    // gamma = 0 rows reproduce a plain-dice run exactly.
    TrainConfig plain = base;
    plain.loss = make_loss(LossKind::dice);
    plain.seed = 1;
    auto [model, hist] = train(plain);
    (void)hist;
    auto ev = eval_model(model, plain);
    CHECK(rows[0].gamma_fg == 0.0);
    CHECK(rows[0].seed == 1);
    CHECK(rows[0].mdice == ev.panel.mdice);
    CHECK(rows[0].mrec == ev.panel.mrec);
}
