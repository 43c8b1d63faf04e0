// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pmdice/field.hpp"
#include "pmdice/losses.hpp"
#include "pmdice/metrics.hpp"
#include "pmdice/synth.hpp"

namespace pmdice {

// Linear per-pixel classifier: logits[c,i] = sum_f features[f,i] * w[f,c].
struct Model {
    std::size_t n_features = 0;
    std::size_t n_classes = 0;
    std::vector<double> weights;  // row-major [n_features][n_classes]

    Model() = default;
    Model(std::size_t f, std::size_t c) : n_features(f), n_classes(c), weights(f * c, 0.0) {}
    ScalarField logits(const ScalarField& features) const;
};

// Polynomial decay: initial_lr * (1 - iter/max_iter)^0.9, clamped to 0 past the end.
double poly_lr(double initial_lr, std::size_t iter, std::size_t max_iter);

struct AdamState {
    std::vector<double> m, v;
    std::size_t t = 0;
};

// Bias-corrected Adam; decoupled weight decay (w -= lr*wd*w) is applied
// before the moment update.
void adam_step(std::vector<double>& w, const std::vector<double>& g, AdamState& state, double lr,
               double weight_decay, double beta1 = 0.9, double beta2 = 0.999, double eps = 1e-8);

struct TrainConfig {
    LossSpec loss;
    SceneConfig scenes;
    std::size_t epochs = 150;
    double initial_lr = 1e-2;
    double weight_decay = 1e-4;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double adam_eps = 1e-8;
    std::size_t eval_scenes = 4;  // held-out scenes drawn past the training indices
    double tau = 2.0;             // NSD tolerance for evaluation panels
    std::uint64_t seed = 1;       // overrides scenes.seed
    bool epoch_evals = true;

    void validate() const;  // throws std::invalid_argument
};

struct EpochEval {
    MetricPanel panel;        // entries averaged over the held-out scenes
    double small_dice = 0.0;  // mean small-object-region Dice over the held-out scenes
};

struct TrainHistory {
    std::vector<double> loss;  // one entry per iteration
    std::vector<double> lr;
    std::vector<EpochEval> epochs;  // one entry per epoch when epoch_evals is set
};

// Full-image steps, one scene per iteration round-robin; forward is
// softmax(model.logits(features)), backward chains the loss gradient through
// the softmax onto the weights. Deterministic given cfg. Throws
// std::runtime_error if the loss goes non-finite.
std::pair<Model, TrainHistory> train(const TrainConfig& cfg);

// Loss and its gradient with respect to the model weights on one instance.
double weight_gradient(const Model& model, const ScalarField& features, const LabelField& labels,
                       const LossSpec& loss, std::vector<double>& grad_out);

// Evaluation of a model on cfg's held-out split.
EpochEval eval_model(const Model& model, const TrainConfig& cfg);

struct SweepRow {
    double gamma_fg = 0.0;
    double gamma_bg = 0.0;
    std::uint64_t seed = 0;
    double mdice = 0.0, miou = 0.0, mprec = 0.0, mrec = 0.0, mnsd = 0.0;
};

// Trains pm_dice once per (gamma pair, seed) on copies of `base` and reports
// held-out foreground means. gamma_fg applies to every foreground class,
// gamma_bg to the background class.
std::vector<SweepRow> gamma_sweep(const TrainConfig& base,
                                  const std::vector<std::pair<double, double>>& gammas,
                                  const std::vector<std::uint64_t>& seeds);

}  // namespace pmdice
