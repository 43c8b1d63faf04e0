// SPDX-License-Identifier: Apache-2.0
#include "pmdice/trainer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pmdice/ops.hpp"

namespace pmdice {

ScalarField Model::logits(const ScalarField& features) const {
    if (features.channels() != n_features)
        throw std::invalid_argument("model: feature channel count mismatch");
    const std::size_t n = features.spatial_numel();
    Dims out_dims = features.dims;
    out_dims[0] = n_classes;
    ScalarField out(out_dims, 0.0);
    for (std::size_t f = 0; f < n_features; ++f)
        for (std::size_t c = 0; c < n_classes; ++c) {
            const double w = weights[f * n_classes + c];
            if (w == 0.0) continue;
            for (std::size_t i = 0; i < n; ++i) out[c * n + i] += features[f * n + i] * w;
        }
    return out;
}

double poly_lr(double initial_lr, std::size_t iter, std::size_t max_iter) {
    if (max_iter == 0 || iter >= max_iter) return 0.0;
    const double frac = 1.0 - static_cast<double>(iter) / static_cast<double>(max_iter);
    return initial_lr * std::pow(frac, 0.9);
}

void adam_step(std::vector<double>& w, const std::vector<double>& g, AdamState& state, double lr,
               double weight_decay, double beta1, double beta2, double eps) {
    if (w.size() != g.size()) throw std::invalid_argument("adam: shape mismatch");
    if (state.m.empty()) {
        state.m.assign(w.size(), 0.0);
        state.v.assign(w.size(), 0.0);
    }
    if (state.m.size() != w.size()) throw std::invalid_argument("adam: state shape mismatch");
    ++state.t;
    const double bc1 = 1.0 - std::pow(beta1, static_cast<double>(state.t));
    const double bc2 = 1.0 - std::pow(beta2, static_cast<double>(state.t));
    for (std::size_t k = 0; k < w.size(); ++k) {
        w[k] -= lr * weight_decay * w[k];
        state.m[k] = beta1 * state.m[k] + (1.0 - beta1) * g[k];
        state.v[k] = beta2 * state.v[k] + (1.0 - beta2) * g[k] * g[k];
        const double mhat = state.m[k] / bc1;
        const double vhat = state.v[k] / bc2;
        w[k] -= lr * mhat / (std::sqrt(vhat) + eps);
    }
}

void TrainConfig::validate() const {
    loss.validate();
    scenes.validate();
    if (!(initial_lr > 0.0)) throw std::invalid_argument("train: initial_lr must be > 0");
    if (!(weight_decay >= 0.0)) throw std::invalid_argument("train: weight_decay must be >= 0");
    if (!(beta1 >= 0.0 && beta1 < 1.0 && beta2 >= 0.0 && beta2 < 1.0))
        throw std::invalid_argument("train: betas must lie in [0,1)");
    if (!(adam_eps > 0.0)) throw std::invalid_argument("train: adam_eps must be > 0");
    if (eval_scenes < 1) throw std::invalid_argument("train: need at least one held-out scene");
    if (!(tau >= 0.0)) throw std::invalid_argument("train: tau must be >= 0");
}

double weight_gradient(const Model& model, const ScalarField& features, const LabelField& labels,
                       const LossSpec& loss, std::vector<double>& grad_out) {
    const ScalarField probs = softmax(model.logits(features));
    const LossResult res = evaluate(loss, probs, labels);
    const ScalarField dlogits = softmax_vjp(probs, res.grad);
    const std::size_t n = features.spatial_numel();
    grad_out.assign(model.weights.size(), 0.0);
    for (std::size_t f = 0; f < model.n_features; ++f)
        for (std::size_t c = 0; c < model.n_classes; ++c) {
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) acc += features[f * n + i] * dlogits[c * n + i];
            grad_out[f * model.n_classes + c] = acc;
        }
    return res.value;
}

namespace {

struct SceneSet {
    std::vector<Scene> scenes;
    std::vector<ScalarField> features;
};

SceneSet make_scenes(const SceneConfig& cfg, std::size_t first, std::size_t count) {
    SceneSet set;
    set.scenes.reserve(count);
    set.features.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        set.scenes.push_back(gen_scene(cfg, first + j));
        set.features.push_back(extract_features(set.scenes.back().image));
    }
    return set;
}

EpochEval eval_on(const Model& model, const SceneSet& held_out, double tau) {
    EpochEval ev;
    const std::size_t k = held_out.scenes.size();
    MetricPanel sum;
    for (std::size_t j = 0; j < k; ++j) {
        const Scene& scene = held_out.scenes[j];
        const ScalarField probs = softmax(model.logits(held_out.features[j]));
        const LabelField pred = hard_argmax(probs);
        const MetricPanel p = panel_from_labels(pred, scene.labels, model.n_classes, tau);
        if (sum.num_classes == 0) {
            sum = p;
        } else {
            for (std::size_t c = 0; c < p.num_classes; ++c) {
                sum.dice[c] += p.dice[c];
                sum.iou[c] += p.iou[c];
                sum.precision[c] += p.precision[c];
                sum.recall[c] += p.recall[c];
                sum.nsd[c] += p.nsd[c];
            }
            sum.mdice += p.mdice;
            sum.miou += p.miou;
            sum.mprec += p.mprec;
            sum.mrec += p.mrec;
            sum.mnsd += p.mnsd;
        }
        ev.small_dice += small_region_dice(pred, scene);
    }
    const double inv = 1.0 / static_cast<double>(k);
    for (std::size_t c = 0; c < sum.num_classes; ++c) {
        sum.dice[c] *= inv;
        sum.iou[c] *= inv;
        sum.precision[c] *= inv;
        sum.recall[c] *= inv;
        sum.nsd[c] *= inv;
    }
    sum.mdice *= inv;
    sum.miou *= inv;
    sum.mprec *= inv;
    sum.mrec *= inv;
    sum.mnsd *= inv;
    ev.panel = sum;
    ev.small_dice *= inv;
    return ev;
}

}  // namespace

EpochEval eval_model(const Model& model, const TrainConfig& cfg) {
    SceneConfig sc = cfg.scenes;
    sc.seed = cfg.seed;
    const SceneSet held_out = make_scenes(sc, sc.n_scenes, cfg.eval_scenes);
    return eval_on(model, held_out, cfg.tau);
}

std::pair<Model, TrainHistory> train(const TrainConfig& cfg) {
    cfg.validate();
    SceneConfig sc = cfg.scenes;
    sc.seed = cfg.seed;
    const SceneSet training = make_scenes(sc, 0, sc.n_scenes);
    const SceneSet held_out = make_scenes(sc, sc.n_scenes, cfg.eval_scenes);

    Model model(kFeatureCount, sc.num_classes());
    AdamState state;
    TrainHistory history;
    const std::size_t max_iter = cfg.epochs * sc.n_scenes;
    history.loss.reserve(max_iter);
    history.lr.reserve(max_iter);

    std::vector<double> grad;
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        const std::size_t s = iter % sc.n_scenes;
        const double value =
            weight_gradient(model, training.features[s], training.scenes[s].labels, cfg.loss, grad);
        if (!std::isfinite(value))
            throw std::runtime_error("train: loss became non-finite at iteration " +
                                     std::to_string(iter));
        const double lr = poly_lr(cfg.initial_lr, iter, max_iter);
        adam_step(model.weights, grad, state, lr, cfg.weight_decay, cfg.beta1, cfg.beta2,
                  cfg.adam_eps);
        history.loss.push_back(value);
        history.lr.push_back(lr);
        if (cfg.epoch_evals && s == sc.n_scenes - 1)
            history.epochs.push_back(eval_on(model, held_out, cfg.tau));
    }
    return {std::move(model), std::move(history)};
}

std::vector<SweepRow> gamma_sweep(const TrainConfig& base,
                                  const std::vector<std::pair<double, double>>& gammas,
                                  const std::vector<std::uint64_t>& seeds) {
    if (gammas.empty() || seeds.empty())
        throw std::invalid_argument("sweep: gamma and seed lists must be non-empty");
    std::vector<SweepRow> rows;
    rows.reserve(gammas.size() * seeds.size());
    for (const auto& [gamma_fg, gamma_bg] : gammas) {
        for (const auto seed : seeds) {
            TrainConfig cfg = base;
            cfg.loss = make_loss(LossKind::pm_dice);
            cfg.loss.pm_gamma = gamma_fg;
            cfg.loss.gamma_per_class[0] = gamma_bg;
            cfg.seed = seed;
            cfg.epoch_evals = false;
            auto [model, history] = train(cfg);
            const EpochEval ev = eval_model(model, cfg);
            SweepRow row;
            row.gamma_fg = gamma_fg;
            row.gamma_bg = gamma_bg;
            row.seed = seed;
            row.mdice = ev.panel.mdice;
            row.miou = ev.panel.miou;
            row.mprec = ev.panel.mprec;
            row.mrec = ev.panel.mrec;
            row.mnsd = ev.panel.mnsd;
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace pmdice
