// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pmdice/field.hpp"

namespace pmdice {

enum class LossKind {
    ce,
    focal_ce,
    topk_ce,
    dice,
    pm_dice,
    generalized_dice,
    log_dice,
    focal_dice_tn,
    topk_dice_pos,
    compound,
};

LossKind loss_kind_from_string(const std::string& name);  // throws std::invalid_argument on unknown names
std::string to_string(LossKind kind);

// Loss configuration. `gamma` is the focal_ce exponent; the per-pixel
// modulation of pm_dice uses `pm_gamma` unless overridden per class in
// `gamma_per_class`. `k_percent` drives every top-K selection.
struct LossSpec {
    LossKind kind = LossKind::ce;
    double gamma = 2.0;
    double pm_gamma = 1.0;
    std::map<std::size_t, double> gamma_per_class;
    double k_percent = 100.0;
    double epsilon = 1e-6;
    std::vector<LossSpec> parts;  // compound children, exactly two
    double w1 = 1.0;
    double w2 = 1.0;

    double gamma_for(std::size_t c) const;
    void validate() const;  // throws std::invalid_argument
};

LossSpec make_loss(LossKind kind);  // kind-appropriate defaults (topk_ce gets k_percent = 10)
LossSpec make_compound(LossSpec a, LossSpec b, double w1 = 1.0, double w2 = 1.0);

struct LossResult {
    double value = 0.0;
    ScalarField grad;
};

// Scalar loss plus analytic gradient with respect to `probs`. All pixel
// weights derived from predictions (the pm_dice modulating term and every
// top-K retention mask) are computed from a detached snapshot of `probs`
// and treated as constants by the gradient. Summation order is fixed, so
// repeated calls are bit-identical.
LossResult evaluate(const LossSpec& spec, const ScalarField& probs, const LabelField& labels);

// Value-only path with an explicit snapshot: modulation and retention masks
// come from `detached` while the loss terms read `probs`. Passing the
// unperturbed field as `detached` makes finite differences honor the
// stop-gradient contract; passing the perturbed field deliberately breaks it.
double loss_value(const LossSpec& spec, const ScalarField& probs, const LabelField& labels,
                  const ScalarField& detached);

// Per-class soft Dice scores (squared-denominator form). `present[c]` is 1
// when class c has at least one ground-truth pixel; absent classes carry a
// score of 0 and are excluded from any average.
struct DiceBreakdown {
    std::vector<double> score;
    std::vector<std::uint8_t> present;
};
DiceBreakdown dice_class_scores(const ScalarField& probs, const LabelField& labels, double epsilon = 1e-6);

// Retained-element count for a top-K selection over n candidates:
// ceil(k_percent/100 * n), at least 1 when n > 0.
std::size_t topk_count(double k_percent, std::size_t n);

}  // namespace pmdice
