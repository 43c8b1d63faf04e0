// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "pmdice/field.hpp"
#include "pmdice/losses.hpp"

namespace pmdice {

struct GradReport {
    double max_abs_error = 0.0;
    double max_rel_error = 0.0;  // |analytic - fd| / max(inf-norm of both grads, 1e-8)
    std::size_t arg_trial = 0;
    std::size_t arg_class = 0;
    std::size_t arg_pixel = 0;
    double h = 1e-6;
    bool clipped = false;  // a perturbation hit the [0,1] wall and was shortened
};

// Central finite differences of the loss with respect to each probability
// coordinate. With freeze_modulation set, the modulating term and all top-K
// retention masks are derived once from the unperturbed field and reused for
// every perturbed evaluation; without it they are re-derived per evaluation,
// which deliberately violates the stop-gradient contract.
ScalarField finite_diff_grad(const LossSpec& spec, const ScalarField& probs,
                             const LabelField& labels, double h, bool freeze_modulation,
                             bool* clipped = nullptr);

// Analytic-vs-finite-difference comparison on one instance.
GradReport finite_diff_report(const LossSpec& spec, const ScalarField& probs,
                              const LabelField& labels, double h, bool freeze_modulation);

// Worst case over seeded random instances: C in {2,3,4}, spatial 2x2..8x8,
// probs from softmax of standard-normal logits, uniform random labels.
GradReport grad_check(const LossSpec& spec, std::size_t n_trials, std::uint64_t seed,
                      double h = 1e-6, bool freeze_modulation = true);

// All-pairs re-implementation of the normalized surface distance, including
// its own boundary extraction. 2D masks only; O(n^2) in boundary size.
double brute_nsd(const Mask& pred, const Mask& truth, double tau);

// The documented stop-gradient witness: a 4-pixel two-class instance where
// pm_dice's analytic gradient matches frozen finite differences but departs
// from unfrozen ones by a wide margin.
void detach_witness(LossSpec& spec, ScalarField& probs, LabelField& labels);

}  // namespace pmdice
