// SPDX-License-Identifier: Apache-2.0
#include "pmdice/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pmdice/ops.hpp"
#include "pmdice/rng.hpp"

namespace pmdice {

ScalarField finite_diff_grad(const LossSpec& spec, const ScalarField& probs,
                             const LabelField& labels, double h, bool freeze_modulation,
                             bool* clipped) {
    if (!(h > 0.0)) throw std::invalid_argument("finite_diff_grad: h must be > 0");
    if (clipped) *clipped = false;
    ScalarField grad(probs.dims, 0.0);
    ScalarField work = probs;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        const double p = probs[k];
        const double hi = std::min(p + h, 1.0);
        const double lo = std::max(p - h, 0.0);
        if ((p + h > 1.0 || p - h < 0.0) && clipped) *clipped = true;

        work[k] = hi;
        const double up = loss_value(spec, work, labels, freeze_modulation ? probs : work);
        work[k] = lo;
        const double down = loss_value(spec, work, labels, freeze_modulation ? probs : work);
        work[k] = p;
        grad[k] = (up - down) / (hi - lo);
    }
    return grad;
}

GradReport finite_diff_report(const LossSpec& spec, const ScalarField& probs,
                              const LabelField& labels, double h, bool freeze_modulation) {
    GradReport report;
    report.h = h;
    const ScalarField analytic = evaluate(spec, probs, labels).grad;
    const ScalarField fd = finite_diff_grad(spec, probs, labels, h, freeze_modulation, &report.clipped);

    double scale = 1e-8;
    for (std::size_t k = 0; k < analytic.size(); ++k)
        scale = std::max({scale, std::fabs(analytic[k]), std::fabs(fd[k])});

    const std::size_t n = probs.spatial_numel();
    for (std::size_t k = 0; k < analytic.size(); ++k) {
        const double abs_err = std::fabs(analytic[k] - fd[k]);
        if (abs_err > report.max_abs_error) report.max_abs_error = abs_err;
        const double rel = abs_err / scale;
        if (rel > report.max_rel_error) {
            report.max_rel_error = rel;
            report.arg_class = k / n;
            report.arg_pixel = k % n;
        }
    }
    return report;
}

GradReport grad_check(const LossSpec& spec, std::size_t n_trials, std::uint64_t seed, double h,
                      bool freeze_modulation) {
    if (n_trials < 1) throw std::invalid_argument("grad_check: need at least one trial");
    GradReport worst;
    worst.h = h;
    for (std::size_t t = 0; t < n_trials; ++t) {
        Rng rng(Rng::mix(seed, t));
        const std::size_t cc = 2 + rng.below(3);
        const std::size_t height = 2 + rng.below(7);
        const std::size_t width = 2 + rng.below(7);
        ScalarField logits({cc, height, width});
        for (std::size_t k = 0; k < logits.size(); ++k) logits[k] = rng.normal();
        const ScalarField probs = softmax(logits);
        LabelField labels({height, width});
        for (std::size_t i = 0; i < labels.size(); ++i)
            labels[i] = static_cast<int>(rng.below(cc));

        GradReport r = finite_diff_report(spec, probs, labels, h, freeze_modulation);
        worst.clipped = worst.clipped || r.clipped;
        worst.max_abs_error = std::max(worst.max_abs_error, r.max_abs_error);
        if (r.max_rel_error > worst.max_rel_error) {
            worst.max_rel_error = r.max_rel_error;
            worst.arg_trial = t;
            worst.arg_class = r.arg_class;
            worst.arg_pixel = r.arg_pixel;
        }
    }
    return worst;
}

double brute_nsd(const Mask& pred, const Mask& truth, double tau) {
    if (pred.dims.size() != 2 || !same_dims(pred.dims, truth.dims))
        throw std::invalid_argument("brute_nsd: expects two 2D masks of equal dims");
    if (!(tau >= 0.0)) throw std::invalid_argument("brute_nsd: tau must be >= 0");
    const std::size_t height = pred.dims[0];
    const std::size_t width = pred.dims[1];

    const auto at = [&](const Mask& m, std::size_t r, std::size_t c) {
        return m.data[r * width + c] != 0;
    };
    const auto border_points = [&](const Mask& m) {
        std::vector<std::pair<std::size_t, std::size_t>> pts;
        for (std::size_t r = 0; r < height; ++r)
            for (std::size_t c = 0; c < width; ++c) {
                if (!at(m, r, c)) continue;
                const bool edge = r == 0 || c == 0 || r == height - 1 || c == width - 1;
                if (edge || !at(m, r - 1, c) || !at(m, r + 1, c) || !at(m, r, c - 1) ||
                    !at(m, r, c + 1))
                    pts.emplace_back(r, c);
            }
        return pts;
    };

    if (pred.count() == 0 && truth.count() == 0) return 1.0;
    if (pred.count() == 0 || truth.count() == 0) return 0.0;

    const auto sp = border_points(pred);
    const auto st = border_points(truth);
    const double tau2 = tau * tau;
    const auto within = [&](const std::pair<std::size_t, std::size_t>& a,
                            const std::vector<std::pair<std::size_t, std::size_t>>& other) {
        for (const auto& b : other) {
            const double dr = static_cast<double>(a.first) - static_cast<double>(b.first);
            const double dc = static_cast<double>(a.second) - static_cast<double>(b.second);
            if (dr * dr + dc * dc <= tau2) return true;
        }
        return false;
    };

    std::size_t hits = 0;
    for (const auto& a : st)
        if (within(a, sp)) ++hits;
    for (const auto& a : sp)
        if (within(a, st)) ++hits;
    return static_cast<double>(hits) / static_cast<double>(st.size() + sp.size());
}

void detach_witness(LossSpec& spec, ScalarField& probs, LabelField& labels) {
    spec = make_loss(LossKind::pm_dice);
    spec.pm_gamma = 1.0;
    probs = ScalarField({2, 2, 2}, {0.1, 0.4, 0.9, 0.6, 0.9, 0.6, 0.1, 0.4});
    labels = LabelField({2, 2}, {1, 1, 0, 0});
}

}  // namespace pmdice
