// SPDX-License-Identifier: Apache-2.0
#include "pmdice/losses.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pmdice {

namespace {

constexpr double kLogClamp = 1e-12;

struct Instance {
    std::size_t c_count = 0;
    std::size_t n = 0;
    std::vector<std::size_t> class_pixels;
    std::size_t present = 0;
};

Instance check_instance(const ScalarField& probs, const LabelField& labels) {
    if (probs.dims.size() < 2)
        throw std::invalid_argument("loss: probability field needs channel + spatial dims");
    Instance inst;
    inst.c_count = probs.channels();
    inst.n = probs.spatial_numel();
    if (inst.c_count < 2) throw std::invalid_argument("loss: need at least 2 classes");
    const Dims spatial(probs.dims.begin() + 1, probs.dims.end());
    if (!same_dims(spatial, labels.dims))
        throw std::invalid_argument("loss: label dims do not match probability field");
    for (std::size_t k = 0; k < probs.size(); ++k) {
        const double p = probs[k];
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("loss: probabilities must lie in [0, 1]");
    }
    inst.class_pixels.assign(inst.c_count, 0);
    for (std::size_t i = 0; i < inst.n; ++i) {
        const int c = labels[i];
        if (c < 0 || static_cast<std::size_t>(c) >= inst.c_count)
            throw std::invalid_argument("loss: label out of range");
        ++inst.class_pixels[static_cast<std::size_t>(c)];
    }
    for (auto cnt : inst.class_pixels)
        if (cnt > 0) ++inst.present;
    return inst;
}

// Highest-score indices, ties resolved by ascending index.
std::vector<std::size_t> top_indices(const std::vector<double>& score, std::size_t keep) {
    std::vector<std::size_t> idx(score.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (score[a] != score[b]) return score[a] > score[b];
        return a < b;
    });
    idx.resize(keep);
    return idx;
}

LossResult ce_like(const LossSpec& spec, const ScalarField& probs, const LabelField& labels,
                   const ScalarField& detached, const Instance& inst, bool want_grad) {
    const std::size_t n = inst.n;
    std::vector<std::uint8_t> keep(n, 1);
    if (spec.kind == LossKind::topk_ce) {
        std::vector<double> hard(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto c = static_cast<std::size_t>(labels[i]);
            hard[i] = -std::log(std::max(detached[c * n + i], kLogClamp));
        }
        keep.assign(n, 0);
        for (auto i : top_indices(hard, topk_count(spec.k_percent, n))) keep[i] = 1;
    }

    LossResult res;
    if (want_grad) res.grad = ScalarField(probs.dims, 0.0);
    const bool focal = spec.kind == LossKind::focal_ce;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!keep[i]) continue;
        const auto c = static_cast<std::size_t>(labels[i]);
        const std::size_t k = c * n + i;
        const double p = probs[k];
        const double lnp = std::log(std::max(p, kLogClamp));
        if (!focal) {
            sum -= lnp;
            if (want_grad && p > kLogClamp) res.grad[k] = -1.0 / p;
        } else {
            const double f = std::pow(1.0 - p, spec.gamma);
            sum -= f * lnp;
            if (want_grad) {
                double d = 0.0;
                if (p > kLogClamp) d += f / p;
                if (spec.gamma > 0.0 && lnp != 0.0)
                    d -= spec.gamma * std::pow(1.0 - p, spec.gamma - 1.0) * lnp;
                res.grad[k] = -d;
            }
        }
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    res.value = sum * inv_n;
    if (want_grad)
        for (std::size_t k = 0; k < res.grad.size(); ++k) res.grad[k] *= inv_n;
    return res;
}

LossResult dice_like(const LossSpec& spec, const ScalarField& probs, const LabelField& labels,
                     const ScalarField& detached, const Instance& inst, bool want_grad) {
    const std::size_t cc = inst.c_count;
    const std::size_t n = inst.n;

    // Per-pixel weights from the detached snapshot: modulation for pm_dice,
    // retention masks for the resampled variants, 1 otherwise.
    std::vector<double> w(cc * n, 1.0);
    if (spec.kind == LossKind::pm_dice) {
        for (std::size_t c = 0; c < cc; ++c) {
            const double g = spec.gamma_for(c);
            for (std::size_t i = 0; i < n; ++i) {
                const double y = labels[i] == static_cast<int>(c) ? 1.0 : 0.0;
                w[c * n + i] = std::pow(std::fabs(y - detached[c * n + i]), g);  // pow(0, 0) == 1
            }
        }
    } else if (spec.kind == LossKind::focal_dice_tn || spec.kind == LossKind::topk_dice_pos) {
        const bool rank_negatives = spec.kind == LossKind::focal_dice_tn;
        for (std::size_t c = 0; c < cc; ++c) {
            std::vector<std::size_t> pool;
            std::vector<double> err;
            for (std::size_t i = 0; i < n; ++i) {
                const bool positive = labels[i] == static_cast<int>(c);
                if (positive == rank_negatives) continue;  // the other side is always retained
                pool.push_back(i);
                err.push_back(rank_negatives ? detached[c * n + i] : 1.0 - detached[c * n + i]);
            }
            std::vector<std::uint8_t> kept(pool.size(), 0);
            for (auto r : top_indices(err, topk_count(spec.k_percent, pool.size()))) kept[r] = 1;
            for (std::size_t r = 0; r < pool.size(); ++r)
                if (!kept[r]) w[c * n + pool[r]] = 0.0;
        }
    }

    std::vector<double> num(cc, 0.0);
    std::vector<double> den(cc, 0.0);
    for (std::size_t c = 0; c < cc; ++c) {
        double a = 0.0;
        double b = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t k = c * n + i;
            const double y = labels[i] == static_cast<int>(c) ? 1.0 : 0.0;
            const double p = probs[k];
            a += w[k] * y * p;
            b += w[k] * (y * y + p * p);
        }
        num[c] = 2.0 * a + spec.epsilon;
        den[c] = b + spec.epsilon;
    }

    const double inv_cstar = 1.0 / static_cast<double>(inst.present);
    LossResult res;
    if (want_grad) res.grad = ScalarField(probs.dims, 0.0);
    double acc = 0.0;
    for (std::size_t c = 0; c < cc; ++c) {
        if (inst.class_pixels[c] == 0) continue;
        const double s = num[c] / den[c];
        double kappa;  // d(loss)/d(S_c)
        if (spec.kind == LossKind::log_dice) {
            acc += -std::log(std::max(s, kLogClamp)) * inv_cstar;
            kappa = s > kLogClamp ? -inv_cstar / s : 0.0;
        } else {
            acc += s * inv_cstar;
            kappa = -inv_cstar;
        }
        if (want_grad) {
            const double d2 = den[c] * den[c];
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t k = c * n + i;
                const double y = labels[i] == static_cast<int>(c) ? 1.0 : 0.0;
                res.grad[k] = kappa * w[k] * (2.0 * y * den[c] - 2.0 * probs[k] * num[c]) / d2;
            }
        }
    }
    res.value = spec.kind == LossKind::log_dice ? acc : 1.0 - acc;
    return res;
}

LossResult generalized(const LossSpec& spec, const ScalarField& probs, const LabelField& labels,
                       const Instance& inst, bool want_grad) {
    const std::size_t cc = inst.c_count;
    const std::size_t n = inst.n;
    std::vector<double> wc(cc, 0.0);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t c = 0; c < cc; ++c) {
        if (inst.class_pixels[c] == 0) continue;
        const double area = static_cast<double>(inst.class_pixels[c]);
        wc[c] = 1.0 / (area * area);
        double a = 0.0;
        double b = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double y = labels[i] == static_cast<int>(c) ? 1.0 : 0.0;
            const double p = probs[c * n + i];
            a += y * p;
            b += y * y + p * p;
        }
        num += wc[c] * a;
        den += wc[c] * b;
    }
    num = 2.0 * num + spec.epsilon;
    den += spec.epsilon;

    LossResult res;
    res.value = 1.0 - num / den;
    if (want_grad) {
        res.grad = ScalarField(probs.dims, 0.0);
        const double d2 = den * den;
        for (std::size_t c = 0; c < cc; ++c) {
            if (inst.class_pixels[c] == 0) continue;
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t k = c * n + i;
                const double y = labels[i] == static_cast<int>(c) ? 1.0 : 0.0;
                res.grad[k] = -wc[c] * (2.0 * y * den - 2.0 * probs[k] * num) / d2;
            }
        }
    }
    return res;
}

LossResult eval_impl(const LossSpec& spec, const ScalarField& probs, const LabelField& labels,
                     const ScalarField& detached, bool want_grad) {
    const Instance inst = check_instance(probs, labels);
    if (!same_dims(probs.dims, detached.dims))
        throw std::invalid_argument("loss: snapshot dims do not match probability field");
    switch (spec.kind) {
        case LossKind::ce:
        case LossKind::focal_ce:
        case LossKind::topk_ce:
            return ce_like(spec, probs, labels, detached, inst, want_grad);
        case LossKind::dice:
        case LossKind::pm_dice:
        case LossKind::log_dice:
        case LossKind::focal_dice_tn:
        case LossKind::topk_dice_pos:
            return dice_like(spec, probs, labels, detached, inst, want_grad);
        case LossKind::generalized_dice:
            return generalized(spec, probs, labels, inst, want_grad);
        case LossKind::compound: {
            LossResult a = eval_impl(spec.parts[0], probs, labels, detached, want_grad);
            LossResult b = eval_impl(spec.parts[1], probs, labels, detached, want_grad);
            LossResult res;
            res.value = spec.w1 * a.value + spec.w2 * b.value;
            if (want_grad) {
                res.grad = std::move(a.grad);
                for (std::size_t k = 0; k < res.grad.size(); ++k)
                    res.grad[k] = spec.w1 * res.grad[k] + spec.w2 * b.grad[k];
            }
            return res;
        }
    }
    throw std::logic_error("loss: unhandled kind");
}

}  // namespace

std::size_t topk_count(double k_percent, std::size_t n) {
    if (n == 0) return 0;
    const auto k = static_cast<std::size_t>(std::ceil(k_percent * static_cast<double>(n) / 100.0));
    return std::min(std::max<std::size_t>(k, 1), n);
}

double LossSpec::gamma_for(std::size_t c) const {
    const auto it = gamma_per_class.find(c);
    return it == gamma_per_class.end() ? pm_gamma : it->second;
}

void LossSpec::validate() const {
    if (!(gamma >= 0.0)) throw std::invalid_argument("loss: gamma must be >= 0");
    if (!(pm_gamma >= 0.0)) throw std::invalid_argument("loss: pm gamma must be >= 0");
    for (const auto& [c, g] : gamma_per_class) {
        (void)c;
        if (!(g >= 0.0)) throw std::invalid_argument("loss: per-class gamma must be >= 0");
    }
    if (!(k_percent > 0.0 && k_percent <= 100.0))
        throw std::invalid_argument("loss: k_percent must lie in (0, 100]");
    if (!(epsilon > 0.0)) throw std::invalid_argument("loss: epsilon must be > 0");
    if (!std::isfinite(w1) || !std::isfinite(w2))
        throw std::invalid_argument("loss: compound weights must be finite");
    if (kind == LossKind::compound) {
        if (parts.size() != 2)
            throw std::invalid_argument("loss: compound needs exactly two child losses");
        for (const auto& part : parts) {
            if (part.kind == LossKind::compound)
                throw std::invalid_argument("loss: compound children must not be compound");
            part.validate();
        }
    }
}

LossSpec make_loss(LossKind kind) {
    LossSpec spec;
    spec.kind = kind;
    if (kind == LossKind::topk_ce) spec.k_percent = 10.0;
    return spec;
}

LossSpec make_compound(LossSpec a, LossSpec b, double w1, double w2) {
    LossSpec spec;
    spec.kind = LossKind::compound;
    spec.parts.push_back(std::move(a));
    spec.parts.push_back(std::move(b));
    spec.w1 = w1;
    spec.w2 = w2;
    return spec;
}

LossResult evaluate(const LossSpec& spec, const ScalarField& probs, const LabelField& labels) {
    spec.validate();
    return eval_impl(spec, probs, labels, probs, true);
}

double loss_value(const LossSpec& spec, const ScalarField& probs, const LabelField& labels,
                  const ScalarField& detached) {
    spec.validate();
    return eval_impl(spec, probs, labels, detached, false).value;
}

DiceBreakdown dice_class_scores(const ScalarField& probs, const LabelField& labels, double epsilon) {
    const Instance inst = check_instance(probs, labels);
    DiceBreakdown out;
    out.score.assign(inst.c_count, 0.0);
    out.present.assign(inst.c_count, 0);
    const std::size_t n = inst.n;
    for (std::size_t c = 0; c < inst.c_count; ++c) {
        if (inst.class_pixels[c] == 0) continue;
        out.present[c] = 1;
        double a = 0.0;
        double b = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double y = labels[i] == static_cast<int>(c) ? 1.0 : 0.0;
            const double p = probs[c * n + i];
            a += y * p;
            b += y * y + p * p;
        }
        out.score[c] = (2.0 * a + epsilon) / (b + epsilon);
    }
    return out;
}

namespace {
constexpr std::pair<LossKind, const char*> kKindNames[] = {
    {LossKind::ce, "ce"},
    {LossKind::focal_ce, "focal_ce"},
    {LossKind::topk_ce, "topk_ce"},
    {LossKind::dice, "dice"},
    {LossKind::pm_dice, "pm_dice"},
    {LossKind::generalized_dice, "generalized_dice"},
    {LossKind::log_dice, "log_dice"},
    {LossKind::focal_dice_tn, "focal_dice_tn"},
    {LossKind::topk_dice_pos, "topk_dice_pos"},
    {LossKind::compound, "compound"},
};
}  // namespace

LossKind loss_kind_from_string(const std::string& name) {
    for (const auto& [kind, str] : kKindNames)
        if (name == str) return kind;
    throw std::invalid_argument("unknown loss kind: " + name);
}

std::string to_string(LossKind kind) {
    for (const auto& [k, str] : kKindNames)
        if (k == kind) return str;
    return "?";
}

}  // namespace pmdice
