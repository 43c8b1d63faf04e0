// SPDX-License-Identifier: Apache-2.0
#include "pmdice/metrics.hpp"

#include <stdexcept>

#include "pmdice/surface.hpp"

namespace pmdice {

LabelField hard_argmax(const ScalarField& probs) {
    if (probs.dims.size() < 2)
        throw std::invalid_argument("hard_argmax: field needs channel + spatial dims");
    const std::size_t cc = probs.channels();
    const std::size_t n = probs.spatial_numel();
    LabelField out(Dims(probs.dims.begin() + 1, probs.dims.end()));
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t best = 0;
        double best_p = probs[i];
        for (std::size_t c = 1; c < cc; ++c) {
            const double p = probs[c * n + i];
            if (p > best_p) {
                best_p = p;
                best = c;
            }
        }
        out[i] = static_cast<int>(best);
    }
    return out;
}

Mask class_mask(const LabelField& labels, int cls) {
    Mask out(labels.dims, 0);
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == cls) out.data[i] = 1;
    return out;
}

ConfusionCounts confusion(const LabelField& pred, const LabelField& truth, std::size_t num_classes) {
    if (!same_dims(pred.dims, truth.dims))
        throw std::invalid_argument("confusion: label dims mismatch");
    ConfusionCounts cc;
    cc.num_classes = num_classes;
    cc.tp.assign(num_classes, 0);
    cc.fp.assign(num_classes, 0);
    cc.fn.assign(num_classes, 0);
    cc.tn.assign(num_classes, 0);
    const std::size_t n = pred.size();
    for (std::size_t i = 0; i < n; ++i) {
        const int p = pred[i];
        const int t = truth[i];
        if (p < 0 || static_cast<std::size_t>(p) >= num_classes || t < 0 ||
            static_cast<std::size_t>(t) >= num_classes)
            throw std::invalid_argument("confusion: label out of range");
        if (p == t) {
            ++cc.tp[static_cast<std::size_t>(p)];
        } else {
            ++cc.fp[static_cast<std::size_t>(p)];
            ++cc.fn[static_cast<std::size_t>(t)];
        }
    }
    for (std::size_t c = 0; c < num_classes; ++c)
        cc.tn[c] = n - cc.tp[c] - cc.fp[c] - cc.fn[c];
    return cc;
}

namespace {
double ratio(double num, double den) { return den == 0.0 ? 1.0 : num / den; }
}  // namespace

ClassMetrics overlap_metrics(std::size_t tp, std::size_t fp, std::size_t fn) {
    const auto tpd = static_cast<double>(tp);
    const auto fpd = static_cast<double>(fp);
    const auto fnd = static_cast<double>(fn);
    ClassMetrics m;
    m.dice = ratio(2.0 * tpd, 2.0 * tpd + fpd + fnd);
    m.iou = ratio(tpd, tpd + fpd + fnd);
    m.precision = ratio(tpd, tpd + fpd);
    m.recall = ratio(tpd, tpd + fnd);
    return m;
}

MetricPanel panel_from_labels(const LabelField& pred, const LabelField& truth,
                              std::size_t num_classes, double tau) {
    if (num_classes < 2) throw std::invalid_argument("panel: need at least 2 classes");
    const ConfusionCounts cc = confusion(pred, truth, num_classes);
    MetricPanel p;
    p.num_classes = num_classes;
    p.dice.resize(num_classes);
    p.iou.resize(num_classes);
    p.precision.resize(num_classes);
    p.recall.resize(num_classes);
    p.nsd.resize(num_classes);
    for (std::size_t c = 0; c < num_classes; ++c) {
        const ClassMetrics m = overlap_metrics(cc.tp[c], cc.fp[c], cc.fn[c]);
        p.dice[c] = m.dice;
        p.iou[c] = m.iou;
        p.precision[c] = m.precision;
        p.recall[c] = m.recall;
        p.nsd[c] =
            nsd(class_mask(pred, static_cast<int>(c)), class_mask(truth, static_cast<int>(c)), tau);
    }
    const double fg = static_cast<double>(num_classes - 1);
    for (std::size_t c = 1; c < num_classes; ++c) {
        p.mdice += p.dice[c] / fg;
        p.miou += p.iou[c] / fg;
        p.mprec += p.precision[c] / fg;
        p.mrec += p.recall[c] / fg;
        p.mnsd += p.nsd[c] / fg;
    }
    return p;
}

MetricPanel panel(const ScalarField& probs, const LabelField& truth, double tau) {
    return panel_from_labels(hard_argmax(probs), truth, probs.channels(), tau);
}

}  // namespace pmdice
