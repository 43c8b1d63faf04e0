// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "pmdice/field.hpp"

namespace pmdice {

// Per-pixel argmax over the channel axis; ties go to the lowest class index.
LabelField hard_argmax(const ScalarField& probs);

// One-vs-rest binary mask for a single class.
Mask class_mask(const LabelField& labels, int cls);

struct ConfusionCounts {
    std::size_t num_classes = 0;
    std::vector<std::size_t> tp, fp, fn, tn;  // one-vs-rest, per class
};

ConfusionCounts confusion(const LabelField& pred, const LabelField& truth, std::size_t num_classes);

struct ClassMetrics {
    double dice = 0.0;
    double iou = 0.0;
    double precision = 0.0;
    double recall = 0.0;
};

// Ratio convention: 0/0 -> 1 (absent class predicted absent), otherwise a
// zero numerator gives 0.
ClassMetrics overlap_metrics(std::size_t tp, std::size_t fp, std::size_t fn);

struct MetricPanel {
    std::size_t num_classes = 0;
    std::vector<double> dice, iou, precision, recall, nsd;
    // Foreground means over classes 1..C-1 (class 0 is the background).
    double mdice = 0.0, miou = 0.0, mprec = 0.0, mrec = 0.0, mnsd = 0.0;
};

MetricPanel panel_from_labels(const LabelField& pred, const LabelField& truth,
                              std::size_t num_classes, double tau);
MetricPanel panel(const ScalarField& probs, const LabelField& truth, double tau);

}  // namespace pmdice
