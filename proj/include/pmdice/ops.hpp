// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pmdice/field.hpp"

namespace pmdice {

/// Expands class indices into per-class binary channels: output dims are
/// [num_classes, spatial...], exactly one 1.0 per pixel.
ScalarField one_hot(const LabelField& labels, std::size_t num_classes);

/// Per-pixel softmax over the channel dimension with max subtraction.
/// Input dims [C, spatial...]; non-finite logits are rejected.
ScalarField softmax(const ScalarField& logits);

/// Vector-Jacobian product of softmax: out[c,i] = p[c,i] * (g[c,i] - sum_j g[j,i] p[j,i]).
ScalarField softmax_vjp(const ScalarField& probs, const ScalarField& upstream);

}  // namespace pmdice
