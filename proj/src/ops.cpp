// SPDX-License-Identifier: Apache-2.0
#include "pmdice/ops.hpp"

#include <cmath>
#include <string>

namespace pmdice {

ScalarField one_hot(const LabelField& labels, std::size_t num_classes) {
    if (num_classes < 1) throw std::invalid_argument("one_hot: num_classes must be >= 1");
    Dims out_dims;
    out_dims.reserve(labels.dims.size() + 1);
    out_dims.push_back(num_classes);
    out_dims.insert(out_dims.end(), labels.dims.begin(), labels.dims.end());
    ScalarField out(out_dims, 0.0);
    const std::size_t n = labels.size();
    for (std::size_t i = 0; i < n; ++i) {
        const int c = labels[i];
        if (c < 0 || static_cast<std::size_t>(c) >= num_classes)
            throw std::invalid_argument("one_hot: label index " + std::to_string(c) + " out of range for " +
                                        std::to_string(num_classes) + " classes");
        out[static_cast<std::size_t>(c) * n + i] = 1.0;
    }
    return out;
}

ScalarField softmax(const ScalarField& logits) {
    require_finite(logits, "softmax");
    const std::size_t c_count = logits.channels();
    const std::size_t n = logits.spatial_numel();
    ScalarField out(logits.dims, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double mx = logits[i];
        for (std::size_t c = 1; c < c_count; ++c) mx = std::max(mx, logits[c * n + i]);
        double sum = 0.0;
        for (std::size_t c = 0; c < c_count; ++c) {
            const double e = std::exp(logits[c * n + i] - mx);
            out[c * n + i] = e;
            sum += e;
        }
        for (std::size_t c = 0; c < c_count; ++c) out[c * n + i] /= sum;
    }
    return out;
}

ScalarField softmax_vjp(const ScalarField& probs, const ScalarField& upstream) {
    if (!same_dims(probs.dims, upstream.dims)) throw std::invalid_argument("softmax_vjp: dims mismatch");
    const std::size_t c_count = probs.channels();
    const std::size_t n = probs.spatial_numel();
    ScalarField out(probs.dims, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double dot = 0.0;
        for (std::size_t c = 0; c < c_count; ++c) dot += upstream[c * n + i] * probs[c * n + i];
        for (std::size_t c = 0; c < c_count; ++c) {
            const std::size_t k = c * n + i;
            out[k] = probs[k] * (upstream[k] - dot);
        }
    }
    return out;
}

}  // namespace pmdice
