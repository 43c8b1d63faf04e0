// SPDX-License-Identifier: Apache-2.0
#include "pmdice/field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pmdice {

std::size_t numel(const Dims& dims) {
    if (dims.empty()) throw std::invalid_argument("field rank must be >= 1");
    std::size_t n = 1;
    for (std::size_t d : dims) {
        if (d == 0) throw std::invalid_argument("field extents must be positive");
        n *= d;
    }
    return n;
}

ScalarField::ScalarField(Dims d, double fill) : dims(std::move(d)), data(numel(dims), fill) {}

ScalarField::ScalarField(Dims d, std::vector<double> values) : dims(std::move(d)), data(std::move(values)) {
    if (data.size() != numel(dims)) throw std::invalid_argument("data length does not match dims");
}

std::size_t ScalarField::spatial_numel() const {
    if (dims.size() < 2) throw std::invalid_argument("class field needs rank >= 2 (C x spatial)");
    std::size_t n = 1;
    for (std::size_t i = 1; i < dims.size(); ++i) n *= dims[i];
    return n;
}

LabelField::LabelField(Dims d, int fill) : dims(std::move(d)), data(numel(dims), fill) {}

LabelField::LabelField(Dims d, std::vector<int> values) : dims(std::move(d)), data(std::move(values)) {
    if (data.size() != numel(dims)) throw std::invalid_argument("data length does not match dims");
}

Mask::Mask(Dims d, std::uint8_t fill) : dims(std::move(d)), data(numel(dims), fill) {}

Mask::Mask(Dims d, std::vector<std::uint8_t> values) : dims(std::move(d)), data(std::move(values)) {
    if (data.size() != numel(dims)) throw std::invalid_argument("data length does not match dims");
}

std::size_t Mask::count() const {
    return static_cast<std::size_t>(std::count_if(data.begin(), data.end(), [](std::uint8_t v) { return v != 0; }));
}

bool same_dims(const Dims& a, const Dims& b) { return a == b; }

void require_finite(const ScalarField& f, const char* what) {
    for (double v : f.data) {
        if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + ": non-finite value");
    }
}

}  // namespace pmdice
