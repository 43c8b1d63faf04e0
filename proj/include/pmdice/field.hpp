// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace pmdice {

using Dims = std::vector<std::size_t>;

std::size_t numel(const Dims& dims);

/// Dense row-major field of 64-bit floats. When used as a class field the
/// first dimension is the class channel (channel-major), so per-class
/// reductions are contiguous scans.
struct ScalarField {
    Dims dims;
    std::vector<double> data;

    ScalarField() = default;
    ScalarField(Dims d, double fill = 0.0);
    ScalarField(Dims d, std::vector<double> values);

    std::size_t size() const { return data.size(); }
    double operator[](std::size_t i) const { return data[i]; }
    double& operator[](std::size_t i) { return data[i]; }

    std::size_t channels() const { return dims.empty() ? 0 : dims[0]; }
    /// Number of pixels when dims are [C, spatial...].
    std::size_t spatial_numel() const;
};

/// Per-pixel class indices over the spatial grid (no channel dimension).
struct LabelField {
    Dims dims;
    std::vector<int> data;

    LabelField() = default;
    LabelField(Dims d, int fill = 0);
    LabelField(Dims d, std::vector<int> values);

    std::size_t size() const { return data.size(); }
    int operator[](std::size_t i) const { return data[i]; }
    int& operator[](std::size_t i) { return data[i]; }
};

/// Binary field over the spatial grid. Nonzero entries are set members.
struct Mask {
    Dims dims;
    std::vector<std::uint8_t> data;

    Mask() = default;
    Mask(Dims d, std::uint8_t fill = 0);
    Mask(Dims d, std::vector<std::uint8_t> values);

    std::size_t size() const { return data.size(); }
    bool operator[](std::size_t i) const { return data[i] != 0; }
    void set(std::size_t i, bool v) { data[i] = v ? 1 : 0; }
    std::size_t count() const;
};

bool same_dims(const Dims& a, const Dims& b);

/// Throws std::invalid_argument unless every value is finite.
void require_finite(const ScalarField& f, const char* what);

}  // namespace pmdice
