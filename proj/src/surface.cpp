// SPDX-License-Identifier: Apache-2.0
#include "pmdice/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace pmdice {

namespace {

std::vector<std::size_t> row_major_strides(const Dims& dims) {
    std::vector<std::size_t> strides(dims.size(), 1);
    for (std::size_t a = dims.size(); a-- > 1;) strides[a - 1] = strides[a] * dims[a];
    return strides;
}

// 1D squared-distance transform: d[q] = min_p (q - p)^2 + f[p].
void dt1d(const std::vector<double>& f, std::vector<double>& d, std::vector<int>& v,
          std::vector<double>& z, int n) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    int k = 0;
    v[0] = 0;
    z[0] = -inf;
    z[1] = inf;
    for (int q = 1; q < n; ++q) {
        double s = (f[q] + double(q) * q - (f[v[k]] + double(v[k]) * v[k])) / (2.0 * (q - v[k]));
        while (s <= z[k]) {
            --k;
            s = (f[q] + double(q) * q - (f[v[k]] + double(v[k]) * v[k])) / (2.0 * (q - v[k]));
        }
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = inf;
    }
    k = 0;
    for (int q = 0; q < n; ++q) {
        while (z[k + 1] < q) ++k;
        d[q] = double(q - v[k]) * (q - v[k]) + f[v[k]];
    }
}

}  // namespace

ScalarField squared_edt(const Mask& seeds) {
    ScalarField dist(seeds.dims, kUnreachable);
    bool any = false;
    for (std::size_t i = 0; i < seeds.data.size(); ++i) {
        if (seeds.data[i]) {
            dist[i] = 0.0;
            any = true;
        }
    }
    if (!any) return dist;

    const auto strides = row_major_strides(seeds.dims);
    const std::size_t total = dist.size();
    const std::size_t max_extent = *std::max_element(seeds.dims.begin(), seeds.dims.end());
    std::vector<double> f(max_extent), d(max_extent), z(max_extent + 1);
    std::vector<int> v(max_extent);

    for (std::size_t a = 0; a < seeds.dims.size(); ++a) {
        const std::size_t n = seeds.dims[a];
        if (n < 2) continue;
        const std::size_t stride = strides[a];
        for (std::size_t start = 0; start < total; ++start) {
            if ((start / stride) % n != 0) continue;  // not the head of a line along axis a
            for (std::size_t q = 0; q < n; ++q) f[q] = dist[start + q * stride];
            dt1d(f, d, v, z, static_cast<int>(n));
            for (std::size_t q = 0; q < n; ++q) dist[start + q * stride] = d[q];
        }
    }
    return dist;
}

Mask extract_boundary(const Mask& mask) {
    Mask out(mask.dims, 0);
    const auto strides = row_major_strides(mask.dims);
    const std::size_t total = mask.data.size();
    for (std::size_t i = 0; i < total; ++i) {
        if (!mask.data[i]) continue;
        bool border = false;
        for (std::size_t a = 0; a < mask.dims.size() && !border; ++a) {
            const std::size_t coord = (i / strides[a]) % mask.dims[a];
            if (coord == 0 || !mask.data[i - strides[a]]) border = true;
            else if (coord == mask.dims[a] - 1 || !mask.data[i + strides[a]]) border = true;
        }
        if (border) out.data[i] = 1;
    }
    return out;
}

Mask distance_band(const Mask& boundary, double tau) {
    if (!(tau >= 0.0)) throw std::invalid_argument("distance_band: tau must be >= 0");
    const ScalarField dist = squared_edt(boundary);
    Mask band(boundary.dims, 0);
    const double tau2 = tau * tau;
    for (std::size_t i = 0; i < band.data.size(); ++i)
        if (dist[i] <= tau2) band.data[i] = 1;
    return band;
}

double nsd(const Mask& pred, const Mask& truth, double tau) {
    if (!same_dims(pred.dims, truth.dims)) throw std::invalid_argument("nsd: mask dims mismatch");
    if (!(tau >= 0.0)) throw std::invalid_argument("nsd: tau must be >= 0");
    const bool pred_empty = pred.count() == 0;
    const bool truth_empty = truth.count() == 0;
    if (pred_empty && truth_empty) return 1.0;
    if (pred_empty || truth_empty) return 0.0;

    const Mask sp = extract_boundary(pred);
    const Mask st = extract_boundary(truth);
    const Mask bp = distance_band(sp, tau);
    const Mask bt = distance_band(st, tau);

    std::size_t hits = 0;
    std::size_t denom = 0;
    for (std::size_t i = 0; i < sp.data.size(); ++i) {
        if (st.data[i]) {
            ++denom;
            if (bp.data[i]) ++hits;
        }
        if (sp.data[i]) {
            ++denom;
            if (bt.data[i]) ++hits;
        }
    }
    return static_cast<double>(hits) / static_cast<double>(denom);
}

}  // namespace pmdice
