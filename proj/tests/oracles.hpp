// SPDX-License-Identifier: Apache-2.0
//
// Direct-evaluation loss oracles for pinning expected test values.
// Deliberately shares no code with the library: every function is a straight
// transcription of the defining formula over flat vectors, so agreement with
// the library is evidence rather than tautology.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

namespace oracles {

// Flat instance: p[c * n + i] is the probability of class c at pixel i.
struct Instance {
    std::size_t c = 0;
    std::size_t n = 0;
    std::vector<double> p;
    std::vector<int> y;

    double prob(std::size_t cls, std::size_t i) const { return p[cls * n + i]; }
    double hot(std::size_t cls, std::size_t i) const {
        return y[i] == static_cast<int>(cls) ? 1.0 : 0.0;
    }
    bool present(std::size_t cls) const {
        for (int v : y)
            if (v == static_cast<int>(cls)) return true;
        return false;
    }
};

// The shared 4-pixel instance: fg y=[1,1,0,0], fg p=[0.9,0.6,0.1,0.4].
inline Instance worked4() {
    Instance in;
    in.c = 2;
    in.n = 4;
    in.p = {0.1, 0.4, 0.9, 0.6, 0.9, 0.6, 0.1, 0.4};
    in.y = {1, 1, 0, 0};
    return in;
}

// The 2-pixel instance with true-class probabilities (0.8, 0.75).
inline Instance worked2() {
    Instance in;
    in.c = 2;
    in.n = 2;
    in.p = {0.8, 0.25, 0.2, 0.75};
    in.y = {0, 1};
    return in;
}

inline double clamped_log(double v) { return std::log(std::max(v, 1e-12)); }

inline double ce(const Instance& in) {
    double sum = 0.0;
    for (std::size_t i = 0; i < in.n; ++i)
        sum -= clamped_log(in.prob(static_cast<std::size_t>(in.y[i]), i));
    return sum / static_cast<double>(in.n);
}

inline double focal_ce(const Instance& in, double gamma) {
    double sum = 0.0;
    for (std::size_t i = 0; i < in.n; ++i) {
        double p = in.prob(static_cast<std::size_t>(in.y[i]), i);
        sum -= std::pow(1.0 - p, gamma) * clamped_log(p);
    }
    return sum / static_cast<double>(in.n);
}

inline double topk_ce(const Instance& in, double k_percent) {
    std::vector<double> pixel_ce(in.n);
    for (std::size_t i = 0; i < in.n; ++i)
        pixel_ce[i] = -clamped_log(in.prob(static_cast<std::size_t>(in.y[i]), i));
    std::vector<std::size_t> order(in.n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return pixel_ce[a] > pixel_ce[b];
    });
    auto keep = static_cast<std::size_t>(
        std::ceil(k_percent / 100.0 * static_cast<double>(in.n)));
    keep = std::clamp<std::size_t>(keep, 1, in.n);
    double sum = 0.0;
    for (std::size_t r = 0; r < keep; ++r) sum += pixel_ce[order[r]];
    return sum / static_cast<double>(in.n);
}

// Per-class score with an arbitrary per-pixel weight field; shared by the
// dice-family oracles below. retained[i]==0 drops pixel i entirely.
inline double weighted_class_score(const Instance& in, std::size_t cls,
                                   const std::vector<double>& w,
                                   const std::vector<int>& retained,
                                   double eps) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < in.n; ++i) {
        if (!retained[i]) continue;
        double yy = in.hot(cls, i);
        double pp = in.prob(cls, i);
        num += w[i] * yy * pp;
        den += w[i] * (yy * yy + pp * pp);
    }
    return (2.0 * num + eps) / (den + eps);
}

inline double dice(const Instance& in, double eps = 1e-6) {
    std::vector<double> ones(in.n, 1.0);
    std::vector<int> all(in.n, 1);
    double acc = 0.0;
    std::size_t present = 0;
    for (std::size_t cls = 0; cls < in.c; ++cls) {
        if (!in.present(cls)) continue;
        acc += weighted_class_score(in, cls, ones, all, eps);
        ++present;
    }
    return 1.0 - acc / static_cast<double>(present);
}

inline double pm_dice(const Instance& in, const std::vector<double>& gamma,
                      double eps = 1e-6) {
    std::vector<int> all(in.n, 1);
    double acc = 0.0;
    std::size_t present = 0;
    for (std::size_t cls = 0; cls < in.c; ++cls) {
        if (!in.present(cls)) continue;
        std::vector<double> m(in.n);
        for (std::size_t i = 0; i < in.n; ++i) {
            double err = std::fabs(in.hot(cls, i) - in.prob(cls, i));
            m[i] = gamma[cls] == 0.0 ? 1.0 : std::pow(err, gamma[cls]);
        }
        acc += weighted_class_score(in, cls, m, all, eps);
        ++present;
    }
    return 1.0 - acc / static_cast<double>(present);
}

inline double log_dice(const Instance& in, double eps = 1e-6) {
    std::vector<double> ones(in.n, 1.0);
    std::vector<int> all(in.n, 1);
    double acc = 0.0;
    std::size_t present = 0;
    for (std::size_t cls = 0; cls < in.c; ++cls) {
        if (!in.present(cls)) continue;
        acc += -clamped_log(weighted_class_score(in, cls, ones, all, eps));
        ++present;
    }
    return acc / static_cast<double>(present);
}

inline double generalized_dice(const Instance& in, double eps = 1e-6) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t cls = 0; cls < in.c; ++cls) {
        double area = 0.0;
        for (std::size_t i = 0; i < in.n; ++i) area += in.hot(cls, i);
        if (area == 0.0) continue;
        double w = 1.0 / (area * area);
        for (std::size_t i = 0; i < in.n; ++i) {
            double yy = in.hot(cls, i);
            double pp = in.prob(cls, i);
            num += w * yy * pp;
            den += w * (yy * yy + pp * pp);
        }
    }
    return 1.0 - (2.0 * num + eps) / (den + eps);
}

// Shared ranked-resampling oracle: rank the pixels of one side (positives or
// negatives) of each class by error descending, retain the top ceil(K%),
// evaluate the plain score over the retained mask.
inline double resampled_dice(const Instance& in, double k_percent,
                             bool rank_negatives, double eps = 1e-6) {
    std::vector<double> ones(in.n, 1.0);
    double acc = 0.0;
    std::size_t present = 0;
    for (std::size_t cls = 0; cls < in.c; ++cls) {
        if (!in.present(cls)) continue;
        std::vector<std::size_t> pool;
        std::vector<int> retained(in.n, 1);
        for (std::size_t i = 0; i < in.n; ++i) {
            bool positive = in.hot(cls, i) == 1.0;
            if (positive == rank_negatives) continue;
            pool.push_back(i);
            retained[i] = 0;
        }
        std::stable_sort(pool.begin(), pool.end(), [&](std::size_t a, std::size_t b) {
            double ea = rank_negatives ? in.prob(cls, a) : 1.0 - in.prob(cls, a);
            double eb = rank_negatives ? in.prob(cls, b) : 1.0 - in.prob(cls, b);
            return ea > eb;
        });
        if (!pool.empty()) {
            auto keep = static_cast<std::size_t>(
                std::ceil(k_percent / 100.0 * static_cast<double>(pool.size())));
            keep = std::clamp<std::size_t>(keep, 1, pool.size());
            for (std::size_t r = 0; r < keep; ++r) retained[pool[r]] = 1;
        }
        acc += weighted_class_score(in, cls, ones, retained, eps);
        ++present;
    }
    return 1.0 - acc / static_cast<double>(present);
}

inline double focal_dice_tn(const Instance& in, double k_percent, double eps = 1e-6) {
    return resampled_dice(in, k_percent, true, eps);
}

inline double topk_dice_pos(const Instance& in, double k_percent, double eps = 1e-6) {
    return resampled_dice(in, k_percent, false, eps);
}

}  // namespace oracles
