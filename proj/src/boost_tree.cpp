#include "gridrel/boost_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "gridrel/errors.hpp"

namespace gridrel {

BoostModel train_lsboost(std::span<const double> x, std::size_t n_samples,
                         std::size_t n_features, std::span<const double> y,
                         const BoostParams& params) {
    if (n_samples == 0) throw ConfigError("lsboost: need at least one sample");
    if (x.size() != n_samples * n_features)
        throw ConfigError("lsboost: X size " + std::to_string(x.size()) + " does not match " +
                          std::to_string(n_samples) + "x" + std::to_string(n_features));
    if (y.size() != n_samples) throw ConfigError("lsboost: y size does not match sample count");
    if (params.stages < 0) throw ConfigError("lsboost: stage count must be >= 0");
    if (!(params.shrinkage > 0) || params.shrinkage > 1)
        throw ConfigError("lsboost: shrinkage must be in (0, 1]");

    BoostModel model;
    model.shrinkage = params.shrinkage;
    model.f0 = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n_samples);

    // Sample order per feature, sorted once and reused by every stage.
    std::vector<std::vector<std::size_t>> sorted(n_features);
    for (std::size_t f = 0; f < n_features; ++f) {
        sorted[f].resize(n_samples);
        std::iota(sorted[f].begin(), sorted[f].end(), 0u);
        std::sort(sorted[f].begin(), sorted[f].end(), [&](std::size_t a, std::size_t b) {
            const double va = x[a * n_features + f];
            const double vb = x[b * n_features + f];
            return va != vb ? va < vb : a < b;
        });
    }

    std::vector<double> residual(y.begin(), y.end());
    for (double& r : residual) r -= model.f0;

    for (int stage = 0; stage < params.stages; ++stage) {
        const double total = std::accumulate(residual.begin(), residual.end(), 0.0);

        // Best split: maximize the SSE reduction n_l*mean_l^2 + n_r*mean_r^2.
        bool found = false;
        int best_feature = 0;
        double best_threshold = 0.0;
        double best_gain = -1.0;
        double best_left = 0.0, best_right = 0.0;

        for (std::size_t f = 0; f < n_features; ++f) {
            const auto& order = sorted[f];
            double left_sum = 0.0;
            for (std::size_t k = 0; k + 1 < n_samples; ++k) {
                left_sum += residual[order[k]];
                const double v = x[order[k] * n_features + f];
                const double v_next = x[order[k + 1] * n_features + f];
                if (v == v_next) continue;
                const double threshold = v + 0.5 * (v_next - v);
                const double nl = static_cast<double>(k + 1);
                const double nr = static_cast<double>(n_samples - k - 1);
                const double right_sum = total - left_sum;
                const double gain = left_sum * left_sum / nl + right_sum * right_sum / nr;
                // Strict improvement only: equal gains keep the lowest feature
                // index and the smallest threshold (scan order guarantees it).
                if (gain > best_gain + 1e-15 * std::max(1.0, best_gain)) {
                    best_gain = gain;
                    best_feature = static_cast<int>(f);
                    best_threshold = threshold;
                    best_left = left_sum / nl;
                    best_right = right_sum / nr;
                    found = true;
                }
            }
        }

        Stump stump;
        if (found) {
            stump.feature = best_feature;
            stump.threshold = best_threshold;
            stump.left = params.shrinkage * best_left;
            stump.right = params.shrinkage * best_right;
        } else {
            // No admissible split (every feature constant): fall back to a
            // constant stage equal to the mean residual.
            const double mean = total / static_cast<double>(n_samples);
            stump.feature = 0;
            stump.threshold = std::numeric_limits<double>::infinity();
            stump.left = params.shrinkage * mean;
            stump.right = params.shrinkage * mean;
        }
        model.stages.push_back(stump);

        for (std::size_t i = 0; i < n_samples; ++i) {
            const double v = n_features > 0 ? x[i * n_features + stump.feature] : 0.0;
            residual[i] -= v < stump.threshold ? stump.left : stump.right;
        }
    }
    return model;
}

double predict_lsboost(const BoostModel& model, std::span<const double> features) {
    double value = model.f0;
    for (const Stump& stump : model.stages) {
        if (std::isinf(stump.threshold)) {  // constant stage
            value += stump.left;
            continue;
        }
        if (stump.feature < 0 || static_cast<std::size_t>(stump.feature) >= features.size())
            throw ConfigError("lsboost: feature index " + std::to_string(stump.feature) +
                              " out of range for input of size " + std::to_string(features.size()));
        value += features[stump.feature] < stump.threshold ? stump.left : stump.right;
    }
    return value;
}

}  // namespace gridrel
