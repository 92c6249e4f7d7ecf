#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gridrel {

// One-split regression stump: x[feature] < threshold -> left, else right.
struct Stump {
    int feature = 0;
    double threshold = 0.0;
    double left = 0.0;
    double right = 0.0;

    friend bool operator==(const Stump&, const Stump&) = default;
};

struct BoostParams {
    int stages = 100;
    double shrinkage = 1.0;  // in (0, 1]; scales every stage's leaf values
};

// Least-squares boosting model: prediction = f0 + sum of stage outputs.
// Stage leaf values already include the shrinkage factor.
struct BoostModel {
    double f0 = 0.0;
    double shrinkage = 1.0;
    std::vector<Stump> stages;

    friend bool operator==(const BoostModel&, const BoostModel&) = default;
};

// Fits f0 = mean(y), then `stages` stumps on the running residuals. Each
// stump minimizes squared error by exhaustive search over every feature and
// every threshold between consecutive distinct values, with leaf values equal
// to the residual means of the two sides. Ties break toward the lowest
// feature index, then the smallest threshold.
BoostModel train_lsboost(std::span<const double> x, std::size_t n_samples,
                         std::size_t n_features, std::span<const double> y,
                         const BoostParams& params = {});

double predict_lsboost(const BoostModel& model, std::span<const double> features);

}  // namespace gridrel
