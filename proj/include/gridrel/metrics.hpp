#pragma once

#include <span>

namespace gridrel {

struct Metrics {
    double mape = 0.0;  // percent
    double mae = 0.0;
    double rmse = 0.0;

    friend bool operator==(const Metrics&, const Metrics&) = default;
};

// mape = 100 * mean(|t - p| / |t|), mae = mean(|t - p|),
// rmse = sqrt(mean((t - p)^2)). Throws ConfigError on length mismatch or
// empty input, and on any zero true value (MAPE would divide by it); zeros
// are reported, never skipped.
Metrics compute_metrics(std::span<const double> y_true, std::span<const double> y_pred);

}  // namespace gridrel
