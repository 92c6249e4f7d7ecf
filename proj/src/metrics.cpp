#include "gridrel/metrics.hpp"

#include <cmath>
#include <string>

#include "gridrel/errors.hpp"

namespace gridrel {

Metrics compute_metrics(std::span<const double> y_true, std::span<const double> y_pred) {
    if (y_true.size() != y_pred.size())
        throw ConfigError("metrics: size mismatch (" + std::to_string(y_true.size()) + " vs " +
                          std::to_string(y_pred.size()) + ")");
    if (y_true.empty()) throw ConfigError("metrics: empty input");

    double ape_sum = 0.0, abs_sum = 0.0, sq_sum = 0.0;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        if (y_true[i] == 0.0)
            throw ConfigError("metrics: y_true[" + std::to_string(i) +
                              "] is zero; MAPE is undefined for it");
        const double diff = y_true[i] - y_pred[i];
        ape_sum += std::abs(diff) / std::abs(y_true[i]);
        abs_sum += std::abs(diff);
        sq_sum += diff * diff;
    }
    const double n = static_cast<double>(y_true.size());
    Metrics metrics;
    metrics.mape = 100.0 * ape_sum / n;
    metrics.mae = abs_sum / n;
    metrics.rmse = std::sqrt(sq_sum / n);
    return metrics;
}

}  // namespace gridrel
