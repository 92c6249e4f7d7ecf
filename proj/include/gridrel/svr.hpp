#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gridrel {

struct SvrParams {
    double c = 1.0;           // regularization constant, > 0
    double epsilon = 1e-3;    // insensitive-tube half width, >= 0
    double gap_tol = 1e-9;    // relative primal-dual gap at which to stop
    long max_iterations = 1'000'000;
};

// Linear epsilon-insensitive support vector regressor: f(x) = <w, x> + b,
// trained on the primal objective 0.5 |w|^2 + C sum(xi + xi*).
struct SvrModel {
    std::vector<double> w;
    double b = 0.0;
    double c = 1.0;
    double epsilon = 1e-3;

    friend bool operator==(const SvrModel&, const SvrModel&) = default;
};

// X is row-major (n_samples x n_features). The dual is solved by SMO-style
// maximal-violating-pair updates with exact line search; the bias is then
// re-fitted exactly, and the primal-dual gap certifies the returned objective.
SvrModel train_svr(std::span<const double> x, std::size_t n_samples, std::size_t n_features,
                   std::span<const double> y, const SvrParams& params = {});

double predict_svr(const SvrModel& model, std::span<const double> features);

// Primal objective of (w, b) on a dataset; slacks implied by the residuals.
double svr_primal_objective(const SvrModel& model, std::span<const double> x,
                            std::size_t n_samples, std::size_t n_features,
                            std::span<const double> y);

}  // namespace gridrel
