#include "gridrel/svr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "gridrel/errors.hpp"

namespace gridrel {

namespace {

constexpr double kViolationFloor = 1e-12;

// Dense Gram matrix with lazy per-column materialization for large inputs.
class GramCache {
public:
    GramCache(std::span<const double> x, std::size_t n, std::size_t d) : x_(x), n_(n), d_(d) {
        if (n_ * n_ <= 4u * 1024u * 1024u) {  // precompute up to ~32 MB
            full_.resize(n_ * n_);
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = i; j < n_; ++j)
                    full_[i * n_ + j] = full_[j * n_ + i] = dot(i, j);
        } else {
            columns_.resize(n_);
        }
    }

    const double* column(std::size_t j) {
        if (!full_.empty()) return full_.data() + j * n_;
        if (columns_[j].empty()) {
            columns_[j].resize(n_);
            for (std::size_t i = 0; i < n_; ++i) columns_[j][i] = dot(i, j);
        }
        return columns_[j].data();
    }

private:
    double dot(std::size_t i, std::size_t j) const {
        const double* a = x_.data() + i * d_;
        const double* b = x_.data() + j * d_;
        double sum = 0.0;
        for (std::size_t k = 0; k < d_; ++k) sum += a[k] * b[k];
        return sum;
    }

    std::span<const double> x_;
    std::size_t n_, d_;
    std::vector<double> full_;
    std::vector<std::vector<double>> columns_;
};

// Exact minimizer of sum_i max(0, |b + g_i| - eps) over b: convex piecewise
// linear with knots at -g_i -+ eps. Flat optima resolve to the interval
// midpoint, which keeps the constant-response case at the natural center.
double best_bias(const std::vector<double>& g, double eps) {
    const std::size_t n = g.size();
    std::vector<double> knots;
    knots.reserve(2 * n);
    for (double gi : g) {
        knots.push_back(-gi - eps);
        knots.push_back(-gi + eps);
    }
    std::sort(knots.begin(), knots.end());

    // Slope walks from -n to +n in unit steps, one per knot crossed.
    double slope = -static_cast<double>(n);
    std::size_t k = 0;
    while (k < knots.size() && slope + 1.0 < 0.0) {
        slope += 1.0;
        ++k;
    }
    // After crossing knot k the slope becomes slope+1 (>= 0). Optimum is at
    // knots[k]; if the slope is exactly zero there, the optimum is an interval
    // [knots[k], knots[k+1]] and we take its midpoint.
    if (k >= knots.size()) return 0.0;  // n == 0, not reachable from train_svr
    if (slope + 1.0 == 0.0 && k + 1 < knots.size())
        return 0.5 * (knots[k] + knots[k + 1]);
    return knots[k];
}

double tube_loss(const std::vector<double>& g, double b, double eps) {
    double loss = 0.0;
    for (double gi : g) loss += std::max(0.0, std::abs(b + gi) - eps);
    return loss;
}

}  // namespace

SvrModel train_svr(std::span<const double> x, std::size_t n_samples, std::size_t n_features,
                   std::span<const double> y, const SvrParams& params) {
    if (n_samples == 0) throw ConfigError("svr: need at least one sample");
    if (x.size() != n_samples * n_features)
        throw ConfigError("svr: X size " + std::to_string(x.size()) + " does not match " +
                          std::to_string(n_samples) + "x" + std::to_string(n_features));
    if (y.size() != n_samples) throw ConfigError("svr: y size does not match sample count");
    if (!(params.c > 0)) throw ConfigError("svr: C must be > 0");
    if (params.epsilon < 0) throw ConfigError("svr: epsilon must be >= 0");
    for (double v : x)
        if (!std::isfinite(v)) throw ConfigError("svr: non-finite feature value");
    for (double v : y)
        if (!std::isfinite(v)) throw ConfigError("svr: non-finite response value");

    const std::size_t n = n_samples;
    const double c = params.c;
    const double eps = params.epsilon;

    GramCache gram(x, n, n_features);

    // Dual variables beta_i = alpha_i - alpha_i^* in [-C, C] with
    // sum(beta) = 0 (the unregularized bias). Gradient g = Q beta - y.
    std::vector<double> beta(n, 0.0);
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = -y[i];

    auto dual_objective = [&]() {
        // 0.5 b'Qb - y'b + eps |b|_1, using Qb = g + y.
        double value = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            value += 0.5 * beta[i] * (g[i] + y[i]) - y[i] * beta[i] + eps * std::abs(beta[i]);
        return value;
    };
    auto primal_objective = [&](double* bias_out) {
        double wnorm2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) wnorm2 += beta[i] * (g[i] + y[i]);
        const double b = best_bias(g, eps);
        if (bias_out) *bias_out = b;
        return 0.5 * wnorm2 + c * tube_loss(g, b, eps);
    };

    long tiny_steps = 0;
    for (long iteration = 0; iteration < params.max_iterations; ++iteration) {
        // Feasible-multiplier window per variable; a violated KKT system has
        // max(lo) > min(hi) and the arg pair is the best candidate update.
        double best_lo = -std::numeric_limits<double>::infinity();
        double best_hi = std::numeric_limits<double>::infinity();
        std::size_t i_lo = 0, j_hi = 0;
        for (std::size_t k = 0; k < n; ++k) {
            double lo, hi;
            if (beta[k] >= c) {
                lo = -std::numeric_limits<double>::infinity();
                hi = -g[k] - eps;
            } else if (beta[k] <= -c) {
                lo = -g[k] + eps;
                hi = std::numeric_limits<double>::infinity();
            } else if (beta[k] > 0) {
                lo = hi = -g[k] - eps;
            } else if (beta[k] < 0) {
                lo = hi = -g[k] + eps;
            } else {
                lo = -g[k] - eps;
                hi = -g[k] + eps;
            }
            if (lo > best_lo) { best_lo = lo; i_lo = k; }
            if (hi < best_hi) { best_hi = hi; j_hi = k; }
        }
        const double violation = best_lo - best_hi;
        const bool check_gap = violation <= kViolationFloor || (iteration & 63) == 0;
        if (check_gap) {
            const double gap = primal_objective(nullptr) + dual_objective();
            if (gap <= params.gap_tol * std::max(1.0, std::abs(primal_objective(nullptr))) ||
                violation <= kViolationFloor)
                break;
        }

        const std::size_t i = i_lo, j = j_hi;
        const double* qi = gram.column(i);
        const double* qj = gram.column(j);
        const double a = qi[i] + qj[j] - 2.0 * qi[j];
        const double d0 = g[i] - g[j];

        // Move along beta_i += t, beta_j -= t. phi(t) = d0 t + a t^2 / 2
        // + eps(|beta_i + t| + |beta_j - t|); minimized exactly over the box.
        const double t_lo = std::max(-c - beta[i], beta[j] - c);
        const double t_hi = std::min(c - beta[i], beta[j] + c);
        std::vector<double> candidates{t_lo, t_hi};
        auto push_candidate = [&](double t) {
            if (t > t_lo && t < t_hi) candidates.push_back(t);
        };
        push_candidate(-beta[i]);
        push_candidate(beta[j]);
        if (a > 0.0) {
            for (double si : {-1.0, 1.0})
                for (double sj : {-1.0, 1.0})
                    push_candidate(-(d0 + eps * si - eps * sj) / a);
        }
        double best_t = 0.0;
        double best_phi = 0.0;  // phi(0) relative value
        const double phi0 = eps * (std::abs(beta[i]) + std::abs(beta[j]));
        for (double t : candidates) {
            const double phi = d0 * t + 0.5 * a * t * t +
                               eps * (std::abs(beta[i] + t) + std::abs(beta[j] - t)) - phi0;
            if (phi < best_phi) { best_phi = phi; best_t = t; }
        }

        if (std::abs(best_t) < 1e-15) {
            if (++tiny_steps >= 2) break;  // numerical floor reached
            continue;
        }
        tiny_steps = 0;
        beta[i] += best_t;
        beta[j] -= best_t;
        for (std::size_t k = 0; k < n; ++k) g[k] += best_t * (qi[k] - qj[k]);
    }

    SvrModel model;
    model.c = c;
    model.epsilon = eps;
    model.w.assign(n_features, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (beta[i] == 0.0) continue;
        const double* row = x.data() + i * n_features;
        for (std::size_t k = 0; k < n_features; ++k) model.w[k] += beta[i] * row[k];
    }
    model.b = best_bias(g, eps);
    return model;
}

double predict_svr(const SvrModel& model, std::span<const double> features) {
    if (features.size() != model.w.size())
        throw ConfigError("svr: feature size " + std::to_string(features.size()) +
                          " does not match model width " + std::to_string(model.w.size()));
    double value = model.b;
    for (std::size_t k = 0; k < model.w.size(); ++k) value += model.w[k] * features[k];
    return value;
}

double svr_primal_objective(const SvrModel& model, std::span<const double> x,
                            std::size_t n_samples, std::size_t n_features,
                            std::span<const double> y) {
    double wnorm2 = 0.0;
    for (double wk : model.w) wnorm2 += wk * wk;
    double loss = 0.0;
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double f = predict_svr(model, x.subspan(i * n_features, n_features));
        loss += std::max(0.0, std::abs(y[i] - f) - model.epsilon);
    }
    return 0.5 * wnorm2 + model.c * loss;
}

}  // namespace gridrel
