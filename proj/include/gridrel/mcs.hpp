#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "gridrel/grid_case.hpp"
#include "gridrel/state_test.hpp"

namespace gridrel {

struct McsConfig {
    double beta_threshold = 0.02;
    int max_iterations = 4000;
    std::uint64_t seed = 0;
    TesterKind tester = TesterKind::Dc;
    // Replica-evaluation workers. The result is independent of this value:
    // replica j draws only from substream j and the stop rule consumes
    // indicators in replica order.
    int jobs = 1;
};

struct McsResult {
    double lolp = 0.0;
    double var_f = 0.0;
    double beta = std::numeric_limits<double>::infinity();
    int iterations = 0;
    bool converged_by_beta = false;

    friend bool operator==(const McsResult&, const McsResult&) = default;
};

// State of replica `replica` under `seed`: unit u is down with probability
// for_rate_u, independently across units and replicas.
SystemState sample_state(std::uint64_t seed, std::uint64_t replica,
                         const std::vector<GeneratorUnit>& units);

// Streaming estimator for the 0/1 failure indicator.
//   lolp  = failures / count          (sample mean)
//   var_f = lolp * (1 - lolp)         (exact biased sample variance of a 0/1
//                                      indicator around its sample mean)
//   beta  = sqrt(var_f / count) / lolp, +inf until the first failure
class McsAccumulator {
public:
    void add(bool failure) {
        ++count_;
        if (failure) ++failures_;
    }
    long count() const { return count_; }
    long failures() const { return failures_; }
    double lolp() const { return count_ == 0 ? 0.0 : static_cast<double>(failures_) / count_; }
    double var_f() const {
        const double p = lolp();
        return p * (1.0 - p);
    }
    double beta() const;

private:
    long count_ = 0;
    long failures_ = 0;
};

// Non-sequential Monte Carlo LOLP estimate. Stops at beta < beta_threshold
// (checked from the second iteration on) or at max_iterations, whichever
// comes first. Deterministic given (case, config), bit-identical for any
// jobs value. Tester failures abort with iteration and state context.
McsResult run_mcs(const GridCase& grid, const McsConfig& config);

}  // namespace gridrel
