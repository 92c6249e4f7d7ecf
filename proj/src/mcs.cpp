#include "gridrel/mcs.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "gridrel/errors.hpp"
#include "gridrel/parallel.hpp"
#include "gridrel/rng.hpp"

namespace gridrel {

namespace {

void sample_state_into(std::uint64_t seed, std::uint64_t replica,
                       const std::vector<GeneratorUnit>& units, SystemState& state) {
    const std::size_t m = units.size();
    state.unit_up.resize(m);
    for (std::size_t u = 0; u < m; u += 2) {
        const CounterBlock block = counter_block(seed, replica, u >> 1);
        state.unit_up[u] = u01_from_bits(block.lane0) < units[u].for_rate ? 0 : 1;
        if (u + 1 < m)
            state.unit_up[u + 1] = u01_from_bits(block.lane1) < units[u + 1].for_rate ? 0 : 1;
    }
}

}  // namespace

SystemState sample_state(std::uint64_t seed, std::uint64_t replica,
                         const std::vector<GeneratorUnit>& units) {
    SystemState state;
    sample_state_into(seed, replica, units, state);
    return state;
}

double McsAccumulator::beta() const {
    if (failures_ == 0 || count_ == 0) return std::numeric_limits<double>::infinity();
    const double p = lolp();
    return std::sqrt(var_f() / static_cast<double>(count_)) / p;
}

McsResult run_mcs(const GridCase& grid, const McsConfig& config) {
    if (!(config.beta_threshold > 0)) throw ConfigError("mcs: beta threshold must be > 0");
    if (config.max_iterations < 1) throw ConfigError("mcs: max iterations must be >= 1");
    if (grid.units.empty()) throw ConfigError("mcs: case has no generator units");

    const StateTester tester(grid, config.tester);
    const unsigned jobs = resolve_jobs(config.jobs);
    McsAccumulator acc;

    auto finish = [&](bool by_beta) {
        McsResult result;
        result.lolp = acc.lolp();
        result.var_f = acc.var_f();
        result.beta = acc.beta();
        result.iterations = static_cast<int>(acc.count());
        result.converged_by_beta = by_beta;
        return result;
    };

    auto should_stop = [&]() {
        return acc.count() >= 2 && acc.beta() < config.beta_threshold;
    };

    if (jobs <= 1) {
        SystemState state;
        for (int replica = 0; replica < config.max_iterations; ++replica) {
            sample_state_into(config.seed, static_cast<std::uint64_t>(replica), grid.units, state);
            Verdict verdict;
            try {
                verdict = tester.test(state);
            } catch (const TesterError& e) {
                throw TesterError("mcs iteration " + std::to_string(replica + 1) + ": " + e.what());
            }
            acc.add(verdict == Verdict::Failure);
            if (should_stop()) return finish(true);
        }
        return finish(false);
    }

    // Parallel path: evaluate indicators for a batch of replicas, then consume
    // them in replica order. Indicators depend only on (seed, replica), so any
    // batch size or worker count reproduces the serial result; work past the
    // stopping replica is simply discarded.
    const int batch_size = static_cast<int>(jobs) * 64;
    std::vector<std::uint8_t> indicator(batch_size);
    std::vector<std::optional<std::string>> failure(batch_size);

    for (int start = 0; start < config.max_iterations; start += batch_size) {
        const int count = std::min(batch_size, config.max_iterations - start);
        parallel_for(static_cast<std::size_t>(count), jobs, [&](std::size_t k) {
            SystemState state;
            const std::uint64_t replica = static_cast<std::uint64_t>(start) + k;
            sample_state_into(config.seed, replica, grid.units, state);
            try {
                indicator[k] = tester.test(state) == Verdict::Failure ? 1 : 0;
                failure[k].reset();
            } catch (const TesterError& e) {
                failure[k] = e.what();
            }
        });
        for (int k = 0; k < count; ++k) {
            if (failure[k])
                throw TesterError("mcs iteration " + std::to_string(start + k + 1) + ": " +
                                  *failure[k]);
            acc.add(indicator[k] != 0);
            if (should_stop()) return finish(true);
        }
    }
    return finish(false);
}

}  // namespace gridrel
