#pragma once

#include <cstdint>
#include <unordered_map>

#include "gridrel/grid_case.hpp"
#include "gridrel/state_test.hpp"

namespace gridrel {

// Exact LOLP bracket from truncated outage enumeration.
//   lower          = probability mass of enumerated failure states
//   truncated_mass = mass of states with more than max_order units out
//   upper          = lower + truncated_mass (every truncated state counted
//                    as a failure)
struct LolpBounds {
    double lower = 0.0;
    double upper = 0.0;
    double truncated_mass = 0.0;
};

constexpr std::uint64_t kDefaultEnumBudget = 2'000'000;

// Tests every outage set of at most max_order units, in lexicographic order
// (order 0 first, then singletons ascending, then pairs, ...). Throws
// ConfigError if the combination count exceeds `state_budget`.
LolpBounds enumerate_lolp(const GridCase& grid, TesterKind tester, int max_order,
                          std::uint64_t state_budget = kDefaultEnumBudget);

// Repeated-query variant: verdicts are memoized per outage set, so bounds at
// increasing orders only pay for the newly enumerated sets.
class LolpEnumerator {
public:
    LolpEnumerator(const GridCase& grid, TesterKind tester);

    LolpBounds bounds(int max_order, std::uint64_t state_budget = kDefaultEnumBudget);

    // Exact LOLP: full-order enumeration (unit count <= 20 or so).
    double exact(std::uint64_t state_budget = kDefaultEnumBudget);

private:
    const GridCase& grid_;
    StateTester tester_;
    // Keyed by the outage bitmask; only usable for <= 64 units, which is far
    // beyond any budget-respecting enumeration anyway.
    std::unordered_map<std::uint64_t, bool> verdicts_;
};

}  // namespace gridrel
