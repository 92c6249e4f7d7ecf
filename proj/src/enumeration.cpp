#include "gridrel/enumeration.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "gridrel/errors.hpp"

namespace gridrel {

namespace {

// C(m, 0..max_order) with saturation against the budget.
std::uint64_t combination_count(int m, int max_order, std::uint64_t budget) {
    std::uint64_t total = 0;
    std::uint64_t c = 1;  // C(m, k)
    for (int k = 0; k <= max_order; ++k) {
        if (c > budget - std::min(total, budget)) return budget + 1;
        total += c;
        if (total > budget) return budget + 1;
        c = c * static_cast<std::uint64_t>(m - k) / static_cast<std::uint64_t>(k + 1);
    }
    return total;
}

}  // namespace

LolpEnumerator::LolpEnumerator(const GridCase& grid, TesterKind tester)
    : grid_(grid), tester_(grid, tester) {}

LolpBounds LolpEnumerator::bounds(int max_order, std::uint64_t state_budget) {
    const int m = static_cast<int>(grid_.units.size());
    if (max_order < 0) throw ConfigError("enumeration: max_order must be >= 0");
    if (max_order > m)
        throw ConfigError("enumeration: max_order " + std::to_string(max_order) + " exceeds unit count " +
                          std::to_string(m));
    if (combination_count(m, max_order, state_budget) > state_budget)
        throw ConfigError("enumeration: combination count exceeds the state budget of " +
                          std::to_string(state_budget));

    std::vector<double> down_odds(m);  // FOR / (1 - FOR), or -1 for FOR == 1
    double p_all_up = 1.0;
    for (int u = 0; u < m; ++u) {
        const double f = grid_.units[u].for_rate;
        p_all_up *= 1.0 - f;
        down_odds[u] = f < 1.0 ? f / (1.0 - f) : -1.0;
    }

    const bool memoizable = m <= 64;
    double enumerated_mass = 0.0;
    double failure_mass = 0.0;

    SystemState state = SystemState::all_up(static_cast<std::size_t>(m));
    std::vector<int> outage;

    // P(D) = prod_{u in D} FOR_u * prod_{u not in D} (1 - FOR_u), built
    // incrementally. A unit with FOR == 1 forces p_all_up = 0; sets not
    // containing it have probability 0 and are skipped via the odds sentinel.
    auto probability_of = [&]() {
        double p = p_all_up;
        if (p > 0.0) {
            for (int u : outage) p *= down_odds[u];
            return p;
        }
        // Degenerate FORs (0 or 1): compute directly.
        p = 1.0;
        for (int u = 0; u < m; ++u) {
            const bool down = std::find(outage.begin(), outage.end(), u) != outage.end();
            p *= down ? grid_.units[u].for_rate : 1.0 - grid_.units[u].for_rate;
        }
        return p;
    };

    auto test_current = [&]() {
        std::uint64_t mask = 0;
        if (memoizable) {
            for (int u : outage) mask |= std::uint64_t{1} << u;
            auto it = verdicts_.find(mask);
            if (it != verdicts_.end()) return it->second;
        }
        for (int u : outage) state.unit_up[u] = 0;
        const bool fails = tester_.test(state) == Verdict::Failure;
        for (int u : outage) state.unit_up[u] = 1;
        if (memoizable) verdicts_.emplace(mask, fails);
        return fails;
    };

    // Enumerate by order, lexicographically within each order. Accumulation
    // order is therefore a prefix-extension across orders: bounds(k+1) adds
    // to exactly the sums bounds(k) produced, so tightening is monotone even
    // at the last floating-point bit.
    auto visit_current = [&]() {
        const double p = probability_of();
        enumerated_mass += p;
        if (p > 0.0 && test_current()) failure_mass += p;
    };
    for (int k = 0; k <= max_order; ++k) {
        if (k == 0) {
            visit_current();
            continue;
        }
        outage.resize(k);
        for (int i = 0; i < k; ++i) outage[i] = i;
        while (true) {
            visit_current();
            int i = k - 1;
            while (i >= 0 && outage[i] == m - k + i) --i;
            if (i < 0) break;
            ++outage[i];
            for (int j = i + 1; j < k; ++j) outage[j] = outage[j - 1] + 1;
        }
        outage.clear();
    }

    LolpBounds result;
    result.lower = failure_mass;
    result.truncated_mass = std::max(0.0, 1.0 - enumerated_mass);
    result.upper = result.lower + result.truncated_mass;
    return result;
}

double LolpEnumerator::exact(std::uint64_t state_budget) {
    return bounds(static_cast<int>(grid_.units.size()), state_budget).lower;
}

LolpBounds enumerate_lolp(const GridCase& grid, TesterKind tester, int max_order,
                          std::uint64_t state_budget) {
    LolpEnumerator enumerator(grid, tester);
    return enumerator.bounds(max_order, state_budget);
}

}  // namespace gridrel
