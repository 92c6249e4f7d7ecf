#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gridrel/grid_case.hpp"

namespace gridrel {

// Generator availability snapshot, ordered as GridCase::units.
struct SystemState {
    std::vector<std::uint8_t> unit_up;  // 1 = in service

    static SystemState all_up(std::size_t unit_count) {
        return SystemState{std::vector<std::uint8_t>(unit_count, 1)};
    }
    std::string to_string() const;  // "ud..." mask for error context
};

enum class Verdict { Reliable, Failure };

enum class TesterKind { Copper, Dc };

const char* tester_name(TesterKind kind);
TesterKind tester_from_name(const std::string& name);

// Copper-plate adequacy: Reliable iff total capacity of up units covers the
// total load. Ignores the network entirely.
Verdict test_copper_plate(const GridCase& grid, const SystemState& state);

// DC network adequacy: Reliable iff some dispatch of the up units within
// [pmin, pmax] balances every bus under the DC flow equations with all branch
// flows inside their ratings. Decided by a phase-1 LP (minimum total
// constraint violation <= 1e-6 per-unit). LP pivot-limit failures raise
// TesterError; they are never mapped to a verdict.
Verdict test_dc_feasibility(const GridCase& grid, const SystemState& state);

// Tester bound to one case. Precomputes the case-derived structures once so
// repeated calls (MCS replicas, enumeration) stay cheap. Pure and safe for
// concurrent use.
class StateTester {
public:
    StateTester(const GridCase& grid, TesterKind kind);
    ~StateTester();
    StateTester(StateTester&&) noexcept;
    StateTester& operator=(StateTester&&) noexcept;

    Verdict test(const SystemState& state) const;
    TesterKind kind() const { return kind_; }

private:
    struct DcContext;
    TesterKind kind_;
    double total_load_mw_ = 0.0;
    std::vector<double> unit_pmax_mw_;
    std::unique_ptr<DcContext> dc_;
};

}  // namespace gridrel
