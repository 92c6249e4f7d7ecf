#include "gridrel/state_test.hpp"

#include <cmath>
#include <limits>

#include "gridrel/errors.hpp"
#include "gridrel/linear_program.hpp"

namespace gridrel {

namespace {
constexpr double kDcFeasibilityTol = 1e-6;  // per-unit MW; ~1e-4 MW on a 100 MVA base
}

std::string SystemState::to_string() const {
    std::string mask;
    mask.reserve(unit_up.size());
    for (std::uint8_t up : unit_up) mask.push_back(up ? 'u' : 'd');
    return mask;
}

const char* tester_name(TesterKind kind) {
    return kind == TesterKind::Copper ? "copper" : "dc";
}

TesterKind tester_from_name(const std::string& name) {
    if (name == "copper") return TesterKind::Copper;
    if (name == "dc") return TesterKind::Dc;
    throw ConfigError("unknown tester '" + name + "' (expected dc or copper)");
}

// Case-derived pieces of the DC feasibility LP that do not depend on the
// sampled state.
struct StateTester::DcContext {
    int n = 0;
    int slack = 0;
    double base_mva = 100.0;
    std::vector<double> pd_pu;  // per bus
    struct BranchRow {
        int from;
        int to;
        double inv_x;
        double cap_pu;  // +inf when the rating is the unbounded sentinel
    };
    std::vector<BranchRow> branches;
    struct UnitCol {
        int bus;
        double pmin_pu;
        double range_pu;  // pmax - pmin
    };
    std::vector<UnitCol> units;

    explicit DcContext(const GridCase& grid) {
        n = static_cast<int>(grid.buses.size());
        base_mva = grid.base_mva;
        slack = grid.slack_position();
        if (slack < 0) throw Error("dc tester: case has no slack bus");
        pd_pu.reserve(grid.buses.size());
        for (const Bus& bus : grid.buses) pd_pu.push_back(bus.pd / base_mva);
        for (const Branch& branch : grid.branches) {
            BranchRow row;
            row.from = grid.bus_position(branch.from_bus);
            row.to = grid.bus_position(branch.to_bus);
            row.inv_x = 1.0 / branch.x;
            row.cap_pu = std::isinf(branch.rating) ? std::numeric_limits<double>::infinity()
                                                   : branch.rating / base_mva;
            branches.push_back(row);
        }
        for (const GeneratorUnit& unit : grid.units)
            units.push_back({grid.bus_position(unit.bus_id), unit.pmin / base_mva,
                             (unit.pmax - unit.pmin) / base_mva});
    }
};

StateTester::StateTester(const GridCase& grid, TesterKind kind) : kind_(kind) {
    for (const Bus& bus : grid.buses) total_load_mw_ += bus.pd;
    unit_pmax_mw_.reserve(grid.units.size());
    for (const GeneratorUnit& unit : grid.units) unit_pmax_mw_.push_back(unit.pmax);
    if (kind_ == TesterKind::Dc) dc_ = std::make_unique<DcContext>(grid);
}

StateTester::~StateTester() = default;
StateTester::StateTester(StateTester&&) noexcept = default;
StateTester& StateTester::operator=(StateTester&&) noexcept = default;

Verdict StateTester::test(const SystemState& state) const {
    if (state.unit_up.size() != unit_pmax_mw_.size())
        throw Error("system state has " + std::to_string(state.unit_up.size()) +
                    " units, case has " + std::to_string(unit_pmax_mw_.size()));

    if (kind_ == TesterKind::Copper) {
        double available = 0.0;
        for (std::size_t u = 0; u < unit_pmax_mw_.size(); ++u)
            if (state.unit_up[u]) available += unit_pmax_mw_[u];
        return available >= total_load_mw_ ? Verdict::Reliable : Verdict::Failure;
    }

    const DcContext& dc = *dc_;

    // Variables: dispatch q_u = p_u - pmin for up units, then theta+ / theta-
    // for every non-slack bus (the slack angle is fixed at zero).
    std::vector<int> up_units;
    for (std::size_t u = 0; u < state.unit_up.size(); ++u)
        if (state.unit_up[u]) up_units.push_back(static_cast<int>(u));
    const int nu = static_cast<int>(up_units.size());

    std::vector<int> theta_col(dc.n, -1);
    int cols = nu;
    for (int bus = 0; bus < dc.n; ++bus)
        if (bus != dc.slack) {
            theta_col[bus] = cols;
            cols += 2;  // theta = x[col] - x[col+1]
        }

    lp::Problem problem;
    problem.num_vars = cols;

    // Nodal balance: sum(p_u at bus) - sum_j B'_{bus,j} theta_j = pd_bus.
    std::vector<std::vector<double>> balance(dc.n, std::vector<double>(cols, 0.0));
    std::vector<double> balance_rhs(dc.pd_pu);
    for (int k = 0; k < nu; ++k) {
        const DcContext::UnitCol& unit = dc.units[up_units[k]];
        balance[unit.bus][k] += 1.0;
        balance_rhs[unit.bus] -= unit.pmin_pu;  // shifted variable q = p - pmin
    }
    auto add_theta = [&](std::vector<double>& row, int bus, double coeff) {
        const int col = theta_col[bus];
        if (col < 0) return;  // slack angle is zero
        row[col] += coeff;
        row[col + 1] -= coeff;
    };
    for (const DcContext::BranchRow& branch : dc.branches) {
        // Flow f->t of (theta_f - theta_t)/x leaves `from` and enters `to`.
        add_theta(balance[branch.from], branch.from, -branch.inv_x);
        add_theta(balance[branch.from], branch.to, branch.inv_x);
        add_theta(balance[branch.to], branch.to, -branch.inv_x);
        add_theta(balance[branch.to], branch.from, branch.inv_x);
    }
    for (int bus = 0; bus < dc.n; ++bus)
        problem.add_row(std::move(balance[bus]), lp::Sense::Eq, balance_rhs[bus]);

    // Branch loading: |(theta_f - theta_t)/x| <= rating (skipped if unbounded).
    for (const DcContext::BranchRow& branch : dc.branches) {
        if (std::isinf(branch.cap_pu)) continue;
        std::vector<double> row(cols, 0.0);
        add_theta(row, branch.from, branch.inv_x);
        add_theta(row, branch.to, -branch.inv_x);
        std::vector<double> negated(cols, 0.0);
        for (int j = 0; j < cols; ++j) negated[j] = -row[j];
        problem.add_row(std::move(row), lp::Sense::LessEq, branch.cap_pu);
        problem.add_row(std::move(negated), lp::Sense::LessEq, branch.cap_pu);
    }

    // Dispatch ranges: q_u <= pmax - pmin.
    for (int k = 0; k < nu; ++k) {
        std::vector<double> row(cols, 0.0);
        row[k] = 1.0;
        problem.add_row(std::move(row), lp::Sense::LessEq, dc.units[up_units[k]].range_pu);
    }

    lp::Options options;
    options.feasibility_tol = kDcFeasibilityTol;
    lp::Solution solution = lp::solve(problem, options);
    if (solution.status == lp::Status::IterationLimit)
        throw TesterError("dc tester: LP pivot limit exceeded for state " + state.to_string());
    if (solution.status == lp::Status::Unbounded)
        throw TesterError("dc tester: LP unbounded for state " + state.to_string());
    return solution.status == lp::Status::Optimal ? Verdict::Reliable : Verdict::Failure;
}

Verdict test_copper_plate(const GridCase& grid, const SystemState& state) {
    return StateTester(grid, TesterKind::Copper).test(state);
}

Verdict test_dc_feasibility(const GridCase& grid, const SystemState& state) {
    return StateTester(grid, TesterKind::Dc).test(state);
}

}  // namespace gridrel
