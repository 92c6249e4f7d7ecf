#include "gridrel/linear_program.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gridrel/errors.hpp"

namespace gridrel::lp {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kRcTol = 1e-9;

class Tableau {
public:
    Tableau(const Problem& p, int max_pivots)
        : n_orig_(p.num_vars), m_(static_cast<int>(p.rows.size())), max_pivots_(max_pivots) {
        // Column layout: originals | slacks/surpluses | artificials.
        n_slack_ = 0;
        for (Sense s : p.senses)
            if (s != Sense::Eq) ++n_slack_;
        slack_col_.assign(m_, -1);
        art_col_.assign(m_, -1);

        int next = n_orig_;
        for (int i = 0; i < m_; ++i)
            if (p.senses[i] != Sense::Eq) slack_col_[i] = next++;
        n_art_ = 0;
        for (int i = 0; i < m_; ++i) {
            // Rows are normalized to rhs >= 0 below; whether an artificial is
            // needed depends on the normalized sense.
            bool flip = p.rhs[i] < 0;
            Sense s = p.senses[i];
            if (flip && s == Sense::LessEq) s = Sense::GreaterEq;
            else if (flip && s == Sense::GreaterEq) s = Sense::LessEq;
            if (s != Sense::LessEq) art_col_[i] = next++, ++n_art_;
        }
        cols_ = next;

        rows_.assign(m_, std::vector<double>(cols_ + 1, 0.0));
        basis_.assign(m_, -1);
        for (int i = 0; i < m_; ++i) {
            const double sign = p.rhs[i] < 0 ? -1.0 : 1.0;
            for (int j = 0; j < n_orig_; ++j) rows_[i][j] = sign * p.rows[i][j];
            rows_[i][cols_] = sign * p.rhs[i];
            if (slack_col_[i] >= 0)
                rows_[i][slack_col_[i]] = sign * (p.senses[i] == Sense::LessEq ? 1.0 : -1.0);
            if (art_col_[i] >= 0) {
                rows_[i][art_col_[i]] = 1.0;
                basis_[i] = art_col_[i];
            } else {
                basis_[i] = slack_col_[i];
            }
        }
    }

    bool is_artificial(int col) const { return col >= n_orig_ + n_slack_; }

    // Runs one simplex phase against the cost vector implied by `costs`
    // (indexed over all columns). Returns Optimal/Unbounded/IterationLimit.
    Status run_phase(const std::vector<double>& costs, bool allow_artificial_entering) {
        // Reduced costs rc_j = c_j - c_B . B^{-1} A_j, maintained by pivoting.
        rc_.assign(cols_ + 1, 0.0);
        for (int j = 0; j <= cols_; ++j) rc_[j] = j < cols_ ? costs[j] : 0.0;
        for (int i = 0; i < m_; ++i) {
            const double cb = costs[basis_[i]];
            if (cb != 0.0)
                for (int j = 0; j <= cols_; ++j) rc_[j] -= cb * rows_[i][j];
        }

        bool bland = false;
        int stall = 0;
        double last_obj = -rc_[cols_];
        while (true) {
            int entering = -1;
            if (bland) {
                for (int j = 0; j < cols_; ++j) {
                    if (!allow_artificial_entering && is_artificial(j)) continue;
                    if (rc_[j] < -kRcTol) { entering = j; break; }
                }
            } else {
                double best = -kRcTol;
                for (int j = 0; j < cols_; ++j) {
                    if (!allow_artificial_entering && is_artificial(j)) continue;
                    if (rc_[j] < best) { best = rc_[j]; entering = j; }
                }
            }
            if (entering < 0) return Status::Optimal;

            int leaving = -1;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (int i = 0; i < m_; ++i) {
                const double a = rows_[i][entering];
                if (a <= kPivotTol) continue;
                const double ratio = rows_[i][cols_] / a;
                if (ratio < best_ratio - 1e-12 ||
                    (ratio < best_ratio + 1e-12 && preferred_leaving(i, leaving, bland))) {
                    best_ratio = ratio;
                    leaving = i;
                }
            }
            if (leaving < 0) return Status::Unbounded;

            pivot(leaving, entering);
            if (++pivots_ > max_pivots_) return Status::IterationLimit;

            const double obj = -rc_[cols_];
            if (obj < last_obj - 1e-12) {
                last_obj = obj;
                stall = 0;
            } else if (!bland && ++stall > 2 * m_ + 16) {
                bland = true;  // degenerate cycle guard
            }
        }
    }

    double phase1_objective() const { return -rc_[cols_]; }

    // Pivot basic artificials out after phase 1; drops redundant rows.
    void eliminate_artificials() {
        for (int i = static_cast<int>(basis_.size()) - 1; i >= 0; --i) {
            if (!is_artificial(basis_[i])) continue;
            int col = -1;
            for (int j = 0; j < n_orig_ + n_slack_; ++j)
                if (std::abs(rows_[i][j]) > kPivotTol) { col = j; break; }
            if (col >= 0) {
                pivot(i, col);
            } else {
                rows_.erase(rows_.begin() + i);
                basis_.erase(basis_.begin() + i);
                --m_;
            }
        }
    }

    std::vector<double> extract(int n) const {
        std::vector<double> x(n, 0.0);
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < n) x[basis_[i]] = std::max(0.0, rows_[i][cols_]);
        return x;
    }

    int cols() const { return cols_; }
    int pivots() const { return pivots_; }

private:
    bool preferred_leaving(int candidate, int incumbent, bool bland) const {
        if (incumbent < 0) return true;
        if (!bland) {
            // Drive artificials out of the basis early.
            const bool cand_art = is_artificial(basis_[candidate]);
            const bool inc_art = is_artificial(basis_[incumbent]);
            if (cand_art != inc_art) return cand_art;
        }
        // Smallest basic index: Bland's anti-cycling tie-break.
        return basis_[candidate] < basis_[incumbent];
    }

    void pivot(int r, int c) {
        const double p = rows_[r][c];
        for (int j = 0; j <= cols_; ++j) rows_[r][j] /= p;
        rows_[r][c] = 1.0;
        for (int i = 0; i < m_; ++i) {
            if (i == r) continue;
            const double factor = rows_[i][c];
            if (factor == 0.0) continue;
            for (int j = 0; j <= cols_; ++j) rows_[i][j] -= factor * rows_[r][j];
            rows_[i][c] = 0.0;
        }
        const double factor = rc_[c];
        if (factor != 0.0) {
            for (int j = 0; j <= cols_; ++j) rc_[j] -= factor * rows_[r][j];
            rc_[c] = 0.0;
        }
        basis_[r] = c;
    }

    int n_orig_;
    int m_;
    int n_slack_ = 0;
    int n_art_ = 0;
    int cols_ = 0;
    int max_pivots_;
    int pivots_ = 0;
    std::vector<int> slack_col_;
    std::vector<int> art_col_;
    std::vector<std::vector<double>> rows_;
    std::vector<int> basis_;
    std::vector<double> rc_;
};

}  // namespace

Solution solve(const Problem& problem, const Options& options) {
    const int m = static_cast<int>(problem.rows.size());
    if (static_cast<int>(problem.senses.size()) != m || static_cast<int>(problem.rhs.size()) != m)
        throw Error("lp: inconsistent row/sense/rhs sizes");
    for (const auto& row : problem.rows)
        if (static_cast<int>(row.size()) != problem.num_vars)
            throw Error("lp: row width does not match num_vars");
    if (!problem.objective.empty() &&
        static_cast<int>(problem.objective.size()) != problem.num_vars)
        throw Error("lp: objective size does not match num_vars");

    const int max_pivots =
        options.max_pivots > 0 ? options.max_pivots : 50 * (m + problem.num_vars) + 1000;

    Tableau tableau(problem, max_pivots);
    Solution solution;

    // Phase 1: minimize the artificial total = the constraint violation.
    std::vector<double> phase1_costs(tableau.cols(), 0.0);
    for (int j = 0; j < tableau.cols(); ++j)
        if (tableau.is_artificial(j)) phase1_costs[j] = 1.0;
    Status status = tableau.run_phase(phase1_costs, /*allow_artificial_entering=*/true);
    if (status == Status::IterationLimit) {
        solution.status = status;
        return solution;
    }
    if (status == Status::Unbounded)
        throw Error("lp: phase 1 reported unbounded, which indicates a numerical failure");
    solution.infeasibility = std::max(0.0, tableau.phase1_objective());
    if (solution.infeasibility > options.feasibility_tol) {
        solution.status = Status::Infeasible;
        solution.x = tableau.extract(problem.num_vars);
        return solution;
    }
    tableau.eliminate_artificials();

    // Phase 2: the caller's objective (skipped structure-wise if all zero).
    std::vector<double> phase2_costs(tableau.cols(), 0.0);
    for (int j = 0; j < problem.num_vars && j < static_cast<int>(problem.objective.size()); ++j)
        phase2_costs[j] = problem.objective[j];
    status = tableau.run_phase(phase2_costs, /*allow_artificial_entering=*/false);
    solution.status = status;
    solution.x = tableau.extract(problem.num_vars);
    if (status == Status::Optimal) {
        double value = 0.0;
        for (int j = 0; j < static_cast<int>(problem.objective.size()); ++j)
            value += problem.objective[j] * solution.x[j];
        solution.objective = value;
    }
    return solution;
}

}  // namespace gridrel::lp
