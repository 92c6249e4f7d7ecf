#pragma once

#include <vector>

namespace gridrel::lp {

enum class Sense { LessEq, Eq, GreaterEq };

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

// min objective . x  subject to  rows[i] . x (sense_i) rhs_i,  x >= 0.
// Callers encode free variables as differences of nonnegative pairs and
// variable upper bounds as explicit rows.
struct Problem {
    int num_vars = 0;
    std::vector<std::vector<double>> rows;
    std::vector<Sense> senses;
    std::vector<double> rhs;
    std::vector<double> objective;  // empty means all-zero (pure feasibility)

    void add_row(std::vector<double> coefficients, Sense sense, double value) {
        rows.push_back(std::move(coefficients));
        senses.push_back(sense);
        rhs.push_back(value);
    }
};

struct Options {
    // Phase-1 optimum (total violation of the constraints) above this value
    // classifies the problem as infeasible.
    double feasibility_tol = 1e-9;
    int max_pivots = 0;  // 0 = automatic from problem size
};

struct Solution {
    Status status = Status::IterationLimit;
    double objective = 0.0;      // phase-2 objective at the returned point
    double infeasibility = 0.0;  // phase-1 optimum; 0 for feasible problems
    std::vector<double> x;       // primal values; meaningful unless Infeasible
};

// Dense two-phase tableau simplex. Dantzig pricing with an automatic switch
// to Bland's rule on degenerate stalls, so termination is guaranteed.
Solution solve(const Problem& problem, const Options& options = {});

}  // namespace gridrel::lp
