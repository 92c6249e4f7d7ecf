#pragma once

#include <string>
#include <vector>

#include "gridrel/grid_case.hpp"

namespace gridrel {

// Real and imaginary parts of the bus admittance matrix, per-unit, in the
// case's bus order. Both are symmetric by construction.
struct AdmittanceMatrix {
    int n = 0;
    std::vector<double> g;  // n*n, row-major conductance
    std::vector<double> b;  // n*n, row-major susceptance

    double g_at(int i, int j) const { return g[static_cast<std::size_t>(i) * n + j]; }
    double b_at(int i, int j) const { return b[static_cast<std::size_t>(i) * n + j]; }
};

// A planned maintenance outage: branches removed before an MCS run starts.
// Indices are Branch::index values, kept sorted and distinct. An empty set
// denotes the base case.
struct TopologyChange {
    std::vector<int> removed;

    int order() const { return static_cast<int>(removed.size()); }
    std::string case_id() const;  // "base", "rm-7", "rm-3-17", ...

    friend bool operator==(const TopologyChange&, const TopologyChange&) = default;
};

// Standard Y-bus assembly: for every branch, series admittance 1/(r + jx)
// lands on both diagonals and negated on the off-diagonals; half of b_shunt
// is added to each endpoint's diagonal susceptance.
AdmittanceMatrix build_ybus(const GridCase& grid);

// Copy of the case with the listed branches deleted; the input is untouched.
// Throws on an unknown branch index.
GridCase apply_change(const GridCase& grid, const TopologyChange& change);

// True iff the undirected (buses, branches) graph has one component.
bool is_connected(const GridCase& grid);

// Branches whose sole removal disconnects the graph, sorted by index.
// Parallel branches between the same bus pair are never bridges.
std::vector<int> find_bridges(const GridCase& grid);

}  // namespace gridrel
