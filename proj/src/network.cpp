#include "gridrel/network.hpp"

#include <algorithm>
#include <functional>

#include "gridrel/errors.hpp"

namespace gridrel {

std::string TopologyChange::case_id() const {
    if (removed.empty()) return "base";
    std::string id = "rm";
    for (int index : removed) id += "-" + std::to_string(index);
    return id;
}

AdmittanceMatrix build_ybus(const GridCase& grid) {
    const int n = static_cast<int>(grid.buses.size());
    AdmittanceMatrix y;
    y.n = n;
    y.g.assign(static_cast<std::size_t>(n) * n, 0.0);
    y.b.assign(static_cast<std::size_t>(n) * n, 0.0);

    auto at = [n](std::vector<double>& m, int i, int j) -> double& {
        return m[static_cast<std::size_t>(i) * n + j];
    };

    for (const Branch& branch : grid.branches) {
        if (branch.r == 0.0 && branch.x == 0.0)
            throw Error("branch " + std::to_string(branch.index) + " is singular (r = x = 0)");
        const int f = grid.bus_position(branch.from_bus);
        const int t = grid.bus_position(branch.to_bus);
        if (f < 0 || t < 0)
            throw Error("branch " + std::to_string(branch.index) + " references unknown bus");

        // y_series = 1 / (r + jx)
        const double denom = branch.r * branch.r + branch.x * branch.x;
        const double g_series = branch.r / denom;
        const double b_series = -branch.x / denom;

        at(y.g, f, f) += g_series;
        at(y.g, t, t) += g_series;
        at(y.g, f, t) -= g_series;
        at(y.g, t, f) -= g_series;

        at(y.b, f, f) += b_series + branch.b_shunt / 2.0;
        at(y.b, t, t) += b_series + branch.b_shunt / 2.0;
        at(y.b, f, t) -= b_series;
        at(y.b, t, f) -= b_series;
    }
    return y;
}

GridCase apply_change(const GridCase& grid, const TopologyChange& change) {
    GridCase modified = grid;
    for (int index : change.removed) {
        auto it = std::find_if(modified.branches.begin(), modified.branches.end(),
                               [index](const Branch& b) { return b.index == index; });
        if (it == modified.branches.end())
            throw Error("unknown branch index " + std::to_string(index));
        modified.branches.erase(it);
    }
    return modified;
}

namespace {

// Adjacency as (neighbor position, branch position) pairs.
std::vector<std::vector<std::pair<int, int>>> adjacency(const GridCase& grid) {
    std::vector<std::vector<std::pair<int, int>>> adj(grid.buses.size());
    for (std::size_t e = 0; e < grid.branches.size(); ++e) {
        const int f = grid.bus_position(grid.branches[e].from_bus);
        const int t = grid.bus_position(grid.branches[e].to_bus);
        adj[f].emplace_back(t, static_cast<int>(e));
        adj[t].emplace_back(f, static_cast<int>(e));
    }
    return adj;
}

}  // namespace

bool is_connected(const GridCase& grid) {
    if (grid.buses.empty()) return false;
    auto adj = adjacency(grid);
    std::vector<char> seen(grid.buses.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, e] : adj[v]) {
            (void)e;
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == grid.buses.size();
}

std::vector<int> find_bridges(const GridCase& grid) {
    const int n = static_cast<int>(grid.buses.size());
    auto adj = adjacency(grid);

    // Low-link DFS over the multigraph; the entry edge is skipped by branch
    // position, so a parallel circuit still provides the back edge.
    std::vector<int> order(n, -1), low(n, 0);
    std::vector<int> bridges;
    int clock = 0;

    std::function<void(int, int)> dfs = [&](int v, int entry_edge) {
        order[v] = low[v] = clock++;
        for (auto [w, e] : adj[v]) {
            if (e == entry_edge) continue;
            if (order[w] == -1) {
                dfs(w, e);
                low[v] = std::min(low[v], low[w]);
                if (low[w] > order[v]) bridges.push_back(grid.branches[e].index);
            } else {
                low[v] = std::min(low[v], order[w]);
            }
        }
    };

    for (int v = 0; v < n; ++v)
        if (order[v] == -1) dfs(v, -1);

    std::sort(bridges.begin(), bridges.end());
    return bridges;
}

}  // namespace gridrel
