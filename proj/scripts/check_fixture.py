#!/usr/bin/env python3
"""Independent cross-checks for the bundled RTS-79 fixture.

Run before (and after) touching data/rts79.case:
  - column sums: total load and total unit capacity
  - brute-force bridge search (remove each branch, BFS connectivity)
  - DC feasibility of the all-units-up base case (scipy linprog)
  - truncated enumeration of the copper-plate LOLP for sanity
"""
import itertools
import sys
from pathlib import Path

import numpy as np
from scipy.optimize import linprog


def parse_case(text):
    buses, branches, units = [], [], []
    base_mva = 100.0
    section, header = None, None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            section, header = line.strip("[]"), None
            continue
        fields = [f.strip() for f in line.split(",")]
        if header is None:
            header = fields
            continue
        rec = dict(zip(header, fields))
        if section == "system":
            base_mva = float(rec["base_mva"])
        elif section == "buses":
            buses.append(rec)
        elif section == "branches":
            branches.append(rec)
        elif section == "units":
            units.append(rec)
    return base_mva, buses, branches, units


def connected(n_ids, edges):
    if not n_ids:
        return False
    adj = {i: [] for i in n_ids}
    for f, t in edges:
        adj[f].append(t)
        adj[t].append(f)
    seen, stack = {n_ids[0]}, [n_ids[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(n_ids)


def dc_feasible(base_mva, buses, branches, units, up_mask):
    ids = [int(b["id"]) for b in buses]
    pos = {i: k for k, i in enumerate(ids)}
    slack = next(k for k, b in enumerate(buses) if b["is_slack"] in ("1", "true"))
    n = len(buses)
    up_units = [u for u, keep in zip(units, up_mask) if keep]
    nu = len(up_units)
    # vars: p_u (nu) then theta for non-slack buses (n-1)
    theta_col = {}
    c = 0
    cols = nu
    for k in range(n):
        if k != slack:
            theta_col[k] = cols
            cols += 1
    a_eq = np.zeros((n, cols))
    b_eq = np.array([-float(b["pd"]) / base_mva for b in buses])
    for j, u in enumerate(up_units):
        a_eq[pos[int(u["bus_id"])], j] += 1.0
    a_ub, b_ub = [], []
    for br in branches:
        f, t, x = pos[int(br["from_bus"])], pos[int(br["to_bus"])], float(br["x"])
        for k, sgn in ((f, 1.0), (t, -1.0)):
            if k in theta_col:
                a_eq[f, theta_col[k]] -= sgn / x
                a_eq[t, theta_col[k]] += sgn / x
        cap = float(br["rating"]) / base_mva
        row = np.zeros(cols)
        for k, sgn in ((f, 1.0), (t, -1.0)):
            if k in theta_col:
                row[theta_col[k]] = sgn / x
        a_ub.append(row.copy())
        b_ub.append(cap)
        a_ub.append(-row)
        b_ub.append(cap)
    b_eq = -b_eq  # balance written as gen - B'theta = pd
    bounds = [(0.0, float(u["pmax"]) / base_mva) for u in up_units]
    bounds += [(None, None)] * (cols - nu)
    res = linprog(np.zeros(cols), A_ub=np.array(a_ub), b_ub=np.array(b_ub),
                  A_eq=a_eq, b_eq=b_eq, bounds=bounds, method="highs")
    return res.status == 0


def main():
    text = Path(sys.argv[1]).read_text()
    base_mva, buses, branches, units = parse_case(text)
    print(f"buses={len(buses)} branches={len(branches)} units={len(units)} base={base_mva}")
    total_pd = sum(float(b["pd"]) for b in buses)
    total_qd = sum(float(b["qd"]) for b in buses)
    total_cap = sum(float(u["pmax"]) for u in units)
    print(f"total load MW={total_pd} MVAr={total_qd} capacity MW={total_cap}")

    ids = [int(b["id"]) for b in buses]
    edges = [(int(br["from_bus"]), int(br["to_bus"])) for br in branches]
    print("base connected:", connected(ids, edges))
    bridges = []
    for i in range(len(edges)):
        if not connected(ids, edges[:i] + edges[i + 1:]):
            bridges.append(int(branches[i]["index"]))
    print("bridges (brute force):", bridges)

    m = len(units)
    print("DC base case feasible:", dc_feasible(base_mva, buses, branches, units, [True] * m))

    # copper-plate lolp, truncated at outage order 3
    fors = [float(u["for_rate"]) for u in units]
    caps = [float(u["pmax"]) for u in units]
    p_all_up = np.prod([1 - f for f in fors])
    lower, mass = 0.0, p_all_up
    for k in (1, 2, 3):
        for combo in itertools.combinations(range(m), k):
            p = p_all_up
            for u in combo:
                p *= fors[u] / (1 - fors[u])
            mass += p
            if total_cap - sum(caps[u] for u in combo) < total_pd:
                lower += p
    print(f"copper lolp order<=3: lower={lower:.6f} truncated={1 - mass:.6f} upper={lower + 1 - mass:.6f}")

    # first-order screening: which removals disconnect / fail DC with all units up
    excluded = []
    for i, br in enumerate(branches):
        rest = branches[:i] + branches[i + 1:]
        if not connected(ids, edges[:i] + edges[i + 1:]):
            excluded.append((int(br["index"]), "disconnect"))
        elif not dc_feasible(base_mva, buses, rest, units, [True] * m):
            excluded.append((int(br["index"]), "dc-infeasible"))
    print("first-order exclusions:", excluded)
    print("kept first-order cases:", len(branches) - len(excluded))


if __name__ == "__main__":
    main()
