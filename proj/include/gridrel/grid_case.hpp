#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gridrel {

struct Bus {
    int id = 0;
    bool is_slack = false;
    double pd = 0.0;    // active load, MW
    double qd = 0.0;    // reactive load, MVAr
    double vmin = 0.0;  // per-unit voltage bounds (carried with the case; the
    double vmax = 0.0;  // DC feasibility test does not use them)

    friend bool operator==(const Bus&, const Bus&) = default;
};

struct GeneratorUnit {
    int bus_id = 0;
    double pmax = 0.0;      // capacity, MW
    double pmin = 0.0;      // minimum output, MW; 0 when the column is absent
    double for_rate = 0.0;  // forced-outage rate in [0, 1]

    friend bool operator==(const GeneratorUnit&, const GeneratorUnit&) = default;
};

struct Branch {
    int index = 0;
    int from_bus = 0;
    int to_bus = 0;
    double r = 0.0;        // series resistance, per-unit
    double x = 0.0;        // series reactance, per-unit, > 0
    double b_shunt = 0.0;  // total line-charging susceptance, per-unit
    double rating = 0.0;   // flow magnitude limit, MW; +inf means unbounded

    friend bool operator==(const Branch&, const Branch&) = default;
};

// Immutable after parsing. The bus ordering fixes the row/column order of
// every derived matrix and feature vector, so it is preserved from the file.
struct GridCase {
    std::vector<Bus> buses;
    std::vector<Branch> branches;
    std::vector<GeneratorUnit> units;
    double base_mva = 100.0;

    // Position of a bus id in `buses`, or -1 if unknown.
    int bus_position(int bus_id) const;
    int slack_position() const;

    friend bool operator==(const GridCase&, const GridCase&) = default;
};

// Parses the sectioned case-file format:
//   [system]   optional; header "base_mva", one record
//   [buses]    header "id, is_slack, pd, qd, vmin, vmax"
//   [branches] header "index, from_bus, to_bus, r, x, b_shunt, rating"
//   [units]    header "bus_id, pmax, pmin, for_rate" (pmin optional)
// Comma-separated records, '#' comments, UTF-8. Column order follows each
// section's header line. Errors carry line context.
GridCase parse_case(const std::string& text);

GridCase load_case(const std::string& path);

// Canonical text form; parse_case(serialize_case(c)) == c.
std::string serialize_case(const GridCase& grid);

// Validates type invariants and referential integrity; `require_connected`
// additionally demands one connected component. Throws ParseError.
void validate_case(const GridCase& grid, bool require_connected);

// (total load MW, total unit capacity MW)
std::pair<double, double> case_totals(const GridCase& grid);

// Shortest round-trip decimal representation of a double ("inf" for the
// unbounded-rating sentinel).
std::string format_double(double value);

}  // namespace gridrel
