#include "gridrel/grid_case.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "gridrel/errors.hpp"
#include "gridrel/network.hpp"

namespace gridrel {

namespace {

std::string trim(const std::string& s) {
    std::size_t first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    std::size_t last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream stream(line);
    std::string field;
    while (std::getline(stream, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

[[noreturn]] void fail(int line_no, const std::string& message) {
    throw ParseError("case line " + std::to_string(line_no) + ": " + message);
}

double parse_double(const std::string& text, int line_no, const std::string& column) {
    if (text == "inf" || text == "+inf") return std::numeric_limits<double>::infinity();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        fail(line_no, "bad numeric value '" + text + "' in column '" + column + "'");
    return value;
}

int parse_int(const std::string& text, int line_no, const std::string& column) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        fail(line_no, "bad integer value '" + text + "' in column '" + column + "'");
    return value;
}

bool parse_bool(const std::string& text, int line_no, const std::string& column) {
    if (text == "1" || text == "true") return true;
    if (text == "0" || text == "false") return false;
    fail(line_no, "bad boolean value '" + text + "' in column '" + column + "' (use 0/1/true/false)");
}

// Header-driven record: column name -> raw field text.
class Record {
public:
    Record(const std::vector<std::string>& header, const std::vector<std::string>& fields,
           int line_no, const std::string& section)
        : line_no_(line_no) {
        if (fields.size() != header.size())
            fail(line_no, "[" + section + "] record has " + std::to_string(fields.size()) +
                              " fields, header names " + std::to_string(header.size()));
        for (std::size_t i = 0; i < header.size(); ++i) values_[header[i]] = fields[i];
    }

    bool has(const std::string& column) const { return values_.count(column) != 0; }
    const std::string& get(const std::string& column) const {
        auto it = values_.find(column);
        if (it == values_.end()) fail(line_no_, "missing column '" + column + "'");
        return it->second;
    }
    double number(const std::string& column) const { return parse_double(get(column), line_no_, column); }
    int integer(const std::string& column) const { return parse_int(get(column), line_no_, column); }
    bool boolean(const std::string& column) const { return parse_bool(get(column), line_no_, column); }
    int line() const { return line_no_; }

private:
    int line_no_;
    std::map<std::string, std::string> values_;
};

}  // namespace

int GridCase::bus_position(int bus_id) const {
    for (std::size_t i = 0; i < buses.size(); ++i)
        if (buses[i].id == bus_id) return static_cast<int>(i);
    return -1;
}

int GridCase::slack_position() const {
    for (std::size_t i = 0; i < buses.size(); ++i)
        if (buses[i].is_slack) return static_cast<int>(i);
    return -1;
}

GridCase parse_case(const std::string& text) {
    GridCase grid;
    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    std::string section;
    std::vector<std::string> header;
    std::unordered_map<int, int> bus_lines;  // id -> first definition line

    while (std::getline(stream, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') fail(line_no, "unterminated section header '" + line + "'");
            section = line.substr(1, line.size() - 2);
            if (section != "system" && section != "buses" && section != "branches" && section != "units")
                fail(line_no, "unknown section '" + section + "'");
            header.clear();
            continue;
        }
        if (section.empty()) fail(line_no, "record before any section header");

        std::vector<std::string> fields = split_fields(line);
        if (header.empty()) {
            header = fields;
            continue;
        }
        Record record(header, fields, line_no, section);

        if (section == "system") {
            grid.base_mva = record.number("base_mva");
            if (!(grid.base_mva > 0)) fail(line_no, "base_mva must be positive");
        } else if (section == "buses") {
            Bus bus;
            bus.id = record.integer("id");
            bus.is_slack = record.boolean("is_slack");
            bus.pd = record.number("pd");
            bus.qd = record.number("qd");
            bus.vmin = record.number("vmin");
            bus.vmax = record.number("vmax");
            if (bus.id < 1) fail(line_no, "bus id must be >= 1");
            if (auto it = bus_lines.find(bus.id); it != bus_lines.end())
                fail(line_no, "duplicate bus id " + std::to_string(bus.id) +
                                  " (first defined at line " + std::to_string(it->second) + ")");
            bus_lines[bus.id] = line_no;
            if (bus.pd < 0) fail(line_no, "bus " + std::to_string(bus.id) + ": pd must be >= 0");
            if (bus.vmin > bus.vmax) fail(line_no, "bus " + std::to_string(bus.id) + ": vmin > vmax");
            grid.buses.push_back(bus);
        } else if (section == "branches") {
            Branch branch;
            branch.index = record.integer("index");
            branch.from_bus = record.integer("from_bus");
            branch.to_bus = record.integer("to_bus");
            branch.r = record.number("r");
            branch.x = record.number("x");
            branch.b_shunt = record.number("b_shunt");
            branch.rating = record.number("rating");
            if (branch.from_bus == branch.to_bus)
                fail(line_no, "branch " + std::to_string(branch.index) + ": from_bus == to_bus");
            if (!(branch.x > 0)) fail(line_no, "branch " + std::to_string(branch.index) + ": x must be > 0");
            if (!(branch.rating > 0))
                fail(line_no, "branch " + std::to_string(branch.index) + ": rating must be > 0");
            grid.branches.push_back(branch);
        } else {  // units
            GeneratorUnit unit;
            unit.bus_id = record.integer("bus_id");
            unit.pmax = record.number("pmax");
            unit.pmin = record.has("pmin") ? record.number("pmin") : 0.0;
            unit.for_rate = record.number("for_rate");
            if (unit.pmin < 0 || unit.pmin > unit.pmax)
                fail(line_no, "unit at bus " + std::to_string(unit.bus_id) + ": need 0 <= pmin <= pmax");
            if (unit.for_rate < 0 || unit.for_rate > 1)
                fail(line_no, "unit at bus " + std::to_string(unit.bus_id) + ": for_rate outside [0, 1]");
            grid.units.push_back(unit);
        }
    }

    validate_case(grid, /*require_connected=*/true);
    return grid;
}

void validate_case(const GridCase& grid, bool require_connected) {
    if (grid.buses.empty()) throw ParseError("no buses defined");

    std::unordered_set<int> bus_ids;
    int slack_count = 0;
    for (const Bus& bus : grid.buses) {
        if (!bus_ids.insert(bus.id).second)
            throw ParseError("duplicate bus id " + std::to_string(bus.id));
        if (bus.is_slack) ++slack_count;
    }
    if (slack_count == 0) throw ParseError("no slack bus defined");
    if (slack_count > 1) throw ParseError("multiple slack buses");

    std::unordered_set<int> branch_indices;
    for (const Branch& branch : grid.branches) {
        if (!branch_indices.insert(branch.index).second)
            throw ParseError("duplicate branch index " + std::to_string(branch.index));
        if (!bus_ids.count(branch.from_bus) || !bus_ids.count(branch.to_bus))
            throw ParseError("branch " + std::to_string(branch.index) + " references unknown bus " +
                             std::to_string(bus_ids.count(branch.from_bus) ? branch.to_bus
                                                                           : branch.from_bus));
    }
    for (std::size_t i = 0; i < grid.units.size(); ++i) {
        if (!bus_ids.count(grid.units[i].bus_id))
            throw ParseError("unit " + std::to_string(i + 1) + " references unknown bus " +
                             std::to_string(grid.units[i].bus_id));
    }
    if (require_connected && !is_connected(grid)) throw ParseError("disconnected base topology");
}

GridCase load_case(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw Error("cannot open case file: " + path);
    std::stringstream buffer;
    buffer << file.rdbuf();
    try {
        return parse_case(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string format_double(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    (void)ec;
    return std::string(buffer, ptr);
}

std::string serialize_case(const GridCase& grid) {
    std::ostringstream out;
    out << "[system]\nbase_mva\n" << format_double(grid.base_mva) << "\n\n";
    out << "[buses]\nid, is_slack, pd, qd, vmin, vmax\n";
    for (const Bus& bus : grid.buses)
        out << bus.id << ", " << (bus.is_slack ? 1 : 0) << ", " << format_double(bus.pd) << ", "
            << format_double(bus.qd) << ", " << format_double(bus.vmin) << ", "
            << format_double(bus.vmax) << "\n";
    out << "\n[branches]\nindex, from_bus, to_bus, r, x, b_shunt, rating\n";
    for (const Branch& branch : grid.branches)
        out << branch.index << ", " << branch.from_bus << ", " << branch.to_bus << ", "
            << format_double(branch.r) << ", " << format_double(branch.x) << ", "
            << format_double(branch.b_shunt) << ", " << format_double(branch.rating) << "\n";
    out << "\n[units]\nbus_id, pmax, pmin, for_rate\n";
    for (const GeneratorUnit& unit : grid.units)
        out << unit.bus_id << ", " << format_double(unit.pmax) << ", " << format_double(unit.pmin)
            << ", " << format_double(unit.for_rate) << "\n";
    return out.str();
}

std::pair<double, double> case_totals(const GridCase& grid) {
    double load = 0.0;
    for (const Bus& bus : grid.buses) load += bus.pd;
    double capacity = 0.0;
    for (const GeneratorUnit& unit : grid.units) capacity += unit.pmax;
    return {load, capacity};
}

}  // namespace gridrel
