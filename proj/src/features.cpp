#include "gridrel/features.hpp"

#include <string>

#include "gridrel/errors.hpp"
#include "gridrel/network.hpp"

namespace gridrel {

const char* scheme_name(FeatureScheme scheme) {
    return scheme == FeatureScheme::Full ? "full" : "partial";
}

FeatureScheme scheme_from_name(const std::string& name) {
    if (name == "full") return FeatureScheme::Full;
    if (name == "partial") return FeatureScheme::Partial;
    throw ConfigError("unknown feature scheme '" + name + "' (expected full or partial)");
}

std::size_t feature_length(FeatureScheme scheme, int n) {
    const std::size_t un = static_cast<std::size_t>(n);
    return scheme == FeatureScheme::Full ? un * (un + 4) : 5 * un;
}

BusVectors bus_vectors(const GridCase& grid) {
    const std::size_t n = grid.buses.size();
    BusVectors vectors;
    vectors.pd.resize(n);
    vectors.qd.resize(n);
    vectors.pgmax.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        vectors.pd[i] = grid.buses[i].pd;
        vectors.qd[i] = grid.buses[i].qd;
    }
    for (const GeneratorUnit& unit : grid.units) {
        const int pos = grid.bus_position(unit.bus_id);
        if (pos < 0) throw Error("unit references unknown bus " + std::to_string(unit.bus_id));
        vectors.pgmax[pos] += unit.pmax;
    }
    return vectors;
}

FeatureVector extract(const GridCase& grid, FeatureScheme scheme) {
    const AdmittanceMatrix y = build_ybus(grid);
    const BusVectors buses = bus_vectors(grid);
    const int n = y.n;

    FeatureVector fv;
    fv.scheme = scheme;
    fv.n = n;
    fv.values.reserve(feature_length(scheme, n));

    if (scheme == FeatureScheme::Full) {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) fv.values.push_back(y.g_at(i, j));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) fv.values.push_back(y.b_at(i, j));
    } else {
        for (int i = 0; i < n; ++i) fv.values.push_back(y.g_at(i, i));
        for (int i = 0; i < n; ++i) fv.values.push_back(y.b_at(i, i));
    }
    fv.values.insert(fv.values.end(), buses.pd.begin(), buses.pd.end());
    fv.values.insert(fv.values.end(), buses.qd.begin(), buses.qd.end());
    fv.values.insert(fv.values.end(), buses.pgmax.begin(), buses.pgmax.end());
    return fv;
}

FeatureVector partial_from_full(const FeatureVector& full) {
    if (full.scheme != FeatureScheme::Full)
        throw ConfigError("partial_from_full: input is not a full-scheme vector");
    const int n = full.n;
    if (full.values.size() != feature_length(FeatureScheme::Full, n))
        throw ConfigError("partial_from_full: full vector has wrong length");

    FeatureVector partial;
    partial.scheme = FeatureScheme::Partial;
    partial.n = n;
    partial.values.reserve(feature_length(FeatureScheme::Partial, n));

    const std::size_t tri = static_cast<std::size_t>(n) * (n + 1) / 2;
    // Diagonal (i, i) sits at the start of upper-triangle row i.
    std::size_t row_start = 0;
    for (int i = 0; i < n; ++i) {
        partial.values.push_back(full.values[row_start]);
        row_start += static_cast<std::size_t>(n - i);
    }
    row_start = tri;
    for (int i = 0; i < n; ++i) {
        partial.values.push_back(full.values[row_start]);
        row_start += static_cast<std::size_t>(n - i);
    }
    partial.values.insert(partial.values.end(), full.values.begin() + 2 * tri, full.values.end());
    return partial;
}

int feature_group(FeatureScheme scheme, int n, std::size_t position) {
    const std::size_t block =
        scheme == FeatureScheme::Full ? static_cast<std::size_t>(n) * (n + 1) / 2
                                      : static_cast<std::size_t>(n);
    if (position < 2 * block) return position < block ? 0 : 1;
    const std::size_t rest = position - 2 * block;
    const std::size_t bus_block = static_cast<std::size_t>(n);
    if (rest < bus_block) return 2;
    if (rest < 2 * bus_block) return 3;
    if (rest < 3 * bus_block) return 4;
    throw ConfigError("feature position out of range");
}

Normalizer fit_normalizer(const std::vector<FeatureVector>& training) {
    if (training.empty()) throw ConfigError("normalizer: empty training set");
    const FeatureScheme scheme = training.front().scheme;
    const int n = training.front().n;
    const std::size_t length = feature_length(scheme, n);

    Normalizer normalizer;
    normalizer.scheme = scheme;
    normalizer.n = n;
    std::array<bool, 5> seen{};

    for (const FeatureVector& fv : training) {
        if (fv.scheme != scheme || fv.n != n || fv.values.size() != length)
            throw ConfigError("normalizer: mixed feature schemes or sizes in training set");
        for (std::size_t pos = 0; pos < fv.values.size(); ++pos) {
            const int group = feature_group(scheme, n, pos);
            const double value = fv.values[pos];
            if (!seen[group]) {
                normalizer.groups[group] = {value, value};
                seen[group] = true;
            } else {
                auto& range = normalizer.groups[group];
                if (value < range.min) range.min = value;
                if (value > range.max) range.max = value;
            }
        }
    }
    return normalizer;
}

FeatureVector apply_normalizer(const Normalizer& normalizer, const FeatureVector& features) {
    if (features.scheme != normalizer.scheme || features.n != normalizer.n)
        throw ConfigError("normalizer: scheme or bus-count mismatch");
    if (features.values.size() != feature_length(features.scheme, features.n))
        throw ConfigError("normalizer: feature vector has wrong length");

    FeatureVector scaled = features;
    for (std::size_t pos = 0; pos < scaled.values.size(); ++pos) {
        const auto& range = normalizer.groups[feature_group(features.scheme, features.n, pos)];
        const double span = range.max - range.min;
        scaled.values[pos] = span > 0.0 ? (scaled.values[pos] - range.min) / span : 0.0;
    }
    return scaled;
}

}  // namespace gridrel
