#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "gridrel/grid_case.hpp"

namespace gridrel {

enum class FeatureScheme { Full, Partial };

const char* scheme_name(FeatureScheme scheme);
FeatureScheme scheme_from_name(const std::string& name);

// Layouts, in bus order throughout:
//   Full:    [vG | vB | Pd | Qd | Pgmax], where vG/vB are the row-major upper
//            triangle of G/B including the diagonal -> n(n+4) entries.
//   Partial: [diag(G) | diag(B) | Pd | Qd | Pgmax] -> 5n entries.
struct FeatureVector {
    FeatureScheme scheme = FeatureScheme::Full;
    int n = 0;
    std::vector<double> values;

    friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

std::size_t feature_length(FeatureScheme scheme, int n);

// Per-bus load and capacity vectors: Pd, Qd straight off the buses, Pgmax the
// sum of unit capacities at each bus (zero where no units sit).
struct BusVectors {
    std::vector<double> pd;
    std::vector<double> qd;
    std::vector<double> pgmax;
};

BusVectors bus_vectors(const GridCase& grid);

FeatureVector extract(const GridCase& grid, FeatureScheme scheme);

// Positional restriction of a Full vector to its Partial layout.
FeatureVector partial_from_full(const FeatureVector& full);

// Normalization group of a position: 0 = vG/diag-G, 1 = vB/diag-B, 2 = Pd,
// 3 = Qd, 4 = Pgmax.
int feature_group(FeatureScheme scheme, int n, std::size_t position);

inline constexpr std::array<const char*, 5> kGroupNames = {"g", "b", "pd", "qd", "pgmax"};

// Group-wise min/max ranges, fitted on training data only.
struct Normalizer {
    struct Range {
        double min = 0.0;
        double max = 0.0;
        friend bool operator==(const Range&, const Range&) = default;
    };
    FeatureScheme scheme = FeatureScheme::Full;
    int n = 0;
    std::array<Range, 5> groups;

    friend bool operator==(const Normalizer&, const Normalizer&) = default;
};

// Throws ConfigError on an empty set or mixed schemes/sizes.
Normalizer fit_normalizer(const std::vector<FeatureVector>& training);

// (x - min) / (max - min) with the position's group range; a degenerate
// group (max == min) maps to 0. Entries outside the fitted range are NOT
// clipped, so test data may fall outside [0, 1].
FeatureVector apply_normalizer(const Normalizer& normalizer, const FeatureVector& features);

}  // namespace gridrel
