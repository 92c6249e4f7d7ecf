#pragma once

#include <string>
#include <vector>

#include "gridrel/features.hpp"

namespace gridrel {

// One labeled topology: features under one scheme plus the MCS label. beta
// and the iteration count are kept so reports can flag labels that hit the
// iteration cap without beta convergence.
struct LabeledSample {
    std::string case_id;
    std::vector<int> removed;
    int order = 0;
    FeatureVector features;
    double lolp = 0.0;
    double beta = 0.0;
    int iterations = 0;
    bool converged_by_beta = false;

    friend bool operator==(const LabeledSample&, const LabeledSample&) = default;
};

struct Dataset {
    FeatureScheme scheme = FeatureScheme::Full;
    int n = 0;
    std::vector<LabeledSample> samples;

    friend bool operator==(const Dataset&, const Dataset&) = default;
};

// One JSON record per line; scheme and bus count repeated per record so lines
// survive shell pipelines. beta serializes as the string "inf" when no
// failure was observed (JSON has no Infinity literal).
std::string dataset_to_jsonl(const Dataset& dataset);
Dataset dataset_from_jsonl(const std::string& text);
void save_dataset(const std::string& path, const Dataset& dataset);
Dataset load_dataset(const std::string& path);

// Feature vectors under the requested scheme. Partial is derived positionally
// from a Full dataset; asking for Full from a Partial dataset throws.
std::vector<FeatureVector> dataset_features(const Dataset& dataset, FeatureScheme scheme);
std::vector<double> dataset_labels(const Dataset& dataset);

FeatureVector adapt_scheme(const FeatureVector& features, FeatureScheme target);

}  // namespace gridrel
