#include "gridrel/dataset.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "gridrel/errors.hpp"

namespace gridrel {

using nlohmann::json;

namespace {

json beta_to_json(double beta) {
    if (std::isinf(beta)) return json("inf");
    return json(beta);
}

double beta_from_json(const json& value) {
    if (value.is_string()) {
        if (value.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
        throw ParseError("dataset: bad beta value '" + value.get<std::string>() + "'");
    }
    return value.get<double>();
}

}  // namespace

std::string dataset_to_jsonl(const Dataset& dataset) {
    std::string out;
    for (const LabeledSample& sample : dataset.samples) {
        json record;
        record["case_id"] = sample.case_id;
        record["removed"] = sample.removed;
        record["order"] = sample.order;
        record["scheme"] = scheme_name(dataset.scheme);
        record["n"] = dataset.n;
        record["features"] = sample.features.values;
        record["lolp"] = sample.lolp;
        record["beta"] = beta_to_json(sample.beta);
        record["iterations"] = sample.iterations;
        record["converged_by_beta"] = sample.converged_by_beta;
        out += record.dump();
        out += '\n';
    }
    return out;
}

Dataset dataset_from_jsonl(const std::string& text) {
    Dataset dataset;
    bool first = true;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (line.empty()) continue;
        json record;
        try {
            record = json::parse(line);
        } catch (const json::exception& e) {
            throw ParseError("dataset line " + std::to_string(line_no) + ": " + e.what());
        }
        try {
            LabeledSample sample;
            sample.case_id = record.at("case_id").get<std::string>();
            sample.removed = record.at("removed").get<std::vector<int>>();
            sample.order = record.at("order").get<int>();
            sample.features.scheme = scheme_from_name(record.at("scheme").get<std::string>());
            sample.features.n = record.at("n").get<int>();
            sample.features.values = record.at("features").get<std::vector<double>>();
            sample.lolp = record.at("lolp").get<double>();
            sample.beta = beta_from_json(record.at("beta"));
            sample.iterations = record.at("iterations").get<int>();
            sample.converged_by_beta = record.at("converged_by_beta").get<bool>();

            if (sample.features.values.size() != feature_length(sample.features.scheme, sample.features.n))
                throw ParseError("feature length does not match scheme and bus count");
            if (sample.lolp < 0.0 || sample.lolp > 1.0)
                throw ParseError("lolp outside [0, 1]");
            if (first) {
                dataset.scheme = sample.features.scheme;
                dataset.n = sample.features.n;
                first = false;
            } else if (sample.features.scheme != dataset.scheme || sample.features.n != dataset.n) {
                throw ParseError("mixed schemes or bus counts");
            }
            dataset.samples.push_back(std::move(sample));
        } catch (const json::exception& e) {
            throw ParseError("dataset line " + std::to_string(line_no) + ": " + e.what());
        } catch (const ParseError& e) {
            throw ParseError("dataset line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return dataset;
}

void save_dataset(const std::string& path, const Dataset& dataset) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot write dataset file: " + path);
    file << dataset_to_jsonl(dataset);
}

Dataset load_dataset(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open dataset file: " + path);
    std::stringstream buffer;
    buffer << file.rdbuf();
    try {
        return dataset_from_jsonl(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

FeatureVector adapt_scheme(const FeatureVector& features, FeatureScheme target) {
    if (features.scheme == target) return features;
    if (features.scheme == FeatureScheme::Full && target == FeatureScheme::Partial)
        return partial_from_full(features);
    throw ConfigError("cannot derive full features from a partial-scheme vector");
}

std::vector<FeatureVector> dataset_features(const Dataset& dataset, FeatureScheme scheme) {
    std::vector<FeatureVector> features;
    features.reserve(dataset.samples.size());
    for (const LabeledSample& sample : dataset.samples)
        features.push_back(adapt_scheme(sample.features, scheme));
    return features;
}

std::vector<double> dataset_labels(const Dataset& dataset) {
    std::vector<double> labels;
    labels.reserve(dataset.samples.size());
    for (const LabeledSample& sample : dataset.samples) labels.push_back(sample.lolp);
    return labels;
}

}  // namespace gridrel
