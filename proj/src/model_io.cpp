#include "gridrel/model_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "gridrel/dataset.hpp"
#include "gridrel/errors.hpp"

namespace gridrel {

using nlohmann::json;

namespace {
constexpr int kFormatVersion = 1;
constexpr const char* kFormatName = "gridrel-model";
}  // namespace

const char* model_kind_name(ModelKind kind) {
    return kind == ModelKind::Svr ? "svr" : "lsboost";
}

ModelKind model_kind_from_name(const std::string& name) {
    if (name == "svr") return ModelKind::Svr;
    if (name == "lsboost") return ModelKind::LsBoost;
    throw ConfigError("unknown model kind '" + name + "' (expected svr or lsboost)");
}

std::string serialize_model(const ModelFile& model) {
    json doc;
    doc["format"] = kFormatName;
    doc["version"] = kFormatVersion;
    doc["kind"] = model_kind_name(model.kind);
    doc["scheme"] = scheme_name(model.scheme);
    doc["n"] = model.n;

    json normalizer;
    for (std::size_t g = 0; g < model.normalizer.groups.size(); ++g) {
        normalizer[kGroupNames[g]] = {{"min", model.normalizer.groups[g].min},
                                      {"max", model.normalizer.groups[g].max}};
    }
    doc["normalizer"] = normalizer;

    if (model.kind == ModelKind::Svr) {
        doc["svr"] = {{"w", model.svr.w},
                      {"b", model.svr.b},
                      {"c", model.svr.c},
                      {"epsilon", model.svr.epsilon}};
    } else {
        json stages = json::array();
        for (const Stump& stump : model.boost.stages) {
            json stage;
            stage["feature"] = stump.feature;
            stage["threshold"] = std::isinf(stump.threshold) ? json("inf") : json(stump.threshold);
            stage["left"] = stump.left;
            stage["right"] = stump.right;
            stages.push_back(stage);
        }
        doc["lsboost"] = {{"f0", model.boost.f0},
                          {"shrinkage", model.boost.shrinkage},
                          {"stages", stages}};
    }
    return doc.dump(2) + "\n";
}

ModelFile parse_model(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("model file: ") + e.what());
    }
    try {
        if (doc.at("format").get<std::string>() != kFormatName)
            throw ParseError("model file: unknown format '" +
                             doc.at("format").get<std::string>() + "'");
        if (doc.at("version").get<int>() != kFormatVersion)
            throw ParseError("model file: unsupported version " +
                             std::to_string(doc.at("version").get<int>()));

        ModelFile model;
        model.kind = model_kind_from_name(doc.at("kind").get<std::string>());
        model.scheme = scheme_from_name(doc.at("scheme").get<std::string>());
        model.n = doc.at("n").get<int>();
        model.normalizer.scheme = model.scheme;
        model.normalizer.n = model.n;
        const json& normalizer = doc.at("normalizer");
        for (std::size_t g = 0; g < model.normalizer.groups.size(); ++g) {
            const json& range = normalizer.at(kGroupNames[g]);
            model.normalizer.groups[g].min = range.at("min").get<double>();
            model.normalizer.groups[g].max = range.at("max").get<double>();
        }

        if (model.kind == ModelKind::Svr) {
            const json& svr = doc.at("svr");
            model.svr.w = svr.at("w").get<std::vector<double>>();
            model.svr.b = svr.at("b").get<double>();
            model.svr.c = svr.at("c").get<double>();
            model.svr.epsilon = svr.at("epsilon").get<double>();
            model.svr_params.c = model.svr.c;
            model.svr_params.epsilon = model.svr.epsilon;
            if (model.svr.w.size() != feature_length(model.scheme, model.n))
                throw ParseError("model file: weight vector length does not match scheme");
        } else {
            const json& boost = doc.at("lsboost");
            model.boost.f0 = boost.at("f0").get<double>();
            model.boost.shrinkage = boost.at("shrinkage").get<double>();
            for (const json& stage : boost.at("stages")) {
                Stump stump;
                stump.feature = stage.at("feature").get<int>();
                const json& threshold = stage.at("threshold");
                stump.threshold = threshold.is_string()
                                      ? std::numeric_limits<double>::infinity()
                                      : threshold.get<double>();
                stump.left = stage.at("left").get<double>();
                stump.right = stage.at("right").get<double>();
                model.boost.stages.push_back(stump);
            }
            model.boost_params.stages = static_cast<int>(model.boost.stages.size());
            model.boost_params.shrinkage = model.boost.shrinkage;
        }
        return model;
    } catch (const json::exception& e) {
        throw ParseError(std::string("model file: ") + e.what());
    }
}

void save_model(const std::string& path, const ModelFile& model) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot write model file: " + path);
    file << serialize_model(model);
}

ModelFile load_model(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open model file: " + path);
    std::stringstream buffer;
    buffer << file.rdbuf();
    try {
        return parse_model(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

double model_predict(const ModelFile& model, const FeatureVector& raw_features) {
    const FeatureVector adapted = adapt_scheme(raw_features, model.scheme);
    const FeatureVector scaled = apply_normalizer(model.normalizer, adapted);
    if (model.kind == ModelKind::Svr) return predict_svr(model.svr, scaled.values);
    return predict_lsboost(model.boost, scaled.values);
}

}  // namespace gridrel
