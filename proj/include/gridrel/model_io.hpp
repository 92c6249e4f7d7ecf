#pragma once

#include <string>

#include "gridrel/boost_tree.hpp"
#include "gridrel/features.hpp"
#include "gridrel/svr.hpp"

namespace gridrel {

enum class ModelKind { Svr, LsBoost };

const char* model_kind_name(ModelKind kind);
ModelKind model_kind_from_name(const std::string& name);

// A trained model plus everything needed to apply it to raw feature vectors:
// the scheme, the training-split normalizer, and the hyperparameter echo.
struct ModelFile {
    ModelKind kind = ModelKind::Svr;
    FeatureScheme scheme = FeatureScheme::Full;
    int n = 0;
    Normalizer normalizer;
    SvrModel svr;
    BoostModel boost;
    SvrParams svr_params;
    BoostParams boost_params;

    friend bool operator==(const ModelFile&, const ModelFile&) = default;
};

// Versioned JSON document; doubles round-trip bit-exactly.
std::string serialize_model(const ModelFile& model);
ModelFile parse_model(const std::string& text);
void save_model(const std::string& path, const ModelFile& model);
ModelFile load_model(const std::string& path);

// Normalizes a raw feature vector (deriving the partial layout if the model
// wants it) and predicts. No clipping: probability clamping is the caller's
// pipeline-level concern.
double model_predict(const ModelFile& model, const FeatureVector& raw_features);

}  // namespace gridrel
