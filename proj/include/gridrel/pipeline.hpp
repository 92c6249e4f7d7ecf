#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gridrel/dataset.hpp"
#include "gridrel/grid_case.hpp"
#include "gridrel/mcs.hpp"
#include "gridrel/metrics.hpp"
#include "gridrel/model_io.hpp"
#include "gridrel/network.hpp"

namespace gridrel {

// Bookkeeping for the candidate filter and labeling:
// generated = kept + bridge_excluded + disconnection_excluded
//           + step2_excluded + mcs_failed.
// Order-1 disconnections are counted as bridges; higher orders as
// disconnections.
struct GenerationCounts {
    long generated = 0;
    long kept = 0;
    long bridge_excluded = 0;
    long disconnection_excluded = 0;
    long step2_excluded = 0;
    long mcs_failed = 0;

    friend bool operator==(const GenerationCounts&, const GenerationCounts&) = default;
};

struct CaseGeneration {
    std::vector<TopologyChange> kept;
    GenerationCounts counts;
};

// All branch-removal combinations of the requested orders, filtered by
// connectivity (step 1) and by the all-units-up verdict of the tester
// (step 2). Output is ordered by (order, indices).
CaseGeneration generate_cases(const GridCase& grid, const std::set<int>& orders,
                              TesterKind tester);

struct DatasetBuildConfig {
    McsConfig mcs;         // per-case seed derived from mcs.seed and the case id
    FeatureScheme scheme = FeatureScheme::Full;
    int jobs = 1;          // cases labeled in parallel; output order is fixed
};

struct BuiltDataset {
    Dataset dataset;
    long mcs_failed = 0;
    std::vector<std::string> failed_cases;
};

// Labels each change: apply -> extract features -> run MCS. Tester failures
// skip the case and are counted. Deterministic for any jobs value.
BuiltDataset build_dataset(const GridCase& grid, const std::vector<TopologyChange>& changes,
                           const DatasetBuildConfig& config);

// Uniform random partition without replacement, deterministic in seed.
// test count = round((1 - train_fraction) * size); train gets the remainder.
// Throws ConfigError if either side would be empty.
std::pair<Dataset, Dataset> split_dataset(const Dataset& dataset, double train_fraction,
                                          std::uint64_t seed);

// Uniform subset of round(fraction * size) samples (at least 1), keeping the
// original order; fraction 1 returns everything.
Dataset subsample_dataset(const Dataset& dataset, double fraction, std::uint64_t seed);

enum class ExperimentKind { Basic, Scalability, Generalizability };

const char* experiment_kind_name(ExperimentKind kind);
ExperimentKind experiment_kind_from_name(const std::string& name);

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::Basic;
    std::string case_path;
    std::set<int> orders = {1, 2};
    TesterKind tester = TesterKind::Dc;
    FeatureScheme scheme = FeatureScheme::Full;
    std::uint64_t seed = 0;
    double beta_threshold = 0.02;
    int max_iterations = 4000;
    double train_fraction = 0.9;                          // basic
    std::vector<double> fractions = {0.9, 0.7, 0.5};      // scalability
    std::vector<double> train_shares = {1.0, 0.75, 0.5};  // generalizability
    int order3_count = 20;                                // generalizability
    SvrParams svr;
    BoostParams boost;
    int jobs = 0;  // <= 0: all cores
};

struct ModelEvaluation {
    Metrics metrics;
    // (case id, label, clipped prediction) per test sample.
    std::vector<std::string> case_ids;
    std::vector<double> y_true;
    std::vector<double> y_pred;
};

struct ExperimentBlock {
    double train_fraction = 0.0;
    std::size_t train_count = 0;
    std::size_t test_count = 0;
    ModelEvaluation svr;
    ModelEvaluation lsboost;
};

struct PhaseTimings {
    double dataset_generation_s = 0.0;
    double training_s = 0.0;
    double prediction_s = 0.0;
};

struct ExperimentResult {
    nlohmann::json report;       // deterministic given the config
    std::string report_text;     // human-readable tables, same content
    nlohmann::json manifest;     // counts + config echo
    Dataset dataset;             // the labeled order-{1,2} dataset
    PhaseTimings timings;        // excluded from the determinism contract
};

ExperimentResult run_experiment(const ExperimentConfig& config);

// Shared helpers (also used by the CLI's train/predict subcommands).
ModelFile train_model(const Dataset& train, ModelKind kind, FeatureScheme scheme,
                      const SvrParams& svr_params, const BoostParams& boost_params);
ModelEvaluation evaluate_model(const ModelFile& model, const Dataset& test);
double clip_unit_interval(double value);

}  // namespace gridrel
