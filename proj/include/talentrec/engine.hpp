#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "talentrec/bandit.hpp"
#include "talentrec/baselines.hpp"
#include "talentrec/cf.hpp"
#include "talentrec/evaluation.hpp"
#include "talentrec/fusion.hpp"
#include "talentrec/taxonomy.hpp"
#include "talentrec/topsis.hpp"
#include "talentrec/types.hpp"

namespace talentrec {

enum class ModelKind {
    Popularity,
    RepeatLast,
    Markov,
    TransitionCF,
    NMF,
    SVD,
    Topsis,
    RLBandit,
    CfTopsis,
    RlTopsis,
    Full,
};

std::string model_name(ModelKind kind);
ModelKind model_from_name(const std::string& name);  // throws ValidationError
std::vector<ModelKind> default_models();             // the headline comparison set
std::vector<ModelKind> all_models();                 // the full ablation suite
std::vector<ModelKind> parse_model_list(const std::string& csv);

struct RunConfig {
    CFConfig cf;                       // beta = 0.85, gamma = 0.7
    RLConfig rl;                       // eta = 0.2, rewards +1/-0.2, 2 negatives, 30 passes
    double decay = 0.8;                // recency decay shared by all branches
    TopsisNorm topsis_norm = TopsisNorm::Vector;
    std::vector<double> alpha_grid{0.0, 0.25, 0.5, 0.75, 1.0};
    std::vector<int> latent_dims{6, 10, 14};
    int nmf_iterations = 200;
    int svd_iterations = 50;
    std::vector<std::int64_t> seeds{100, 101, 102, 103, 104, 105, 106, 107, 108, 109};
    std::int64_t canonical_seed = 20260331;
    ValidationObjective validation_objective = ValidationObjective::Ndcg5;
    std::optional<FusionWeights> forced_lambda;  // skip lambda search when set
    std::optional<double> forced_alpha;          // skip alpha search when set
    int jobs = 1;
};

struct SeedMetrics {
    double hr = 0.0;
    double ndcg = 0.0;
    double mrr = 0.0;
    double precision = 0.0;
};

struct ModelOutcome {
    ModelKind model = ModelKind::Popularity;
    std::map<std::int64_t, SeedMetrics> by_seed;
    std::map<std::int64_t, SelectionResult> selection;  // fusion models only
    std::map<std::int64_t, double> chosen_alpha;        // TOPSIS-involving models
    std::map<std::int64_t, int> chosen_dim;             // factor models only

    std::vector<double> seed_series(const std::string& metric) const;  // hr5|ndcg5|mrr5|precision5
    SeedMetrics mean_metrics() const;
    SeedMetrics std_metrics() const;  // population standard deviation
};

struct EvaluationRun {
    std::vector<ModelKind> models;
    std::vector<std::int64_t> seeds;
    std::vector<ModelOutcome> outcomes;            // aligned with models
    std::vector<PairedTestResult> planned_tests;   // full vs the planned baselines
    std::map<std::int64_t, Eigen::VectorXd> global_weights_by_seed;  // entropy weights
    const ModelOutcome* find(ModelKind kind) const;
};

// Per-seed pipeline: refit all training-prefix statistics, reselect alpha and
// lambda on validation, score test targets over the full universe, aggregate
// over seeds, and run the planned paired comparisons on per-seed NDCG@5.
EvaluationRun run_repeated_evaluation(const BenchmarkPackage& pkg,
                                      const std::vector<ModelKind>& models,
                                      const RunConfig& config,
                                      const FamilyTaxonomy* taxonomy_override = nullptr,
                                      const LexiconConfig* lexicon_override = nullptr,
                                      const std::array<bool, kNumCriteria>* active_mask = nullptr);

struct SensitivityRow {
    int criterion = 0;
    std::string name;
    double mean_ndcg = 0.0;
    double delta = 0.0;              // run - baseline
    double mean_global_weight = 0.0; // entropy weight of the removed proxy, mean over seeds
};

struct SensitivityTable {
    double baseline_mean_ndcg = 0.0;
    std::vector<SensitivityRow> rows;  // one per criterion, column order
};

// Leave-one-proxy-out sweep of the full hybrid: one run per deactivated
// criterion against the all-proxy baseline.
SensitivityTable proxy_sensitivity(const BenchmarkPackage& pkg, const RunConfig& config,
                                   const FamilyTaxonomy* taxonomy_override = nullptr,
                                   const LexiconConfig* lexicon_override = nullptr);

struct ExplainCandidate {
    std::string occupation_id;
    std::string title;
    double cf = 0.0;
    double rl = 0.0;
    double topsis = 0.0;
    double fused = 0.0;
    bool is_target = false;
};

struct ExplainReport {
    std::string user_id;
    std::int64_t seed = 0;
    SplitSpec split;
    std::string target_id;
    std::string target_title;
    FusionWeights lambda;
    double alpha = 0.0;
    double validation_metric = 0.0;
    Eigen::VectorXd mixed_weights;  // w_u over the 6 criteria
    std::vector<ExplainCandidate> candidates;  // top-5 by fused score, + target if absent
    std::vector<std::pair<std::string, int>> target_ranks;  // model name -> rank
};

// Per-user interpretability report on one seed (canonical by default).
ExplainReport explain_user(const BenchmarkPackage& pkg, const std::string& user_id,
                           std::int64_t seed, const RunConfig& config,
                           const FamilyTaxonomy* taxonomy_override = nullptr,
                           const LexiconConfig* lexicon_override = nullptr);

// Debug dump of the shared training statistics (canonical seed): counts,
// probs, sims, popularity, criterion matrix.
void dump_statistics(const BenchmarkPackage& pkg, const RunConfig& config,
                     const std::string& out_dir,
                     const FamilyTaxonomy* taxonomy_override = nullptr,
                     const LexiconConfig* lexicon_override = nullptr);

}  // namespace talentrec
