#pragma once

#include <Eigen/Dense>
#include <array>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "talentrec/transitions.hpp"
#include "talentrec/types.hpp"

namespace talentrec {

inline constexpr int kNumCriteria = 6;

// Column order of the criterion matrix.
enum class Criterion {
    MarketPrevalence = 0,
    SkillBreadth = 1,
    DigitalSkillDensity = 2,
    InnovationIntensity = 3,
    RoleLevel = 4,
    TransitionMobility = 5,
};
const std::array<std::string, kNumCriteria>& criterion_names();
int criterion_index(const std::string& name);  // throws ValidationError

struct LexiconConfig {
    std::vector<std::string> digital_terms;
    std::vector<std::string> innovation_terms;
    std::vector<std::pair<std::string, double>> role_cues;  // cue token -> score
    static LexiconConfig defaults();
};
std::vector<std::string> load_term_file(const std::filesystem::path& path);
std::vector<std::pair<std::string, double>> load_role_cue_file(const std::filesystem::path& path);

struct CriterionMatrix {
    Eigen::MatrixXd X;                       // |I| x 6, non-negative
    std::array<bool, kNumCriteria> active{true, true, true, true, true, true};
    int n_active() const;
};

// Occupation-side proxies: column 0 = training popularity; column 1 = skill
// count plus informative description tokens (length >= 4, stop words removed),
// min-maxed; column 2 = fraction of the occupation's description/skill tokens
// matching digital_terms; column 3 = distinct innovation terms present,
// min-maxed; column 4 = strongest role cue in the title, min-maxed; column 5 =
// distinct outgoing transitions, min-maxed. Text columns (1-3) use description
// and skills only, so an occupation with empty description and no skills has
// exact zeros there; column 4 uses the title only.
CriterionMatrix build_criterion_matrix(const std::vector<OccupationRecord>& items,
                                       const TransitionModel& model,
                                       const LexiconConfig& lexicons);

// Entropy-based global weights over active criteria (inactive entries are 0).
// An exactly-constant column receives divergence exactly 0.0; if every active
// column is constant, weights fall back to uniform over active criteria.
Eigen::VectorXd entropy_weights(const CriterionMatrix& X);

// Recency-weighted criterion profile of the prefix, normalized to a simplex
// over active criteria; falls back to `global` when the profile is all-zero.
Eigen::VectorXd user_weights(const std::vector<int>& prefix, const CriterionMatrix& X,
                             double decay, const Eigen::VectorXd& global);

// alpha * user + (1 - alpha) * global.
Eigen::VectorXd mix_weights(const Eigen::VectorXd& user, const Eigen::VectorXd& global,
                            double alpha);

enum class TopsisNorm { Vector, MinMax };

// Classic TOPSIS closeness D- / (D+ + D-) over active criteria, all treated
// as benefit criteria; 0.5 where D+ + D- = 0. Raw closeness, not re-scaled.
Eigen::VectorXd topsis_closeness(const CriterionMatrix& X, const Eigen::VectorXd& weights,
                                 TopsisNorm norm = TopsisNorm::Vector);

// Closeness min-max normalized to [0, 1] for fusion comparability.
Eigen::VectorXd topsis_scores(const CriterionMatrix& X, const Eigen::VectorXd& weights,
                              TopsisNorm norm = TopsisNorm::Vector);

// Leave-one-proxy-out support. Deactivation requires >= 2 currently active
// criteria and an active target; reactivation restores the original scores.
CriterionMatrix deactivate_proxy(CriterionMatrix X, int criterion);
CriterionMatrix activate_proxy(CriterionMatrix X, int criterion);

}  // namespace talentrec
