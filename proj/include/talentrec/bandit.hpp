#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "talentrec/taxonomy.hpp"

namespace talentrec {

struct RLConfig {
    double eta = 0.2;                 // learning rate
    double reward_pos = 1.0;          // observed family transition
    double reward_neg = -0.2;         // sampled alternative action
    int negatives_per_positive = 2;
    int passes = 30;
    double omega = 0.7;               // Q-row vs family-bias mix
    double mix_family = 0.75;         // family-score weight in the item score
    double mix_pop = 0.25;            // popularity weight in the item score
    std::uint64_t seed = 0;
};

// One incremental value update: q + eta * (reward - q).
double bandit_update(double q, double reward, double eta);

// Trains the 6x6 family value table from scratch: `passes` epochs over the
// observed adjacent pairs in stable corpus order; each positive update is
// followed immediately by its sampled negative updates (families drawn
// uniformly from the 5 families != f(i)). Returns the RAW table; callers
// min-max normalize rows via normalize_rows for scoring.
Eigen::MatrixXd train_bandit(const std::vector<std::vector<int>>& train_prefixes,
                             const FamilyTaxonomy& taxonomy, const RLConfig& config);

// Row-wise min-max normalization (constant rows become zero rows).
Eigen::MatrixXd normalize_rows(const Eigen::MatrixXd& m);

// Recency-weighted family occupancy of the prefix, min-max normalized.
Eigen::VectorXd family_bias(const std::vector<int>& prefix, const FamilyTaxonomy& taxonomy,
                            double decay);

// Eq-style adaptive score: g = omega * Q_norm[f(last), :] + (1-omega) * bias;
// s_i = mix_family * g[f(i)] + mix_pop * popularity_i; min-max normalized.
Eigen::VectorXd score_rl(const std::vector<int>& prefix, const Eigen::MatrixXd& q_normalized,
                         const Eigen::VectorXd& bias, const Eigen::VectorXd& popularity,
                         const FamilyTaxonomy& taxonomy, const RLConfig& config);

}  // namespace talentrec
