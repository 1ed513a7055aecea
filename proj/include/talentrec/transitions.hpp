#pragma once

#include <Eigen/Dense>
#include <vector>

namespace talentrec {

// Training-prefix statistics shared by branches and baselines.
struct TransitionModel {
    int n_items = 0;
    Eigen::MatrixXd counts;       // counts(j, i) = adjacent pairs j -> i
    Eigen::MatrixXd probs;        // row-normalized counts; uniform fallback rows flagged
    Eigen::MatrixXd sims;         // cosine between count rows; 0 where a row is all-zero
    Eigen::VectorXd popularity;   // min-max normalized occurrence counts
    std::vector<bool> uniform_fallback;  // true where the counts row was all-zero
};

// (v - min) / (max - min); all-zeros when max == min.
Eigen::VectorXd min_max_normalize(const Eigen::VectorXd& v);

// Prefixes are dense item indices drawn from training regions only.
TransitionModel build_transition_model(const std::vector<std::vector<int>>& train_prefixes,
                                       int n_items);

}  // namespace talentrec
