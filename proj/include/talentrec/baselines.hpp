#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "talentrec/transitions.hpp"

namespace talentrec {

// User-independent popularity prior (already min-max normalized).
Eigen::VectorXd score_popularity(const TransitionModel& model);

// Repeated last item scores 1.0; every other item scores 0.5 * popularity, a
// strictly lower popularity-ordered tail.
Eigen::VectorXd score_repeat_last(const std::vector<int>& prefix, const TransitionModel& model);

// Outgoing probability row of the last item, min-max normalized; rows that
// were never observed in training fall back to the popularity ranking.
Eigen::VectorXd score_markov(const std::vector<int>& prefix, const TransitionModel& model);

struct FactorModel {
    enum class Kind { NMF, SVD };
    Kind kind = Kind::NMF;
    int latent_dim = 0;
    Eigen::MatrixXd user_factors;            // |U| x d
    Eigen::MatrixXd item_factors;            // d x |I|
    std::vector<double> objective_history;   // NMF: Frobenius objective per iteration
};

// NMF: multiplicative updates, 200 iterations, seeded non-negative init.
// SVD: orthogonal (subspace) power iteration on A^T A, 50 iterations, top d.
FactorModel fit_factor_model(const Eigen::MatrixXd& train_counts, int d, FactorModel::Kind kind,
                             std::uint64_t seed, int iterations = 0);

// Reconstructed user row, min-max normalized.
Eigen::VectorXd score_factors(const FactorModel& model, int user_row);

}  // namespace talentrec
