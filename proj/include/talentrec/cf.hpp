#pragma once

#include <Eigen/Dense>
#include <vector>

#include "talentrec/transitions.hpp"

namespace talentrec {

struct CFConfig {
    double beta = 0.85;   // weight of the last-item transition vector
    double gamma = 0.7;   // within-history weight of probability vs similarity rows
};

// Normalized exponential recency weights over T positions; position T (most
// recent) has the largest weight. decay in (0, 1]; decay = 1 gives uniform.
Eigen::VectorXd recency_weights(int T, double decay);

// Transition-aware collaborative score over the full item universe:
//   s = beta * mm(probs[last,:])
//     + (1-beta) * [ gamma * sum_t rho_t * mm(probs[h_t,:])
//                  + (1-gamma) * sum_t rho_t * mm(sims[h_t,:]) ]
// where mm is per-row min-max normalization; the result is min-max normalized
// once more so every branch feeds fusion on a common [0, 1] scale.
Eigen::VectorXd score_cf(const std::vector<int>& prefix, const TransitionModel& model,
                         const CFConfig& config, double decay);

}  // namespace talentrec
