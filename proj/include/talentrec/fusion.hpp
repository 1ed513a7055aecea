#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "talentrec/evaluation.hpp"

namespace talentrec {

struct FusionWeights {
    double cf = 0.0;
    double rl = 0.0;
    double t = 0.0;
};

enum class LambdaGridMode { Full, CfTopsis, RlTopsis };

// Full mode: lambda_cf in {0.0..0.7 step 0.1} x lambda_rl in {0.0..0.5 step
// 0.1}, keeping pairs with cf + rl <= 1 (45 points); cf_topsis forces rl = 0
// (8 points); rl_topsis forces cf = 0 (6 points). lambda_t = 1 - cf - rl.
std::vector<FusionWeights> enumerate_lambda_grid(LambdaGridMode mode);

// Elementwise convex combination of three [0, 1]-normalized branch vectors.
Eigen::VectorXd fuse(const Eigen::VectorXd& s_cf, const Eigen::VectorXd& s_rl,
                     const Eigen::VectorXd& s_t, const FusionWeights& w);

struct GridPoint {
    FusionWeights weights;
    double alpha = 0.0;
    double metric = 0.0;       // mean validation NDCG@5
    std::string stage;         // "alpha" or "lambda"
};

struct SelectionResult {
    FusionWeights chosen;
    double chosen_alpha = 0.0;
    double validation_metric = 0.0;
    std::vector<GridPoint> trace;
};

// Two-stage validation selection. Branch matrices are user x item scores on
// validation contexts; `topsis_by_alpha[k]` corresponds to `alpha_grid[k]`.
// Stage 1 picks alpha maximizing the mean validation objective (NDCG@5 by
// default) of the TOPSIS-only ranking; stage 2, holding alpha fixed, picks
// the grid triple maximizing the fused ranking's objective. Ties prefer
// larger lambda_cf, then larger lambda_t, then smaller alpha.
SelectionResult select_fusion(const Eigen::MatrixXd& val_cf, const Eigen::MatrixXd& val_rl,
                              const std::vector<Eigen::MatrixXd>& topsis_by_alpha,
                              const std::vector<double>& alpha_grid,
                              const std::vector<int>& val_targets, LambdaGridMode mode,
                              ValidationObjective objective = ValidationObjective::Ndcg5);

// Same selection over an explicit candidate list (e.g. a forced single triple).
SelectionResult select_fusion(const Eigen::MatrixXd& val_cf, const Eigen::MatrixXd& val_rl,
                              const std::vector<Eigen::MatrixXd>& topsis_by_alpha,
                              const std::vector<double>& alpha_grid,
                              const std::vector<int>& val_targets,
                              const std::vector<FusionWeights>& candidates,
                              ValidationObjective objective = ValidationObjective::Ndcg5);

}  // namespace talentrec
