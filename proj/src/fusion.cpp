#include "talentrec/fusion.hpp"

#include "talentrec/errors.hpp"

namespace talentrec {

std::vector<FusionWeights> enumerate_lambda_grid(LambdaGridMode mode) {
    std::vector<FusionWeights> grid;
    auto emit = [&](int cf_tenths, int rl_tenths) {
        if (cf_tenths + rl_tenths > 10) return;
        FusionWeights w;
        w.cf = cf_tenths / 10.0;
        w.rl = rl_tenths / 10.0;
        w.t = (10 - cf_tenths - rl_tenths) / 10.0;
        grid.push_back(w);
    };
    switch (mode) {
        case LambdaGridMode::Full:
            for (int cf = 0; cf <= 7; ++cf) {
                for (int rl = 0; rl <= 5; ++rl) emit(cf, rl);
            }
            break;
        case LambdaGridMode::CfTopsis:
            for (int cf = 0; cf <= 7; ++cf) emit(cf, 0);
            break;
        case LambdaGridMode::RlTopsis:
            for (int rl = 0; rl <= 5; ++rl) emit(0, rl);
            break;
    }
    return grid;
}

Eigen::VectorXd fuse(const Eigen::VectorXd& s_cf, const Eigen::VectorXd& s_rl,
                     const Eigen::VectorXd& s_t, const FusionWeights& w) {
    if (s_cf.size() != s_rl.size() || s_cf.size() != s_t.size()) {
        throw ValidationError("fuse: branch score vectors differ in length");
    }
    return w.cf * s_cf + w.rl * s_rl + w.t * s_t;
}

namespace {

double mean_objective_fused(const Eigen::MatrixXd& cf, const Eigen::MatrixXd& rl,
                            const Eigen::MatrixXd& t, const FusionWeights& w,
                            const std::vector<int>& targets, ValidationObjective objective) {
    double sum = 0.0;
    for (std::size_t u = 0; u < targets.size(); ++u) {
        const Eigen::Index row = static_cast<Eigen::Index>(u);
        const Eigen::VectorXd fused = w.cf * cf.row(row).transpose() +
                                      w.rl * rl.row(row).transpose() +
                                      w.t * t.row(row).transpose();
        sum += objective_of(metrics_at_5(rank_target(fused, targets[u])), objective);
    }
    return sum / static_cast<double>(targets.size());
}

double mean_objective_single(const Eigen::MatrixXd& scores, const std::vector<int>& targets,
                             ValidationObjective objective) {
    double sum = 0.0;
    for (std::size_t u = 0; u < targets.size(); ++u) {
        const int rank = rank_target(scores.row(static_cast<Eigen::Index>(u)).transpose(),
                                     targets[u]);
        sum += objective_of(metrics_at_5(rank), objective);
    }
    return sum / static_cast<double>(targets.size());
}

}  // namespace

SelectionResult select_fusion(const Eigen::MatrixXd& val_cf, const Eigen::MatrixXd& val_rl,
                              const std::vector<Eigen::MatrixXd>& topsis_by_alpha,
                              const std::vector<double>& alpha_grid,
                              const std::vector<int>& val_targets,
                              const std::vector<FusionWeights>& candidates,
                              ValidationObjective objective) {
    if (val_targets.empty()) throw ValidationError("fusion selection: empty validation set");
    if (topsis_by_alpha.size() != alpha_grid.size() || alpha_grid.empty()) {
        throw ValidationError("fusion selection: alpha grid and score matrices disagree");
    }
    if (candidates.empty()) throw ValidationError("fusion selection: empty lambda grid");

    SelectionResult result;

    // Stage 1: alpha against the TOPSIS-only validation ranking. Iterating in
    // ascending order and replacing only on strict improvement keeps the
    // smallest alpha on ties.
    std::size_t best_alpha_idx = 0;
    double best_alpha_metric = -1.0;
    for (std::size_t k = 0; k < alpha_grid.size(); ++k) {
        const double metric = mean_objective_single(topsis_by_alpha[k], val_targets, objective);
        result.trace.push_back({FusionWeights{0.0, 0.0, 1.0}, alpha_grid[k], metric, "alpha"});
        if (metric > best_alpha_metric) {
            best_alpha_metric = metric;
            best_alpha_idx = k;
        }
    }
    result.chosen_alpha = alpha_grid[best_alpha_idx];
    const Eigen::MatrixXd& val_t = topsis_by_alpha[best_alpha_idx];

    // Stage 2: lambda triple at the fixed alpha. Ties prefer larger
    // lambda_cf, then larger lambda_t.
    bool have_best = false;
    FusionWeights best_w;
    double best_metric = -1.0;
    for (const auto& w : candidates) {
        const double metric =
            mean_objective_fused(val_cf, val_rl, val_t, w, val_targets, objective);
        result.trace.push_back({w, result.chosen_alpha, metric, "lambda"});
        const bool better =
            !have_best || metric > best_metric ||
            (metric == best_metric &&
             (w.cf > best_w.cf || (w.cf == best_w.cf && w.t > best_w.t)));
        if (better) {
            have_best = true;
            best_metric = metric;
            best_w = w;
        }
    }
    result.chosen = best_w;
    result.validation_metric = best_metric;
    return result;
}

SelectionResult select_fusion(const Eigen::MatrixXd& val_cf, const Eigen::MatrixXd& val_rl,
                              const std::vector<Eigen::MatrixXd>& topsis_by_alpha,
                              const std::vector<double>& alpha_grid,
                              const std::vector<int>& val_targets, LambdaGridMode mode,
                              ValidationObjective objective) {
    return select_fusion(val_cf, val_rl, topsis_by_alpha, alpha_grid, val_targets,
                         enumerate_lambda_grid(mode), objective);
}

}  // namespace talentrec
