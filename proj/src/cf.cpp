#include "talentrec/cf.hpp"

#include "talentrec/errors.hpp"

namespace talentrec {

Eigen::VectorXd recency_weights(int T, double decay) {
    if (T < 1) throw ValidationError("recency_weights needs T >= 1");
    if (!(decay > 0.0 && decay <= 1.0)) {
        throw ValidationError("recency decay must lie in (0, 1]");
    }
    Eigen::VectorXd w(T);
    for (int t = 0; t < T; ++t) w(t) = std::pow(decay, T - 1 - t);
    return w / w.sum();
}

Eigen::VectorXd score_cf(const std::vector<int>& prefix, const TransitionModel& model,
                         const CFConfig& config, double decay) {
    if (prefix.empty()) throw ValidationError("score_cf needs a non-empty prefix");
    for (int idx : prefix) {
        if (idx < 0 || idx >= model.n_items) {
            throw ValidationError("score_cf: prefix index out of range");
        }
    }
    const int T = static_cast<int>(prefix.size());
    const Eigen::VectorXd rho = recency_weights(T, decay);

    Eigen::VectorXd history_probs = Eigen::VectorXd::Zero(model.n_items);
    Eigen::VectorXd history_sims = Eigen::VectorXd::Zero(model.n_items);
    for (int t = 0; t < T; ++t) {
        history_probs += rho(t) * min_max_normalize(model.probs.row(prefix[t]));
        history_sims += rho(t) * min_max_normalize(model.sims.row(prefix[t]));
    }
    const Eigen::VectorXd last_probs = min_max_normalize(model.probs.row(prefix.back()));

    const Eigen::VectorXd s = config.beta * last_probs +
                              (1.0 - config.beta) * (config.gamma * history_probs +
                                                     (1.0 - config.gamma) * history_sims);
    return min_max_normalize(s);
}

}  // namespace talentrec
