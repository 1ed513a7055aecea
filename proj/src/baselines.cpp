#include "talentrec/baselines.hpp"

#include <Eigen/QR>

#include "talentrec/errors.hpp"
#include "talentrec/rng.hpp"

namespace talentrec {

Eigen::VectorXd score_popularity(const TransitionModel& model) { return model.popularity; }

Eigen::VectorXd score_repeat_last(const std::vector<int>& prefix,
                                  const TransitionModel& model) {
    if (prefix.empty()) throw ValidationError("score_repeat_last needs a non-empty prefix");
    Eigen::VectorXd s = 0.5 * model.popularity;
    s(prefix.back()) = 1.0;
    return s;
}

Eigen::VectorXd score_markov(const std::vector<int>& prefix, const TransitionModel& model) {
    if (prefix.empty()) throw ValidationError("score_markov needs a non-empty prefix");
    const int last = prefix.back();
    if (model.uniform_fallback[static_cast<std::size_t>(last)]) {
        return model.popularity;  // cold last item: popularity backoff
    }
    return min_max_normalize(model.probs.row(last));
}

FactorModel fit_factor_model(const Eigen::MatrixXd& train_counts, int d, FactorModel::Kind kind,
                             std::uint64_t seed, int iterations) {
    const Eigen::Index n_users = train_counts.rows();
    const Eigen::Index n_items = train_counts.cols();
    if (d < 1 || d > std::min(n_users, n_items)) {
        throw ValidationError("latent dimension must lie in [1, min(|U|, |I|)]");
    }
    if ((train_counts.array() < 0.0).any()) {
        throw ValidationError("factor models need a non-negative count matrix");
    }

    FactorModel model;
    model.kind = kind;
    model.latent_dim = d;

    if (kind == FactorModel::Kind::NMF) {
        const int iters = iterations > 0 ? iterations : 200;
        SplitMix64 rng(mix_seed(seed, "nmf-init"));
        Eigen::MatrixXd w(n_users, d), h(d, n_items);
        for (Eigen::Index i = 0; i < n_users; ++i) {
            for (int k = 0; k < d; ++k) w(i, k) = 0.1 + rng.uniform();
        }
        for (int k = 0; k < d; ++k) {
            for (Eigen::Index j = 0; j < n_items; ++j) h(k, j) = 0.1 + rng.uniform();
        }
        constexpr double kGuard = 1e-12;
        model.objective_history.reserve(static_cast<std::size_t>(iters));
        for (int it = 0; it < iters; ++it) {
            h.array() *= (w.transpose() * train_counts).array() /
                         ((w.transpose() * w * h).array() + kGuard);
            w.array() *= (train_counts * h.transpose()).array() /
                         ((w * h * h.transpose()).array() + kGuard);
            model.objective_history.push_back((train_counts - w * h).norm());
        }
        model.user_factors = std::move(w);
        model.item_factors = std::move(h);
        return model;
    }

    // SVD: orthogonal subspace iteration on the item Gram matrix.
    const int iters = iterations > 0 ? iterations : 50;
    const Eigen::MatrixXd gram = train_counts.transpose() * train_counts;
    SplitMix64 rng(mix_seed(seed, "svd-init"));
    Eigen::MatrixXd v(n_items, d);
    for (Eigen::Index j = 0; j < n_items; ++j) {
        for (int k = 0; k < d; ++k) v(j, k) = rng.uniform() - 0.5;
    }
    for (int it = 0; it < iters; ++it) {
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(gram * v);
        v = qr.householderQ() * Eigen::MatrixXd::Identity(n_items, d);
    }
    model.user_factors = train_counts * v;  // |U| x d coordinates
    model.item_factors = v.transpose();     // d x |I| orthonormal basis
    return model;
}

Eigen::VectorXd score_factors(const FactorModel& model, int user_row) {
    if (user_row < 0 || user_row >= model.user_factors.rows()) {
        throw ValidationError("score_factors: user row out of range");
    }
    return min_max_normalize(
        (model.user_factors.row(user_row) * model.item_factors).transpose());
}

}  // namespace talentrec
