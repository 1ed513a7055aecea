#include "talentrec/bandit.hpp"

#include "talentrec/cf.hpp"
#include "talentrec/errors.hpp"
#include "talentrec/rng.hpp"
#include "talentrec/transitions.hpp"

namespace talentrec {

double bandit_update(double q, double reward, double eta) {
    return q + eta * (reward - q);
}

Eigen::MatrixXd train_bandit(const std::vector<std::vector<int>>& train_prefixes,
                             const FamilyTaxonomy& taxonomy, const RLConfig& config) {
    bool any_pair = false;
    for (const auto& p : train_prefixes) {
        if (p.size() >= 2) {
            any_pair = true;
            break;
        }
    }
    if (!any_pair) throw ValidationError("bandit training corpus has no transitions");

    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(kNumFamilies, kNumFamilies);
    SplitMix64 rng(mix_seed(config.seed, "bandit-negatives"));
    for (int pass = 0; pass < config.passes; ++pass) {
        for (const auto& prefix : train_prefixes) {
            for (std::size_t t = 0; t + 1 < prefix.size(); ++t) {
                const int fs = taxonomy.family(prefix[t]);
                const int fa = taxonomy.family(prefix[t + 1]);
                q(fs, fa) = bandit_update(q(fs, fa), config.reward_pos, config.eta);
                for (int k = 0; k < config.negatives_per_positive; ++k) {
                    // Uniform over the 5 families != fa.
                    int alt = static_cast<int>(rng.bounded(kNumFamilies - 1));
                    if (alt >= fa) ++alt;
                    q(fs, alt) = bandit_update(q(fs, alt), config.reward_neg, config.eta);
                }
            }
        }
    }
    return q;
}

Eigen::MatrixXd normalize_rows(const Eigen::MatrixXd& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        out.row(r) = min_max_normalize(m.row(r).transpose()).transpose();
    }
    return out;
}

Eigen::VectorXd family_bias(const std::vector<int>& prefix, const FamilyTaxonomy& taxonomy,
                            double decay) {
    if (prefix.empty()) throw ValidationError("family_bias needs a non-empty prefix");
    const Eigen::VectorXd rho = recency_weights(static_cast<int>(prefix.size()), decay);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(kNumFamilies);
    for (std::size_t t = 0; t < prefix.size(); ++t) {
        b(taxonomy.family(prefix[t])) += rho(static_cast<Eigen::Index>(t));
    }
    return min_max_normalize(b);
}

Eigen::VectorXd score_rl(const std::vector<int>& prefix, const Eigen::MatrixXd& q_normalized,
                         const Eigen::VectorXd& bias, const Eigen::VectorXd& popularity,
                         const FamilyTaxonomy& taxonomy, const RLConfig& config) {
    if (prefix.empty()) throw ValidationError("score_rl needs a non-empty prefix");
    const int last_family = taxonomy.family(prefix.back());
    const Eigen::VectorXd g = config.omega * q_normalized.row(last_family).transpose() +
                              (1.0 - config.omega) * bias;
    Eigen::VectorXd s(popularity.size());
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        s(i) = config.mix_family * g(taxonomy.family(static_cast<int>(i))) +
               config.mix_pop * popularity(i);
    }
    return min_max_normalize(s);
}

}  // namespace talentrec
