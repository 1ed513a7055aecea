#include "talentrec/transitions.hpp"

#include "talentrec/errors.hpp"

namespace talentrec {

Eigen::VectorXd min_max_normalize(const Eigen::VectorXd& v) {
    if (v.size() == 0) return v;
    const double lo = v.minCoeff();
    const double hi = v.maxCoeff();
    if (hi == lo) return Eigen::VectorXd::Zero(v.size());
    return (v.array() - lo) / (hi - lo);
}

TransitionModel build_transition_model(const std::vector<std::vector<int>>& train_prefixes,
                                       int n_items) {
    if (n_items <= 0) throw ValidationError("transition model needs a non-empty item universe");
    bool any_pair = false, any_item = false;
    for (const auto& p : train_prefixes) {
        if (!p.empty()) any_item = true;
        if (p.size() >= 2) any_pair = true;
    }
    if (!any_item) throw ValidationError("empty training corpus");
    (void)any_pair;  // a corpus of singleton prefixes still defines popularity

    TransitionModel m;
    m.n_items = n_items;
    m.counts = Eigen::MatrixXd::Zero(n_items, n_items);
    Eigen::VectorXd occurrences = Eigen::VectorXd::Zero(n_items);
    for (const auto& prefix : train_prefixes) {
        for (std::size_t t = 0; t < prefix.size(); ++t) {
            occurrences(prefix[t]) += 1.0;
            if (t + 1 < prefix.size()) m.counts(prefix[t], prefix[t + 1]) += 1.0;
        }
    }

    m.probs.resize(n_items, n_items);
    m.uniform_fallback.assign(n_items, false);
    for (int j = 0; j < n_items; ++j) {
        const double row_sum = m.counts.row(j).sum();
        if (row_sum > 0.0) {
            m.probs.row(j) = m.counts.row(j) / row_sum;
        } else {
            m.probs.row(j).setConstant(1.0 / n_items);
            m.uniform_fallback[j] = true;
        }
    }

    Eigen::VectorXd norms(n_items);
    for (int j = 0; j < n_items; ++j) norms(j) = m.counts.row(j).norm();
    m.sims = Eigen::MatrixXd::Zero(n_items, n_items);
    for (int j = 0; j < n_items; ++j) {
        if (norms(j) == 0.0) continue;
        for (int i = 0; i < n_items; ++i) {
            if (norms(i) == 0.0) continue;
            m.sims(j, i) = m.counts.row(j).dot(m.counts.row(i)) / (norms(j) * norms(i));
        }
    }

    m.popularity = min_max_normalize(occurrences);
    return m;
}

}  // namespace talentrec
