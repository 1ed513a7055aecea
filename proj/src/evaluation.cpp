#include "talentrec/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "talentrec/errors.hpp"

namespace talentrec {

int rank_target(const Eigen::VectorXd& scores, int target) {
    if (target < 0 || target >= scores.size()) {
        throw ValidationError("rank_target: target outside the item universe");
    }
    const double s = scores(target);
    int rank = 1;
    for (Eigen::Index i = 0; i < scores.size(); ++i) {
        if (scores(i) > s || (scores(i) == s && i < target)) ++rank;
    }
    return rank;
}

TopKMetrics metrics_at_5(int rank) {
    TopKMetrics m;
    if (rank >= 1 && rank <= 5) {
        m.hr = 1.0;
        m.ndcg = 1.0 / std::log2(static_cast<double>(rank) + 1.0);
        m.mrr = 1.0 / static_cast<double>(rank);
        m.precision = 1.0 / 5.0;
    }
    return m;
}

double objective_of(const TopKMetrics& m, ValidationObjective objective) {
    switch (objective) {
        case ValidationObjective::Hr5: return m.hr;
        case ValidationObjective::Ndcg5: return m.ndcg;
        case ValidationObjective::Mrr5: return m.mrr;
    }
    return m.ndcg;
}

double mean(const std::vector<double>& values) {
    if (values.empty()) throw ValidationError("mean of empty vector");
    return std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(values.size());
}

double population_std(const std::vector<double>& values) {
    const double mu = mean(values);
    double ss = 0.0;
    for (double v : values) ss += (v - mu) * (v - mu);
    return std::sqrt(ss / static_cast<double>(values.size()));
}

namespace {

struct SignedRanks {
    std::vector<double> ranks;  // ranks of non-zero |differences|, input order
    std::vector<int> signs;
    double w_plus = 0.0;
    double w_minus = 0.0;
};

SignedRanks signed_ranks(const std::vector<double>& differences) {
    SignedRanks out;
    std::vector<double> abs_values;
    for (double d : differences) {
        if (d != 0.0) {
            abs_values.push_back(std::fabs(d));
            out.signs.push_back(d > 0.0 ? 1 : -1);
        }
    }
    const std::size_t n = abs_values.size();
    out.ranks.assign(n, 0.0);
    // Mid-ranks: sort positions by absolute value, average ranks within ties.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return abs_values[a] < abs_values[b]; });
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && abs_values[order[j + 1]] == abs_values[order[i]]) ++j;
        const double mid = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k) out.ranks[order[k]] = mid;
        i = j + 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        (out.signs[k] > 0 ? out.w_plus : out.w_minus) += out.ranks[k];
    }
    return out;
}

}  // namespace

WilcoxonResult wilcoxon_exact(const std::vector<double>& differences) {
    WilcoxonResult res;
    res.n_zero = static_cast<int>(
        std::count(differences.begin(), differences.end(), 0.0));
    const SignedRanks sr = signed_ranks(differences);
    const int n = static_cast<int>(sr.ranks.size());
    res.n_nonzero = n;
    res.w_plus = sr.w_plus;
    res.w_minus = sr.w_minus;
    if (n == 0) {
        res.all_zero = true;
        res.p_value = 1.0;
        return res;
    }
    if (n > 25) {
        throw ValidationError("wilcoxon_exact: exact enumeration limited to n <= 25");
    }

    // Doubling every rank makes mid-ranks integral (ties average two integers),
    // so the null distribution of 2*W+ is a subset-sum table over integers.
    std::vector<long long> units(sr.ranks.size());
    long long total = 0;
    for (std::size_t k = 0; k < sr.ranks.size(); ++k) {
        units[k] = std::llround(2.0 * sr.ranks[k]);
        total += units[k];
    }
    // count[s] = number of sign assignments with 2*W+ = s.
    std::vector<double> count(static_cast<std::size_t>(total) + 1, 0.0);
    count[0] = 1.0;
    for (long long u : units) {
        for (long long s = total; s >= u; --s) {
            count[static_cast<std::size_t>(s)] += count[static_cast<std::size_t>(s - u)];
        }
    }

    const long long observed_plus = std::llround(2.0 * sr.w_plus);
    const long long observed_min = std::min(observed_plus, total - observed_plus);
    double extreme = 0.0;
    for (long long s = 0; s <= total; ++s) {
        if (std::min(s, total - s) <= observed_min) {
            extreme += count[static_cast<std::size_t>(s)];
        }
    }
    res.p_value = extreme / std::ldexp(1.0, n);  // / 2^n, exact for n <= 25
    return res;
}

double rank_biserial(const std::vector<double>& differences) {
    const SignedRanks sr = signed_ranks(differences);
    const double total = sr.w_plus + sr.w_minus;
    if (total == 0.0) {
        throw ValidationError("rank_biserial undefined: all differences are zero");
    }
    return (sr.w_plus - sr.w_minus) / total;
}

double cohens_dz(const std::vector<double>& differences) {
    if (differences.size() < 2) {
        throw ValidationError("cohens_dz needs at least 2 paired differences");
    }
    const double sd = population_std(differences);
    if (sd == 0.0) {
        throw ValidationError("cohens_dz undefined: zero spread in differences");
    }
    return mean(differences) / sd;
}

PairedTestResult paired_test(const std::string& comparison, const std::vector<double>& a,
                             const std::vector<double>& b) {
    if (a.size() != b.size() || a.empty()) {
        throw ValidationError("paired_test needs equal-length non-empty metric vectors");
    }
    std::vector<double> diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];

    PairedTestResult res;
    res.comparison = comparison;
    res.n = static_cast<int>(diff.size());
    const WilcoxonResult w = wilcoxon_exact(diff);
    res.p_value = w.p_value;
    res.n_zero = w.n_zero;
    res.zero_mass = w.all_zero;
    res.r_rb = w.all_zero ? 0.0 : rank_biserial(diff);
    if (population_std(diff) == 0.0) {
        res.zero_spread = true;
        res.d_z = 0.0;
    } else {
        res.d_z = cohens_dz(diff);
    }
    return res;
}

}  // namespace talentrec
