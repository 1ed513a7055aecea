#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace talentrec {

// 1-based rank of the target in descending score order; equal scores break
// ties by ascending item index (= ascending occupation id, since the dense
// index is built over id-sorted items).
int rank_target(const Eigen::VectorXd& scores, int target);

struct TopKMetrics {
    double hr = 0.0;
    double ndcg = 0.0;
    double mrr = 0.0;
    double precision = 0.0;  // tracked internally; = hr / 5 with one relevant item
};

// Single relevant item, cutoff 5: hr = [rank <= 5]; ndcg = 1/log2(rank + 1);
// mrr = 1/rank; all 0 beyond the cutoff.
TopKMetrics metrics_at_5(int rank);

enum class ValidationObjective { Hr5, Ndcg5, Mrr5 };
double objective_of(const TopKMetrics& m, ValidationObjective objective);

double mean(const std::vector<double>& values);
double population_std(const std::vector<double>& values);

struct WilcoxonResult {
    double p_value = 1.0;
    double w_plus = 0.0;     // rank sum of positive differences
    double w_minus = 0.0;    // rank sum of negative differences
    int n_nonzero = 0;
    int n_zero = 0;          // dropped zero differences
    bool all_zero = false;
};

// Exact two-sided paired Wilcoxon signed-rank test: drop zeros, mid-rank ties,
// p = P(min(W+, W-) <= observed min) over all 2^n equiprobable sign
// assignments. Exact enumeration regime: n_nonzero <= 25.
WilcoxonResult wilcoxon_exact(const std::vector<double>& differences);

// (W+ - W-) / (W+ + W-) over non-zero differences; all-zero input is an error
// (callers report 0 with a zero-mass flag instead).
double rank_biserial(const std::vector<double>& differences);

// mean / population standard deviation; zero spread is an error.
double cohens_dz(const std::vector<double>& differences);

struct PairedTestResult {
    std::string comparison;  // e.g. "full_vs_markov"
    double p_value = 1.0;
    double r_rb = 0.0;
    double d_z = 0.0;
    int n = 0;
    int n_zero = 0;
    bool zero_mass = false;    // every difference was zero
    bool zero_spread = false;  // d_z undefined; reported as 0 with this flag
};

// Differences = per-seed metric(a) - metric(b); handles the degenerate flags.
PairedTestResult paired_test(const std::string& comparison, const std::vector<double>& a,
                             const std::vector<double>& b);

}  // namespace talentrec
