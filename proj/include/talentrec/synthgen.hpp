#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "talentrec/benchmark.hpp"

namespace talentrec {

// Deterministic synthetic career-history generator with controllable
// persistence (p_stay) and family hop structure (family_kernel), used to turn
// cross-benchmark regime claims into desk-scale property tests.
struct SynthConfig {
    int n_users = 0;
    int n_items = 0;
    int n_families = 6;
    double p_stay = 0.0;            // P(next occupation == current)
    Eigen::MatrixXd family_kernel;  // n_families x n_families, rows sum to 1
    int min_length = 3;             // >= 3 so every user survives the split rule
    int max_length = 3;
    double text_richness = 1.0;     // scales generated description/skill counts
    // When set, item titles are assigned so the title-derived taxonomy cuts
    // across the latent walk families: the family value table then has no
    // signal to learn even though the walk structure is unchanged.
    bool scramble_taxonomy = false;
    std::uint64_t seed = 0;
    std::string source_label = "synthetic";
};

// Kernel builders. cyclic: `forward_weight` on family (f+1) mod F, remainder
// spread over the other families. hub: `hub_weight` on the hub family from
// every row, remainder spread. uniform: 1/F everywhere.
Eigen::MatrixXd uniform_kernel(int n_families);
Eigen::MatrixXd cyclic_kernel(int n_families, double forward_weight);
Eigen::MatrixXd hub_kernel(int n_families, int hub, double hub_weight);

// Generates items (round-robin families, titles carrying family-consistent
// role cues, text scaled by text_richness) and per-user walks; assembles and
// validates a package with splits for `seeds`. Errors if the generated data
// would not survive the default filters unchanged (infeasible config).
BenchmarkPackage generate(const SynthConfig& config, const std::vector<std::int64_t>& seeds);

// Shipped presets: "regime-jobhop" (low persistence, cyclic families),
// "regime-karrierewege" (high persistence, near-uniform hops), and
// "prevalence-dominated" (graded popularity, zero text) for sensitivity
// studies.
SynthConfig preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace talentrec
