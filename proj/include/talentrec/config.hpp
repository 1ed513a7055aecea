#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "talentrec/engine.hpp"

namespace talentrec {

// Flat `key=value` configuration file; '#' starts a comment, blank lines are
// ignored. Every constant has a named key so ablations never require code
// edits. Unknown keys are rejected.
std::map<std::string, std::string> parse_config_file(const std::filesystem::path& path);

// Applies recognized keys onto a RunConfig. Keys:
//   beta, gamma, decay, eta, reward_pos, reward_neg, negatives_per_positive,
//   passes, omega, mix_family, mix_pop, topsis_norm (vector|minmax),
//   alpha_grid (comma list), latent_dims (comma list), nmf_iterations,
//   svd_iterations, seeds (comma list and/or a-b ranges), canonical_seed,
//   validation_objective (hr5|ndcg5|mrr5), jobs,
//   force_lambda (cf,rl,t), force_alpha
void apply_config(const std::map<std::string, std::string>& kv, RunConfig& config);

// Environment variable naming a default config file for the CLI.
inline constexpr const char* kConfigEnvVar = "TALENTREC_CONFIG";

std::vector<std::int64_t> parse_seed_list(const std::string& text);

}  // namespace talentrec
