#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "talentrec/engine.hpp"
#include "talentrec/synthgen.hpp"

namespace talentrec {

// Workflow layer shared by the command-line binary and the integration tests.
// Each command returns the process exit code (0 on success) and reports
// through `out`; input problems surface as ParseError/ValidationError, which
// the binary maps to exit code 2.

struct PrepareOptions {
    std::filesystem::path histories_path;
    std::filesystem::path items_path;
    std::filesystem::path out_dir;
    std::optional<std::filesystem::path> allow_list_path;
    int min_sequence_length = 3;
    int min_item_user_support = 25;
    std::vector<std::int64_t> seeds;  // split seeds; empty = canonical + 100..109
    std::string source = "prepared";
};
int cmd_prepare(const PrepareOptions& options, std::ostream& out);

struct SynthOptions {
    std::string preset_name;  // one of preset_names(); empty = fully custom
    SynthConfig custom;       // used when preset_name is empty
    // Optional overrides applied on top of the preset.
    std::optional<int> n_users;
    std::optional<int> n_items;
    std::optional<double> p_stay;
    std::optional<int> min_length;
    std::optional<int> max_length;
    std::optional<double> text_richness;
    std::optional<std::uint64_t> seed;
    std::optional<bool> scramble_taxonomy;
    std::filesystem::path out_dir;
    std::vector<std::int64_t> seeds;  // split seeds; empty = canonical + 100..109
};
int cmd_synth(const SynthOptions& options, std::ostream& out);

// Shared by evaluate/ablate/sensitivity/explain: where the package lives and
// which lexicon/taxonomy files override the built-in defaults.
struct PackageOptions {
    std::filesystem::path package_dir;
    std::optional<std::filesystem::path> taxonomy_path;
    std::optional<std::filesystem::path> digital_terms_path;
    std::optional<std::filesystem::path> innovation_terms_path;
    std::optional<std::filesystem::path> role_cues_path;
};

struct EvaluateOptions {
    PackageOptions package;
    std::filesystem::path out_dir;
    std::string models;  // comma list; empty = headline comparison set
    RunConfig config;
};
int cmd_evaluate(const EvaluateOptions& options, std::ostream& out);
int cmd_ablate(const EvaluateOptions& options, std::ostream& out);  // full model suite

struct SensitivityOptions {
    PackageOptions package;
    std::filesystem::path out_dir;
    RunConfig config;
};
int cmd_sensitivity(const SensitivityOptions& options, std::ostream& out);

struct ExplainOptions {
    PackageOptions package;
    std::string user_id;
    std::optional<std::int64_t> seed;  // default: canonical seed
    std::optional<std::filesystem::path> out_path;
    RunConfig config;
};
int cmd_explain(const ExplainOptions& options, std::ostream& out);

struct StatsOptions {
    std::filesystem::path metrics_path;
    std::string reference_model = "full";
    std::string metric = "ndcg5";
    std::optional<std::filesystem::path> out_path;
};
int cmd_stats(const StatsOptions& options, std::ostream& out);

struct StatsDumpOptions {
    PackageOptions package;
    std::filesystem::path out_dir;
    RunConfig config;
};
int cmd_dump_statistics(const StatsDumpOptions& options, std::ostream& out);

}  // namespace talentrec
