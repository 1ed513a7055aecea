#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "talentrec/commands.hpp"
#include "talentrec/config.hpp"
#include "talentrec/errors.hpp"

namespace {

using namespace talentrec;

// Flags shared by every command that runs the pipeline. Stored as strings and
// funneled through apply_config so parsing/validation lives in one place.
struct ConfigFlags {
    std::string config_path;
    std::map<std::string, std::string> overrides;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config_path,
                        "key=value configuration file (also via $TALENTREC_CONFIG)");
        auto kv = [this](const char* key) {
            return [this, key](const std::string& value) { overrides[key] = value; };
        };
        cmd->add_option_function<std::string>("--seeds", kv("seeds"),
                                              "evaluation seeds, e.g. 100-109 or 100,101");
        cmd->add_option_function<std::string>("--jobs", kv("jobs"), "worker threads (0 = all cores)");
        cmd->add_option_function<std::string>("--objective", kv("validation_objective"),
                                              "validation objective: hr5 | ndcg5 | mrr5");
        cmd->add_option_function<std::string>("--topsis-norm", kv("topsis_norm"),
                                              "criterion normalization: vector | minmax");
        cmd->add_option_function<std::string>("--force-lambda", kv("force_lambda"),
                                              "skip the lambda search, e.g. 0.5,0.4,0.1");
        cmd->add_option_function<std::string>("--force-alpha", kv("force_alpha"),
                                              "skip the alpha search");
        cmd->add_option_function<std::string>("--canonical-seed", kv("canonical_seed"),
                                              "seed used by explain and debug dumps");
    }

    RunConfig build() const {
        RunConfig cfg;
        if (const char* env = std::getenv(kConfigEnvVar); env != nullptr && *env != '\0') {
            apply_config(parse_config_file(env), cfg);
        }
        if (!config_path.empty()) {
            apply_config(parse_config_file(config_path), cfg);
        }
        apply_config(overrides, cfg);
        return cfg;
    }
};

struct PackageFlags {
    PackageOptions options;
    std::string taxonomy, digital, innovation, role_cues;

    void attach(CLI::App* cmd) {
        cmd->add_option("--package", options.package_dir, "frozen benchmark directory")
            ->required();
        cmd->add_option("--taxonomy", taxonomy, "occupation-to-family override file");
        cmd->add_option("--digital-terms", digital, "digital-skill lexicon file");
        cmd->add_option("--innovation-terms", innovation, "innovation lexicon file");
        cmd->add_option("--role-cues", role_cues, "role-cue file (cue<TAB>score)");
    }

    PackageOptions build() const {
        PackageOptions opts = options;
        if (!taxonomy.empty()) opts.taxonomy_path = taxonomy;
        if (!digital.empty()) opts.digital_terms_path = digital;
        if (!innovation.empty()) opts.innovation_terms_path = innovation;
        if (!role_cues.empty()) opts.role_cues_path = role_cues;
        return opts;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"talentrec: career-history benchmark construction, hybrid next-occupation "
                 "recommendation, and repeated chronological evaluation"};
    app.require_subcommand(1);

    int rc = 0;

    // --- prepare ----------------------------------------------------------
    auto prepare_opts = std::make_shared<PrepareOptions>();
    auto prepare_seeds = std::make_shared<std::string>();
    CLI::App* prepare = app.add_subcommand(
        "prepare", "ingest, filter, split, and freeze a benchmark package");
    prepare->add_option("--histories", prepare_opts->histories_path,
                        "user<TAB>occ1,occ2,... input file")
        ->required();
    prepare->add_option("--items", prepare_opts->items_path,
                        "id<TAB>title<TAB>description<TAB>skill1|skill2 input file")
        ->required();
    prepare->add_option("--out", prepare_opts->out_dir, "output package directory")->required();
    prepare->add_option_function<std::string>(
        "--allow-list",
        [prepare_opts](const std::string& p) { prepare_opts->allow_list_path = p; },
        "occupation allow-list file (ids or titles, one per line)");
    prepare->add_option("--min-support", prepare_opts->min_item_user_support,
                        "minimum distinct-user support per occupation");
    prepare->add_option("--min-length", prepare_opts->min_sequence_length,
                        "minimum sequence length per user");
    prepare->add_option("--seeds", *prepare_seeds, "split seeds, e.g. 100-109,20260331");
    prepare->add_option("--source", prepare_opts->source, "source label stored in the metadata");
    prepare->callback([&rc, prepare_opts, prepare_seeds] {
        if (!prepare_seeds->empty()) prepare_opts->seeds = parse_seed_list(*prepare_seeds);
        rc = cmd_prepare(*prepare_opts, std::cout);
    });

    // --- synth ------------------------------------------------------------
    auto synth_opts = std::make_shared<SynthOptions>();
    auto synth_seeds = std::make_shared<std::string>();
    auto synth_kernel = std::make_shared<std::string>("uniform");
    auto synth_kernel_weight = std::make_shared<double>(0.5);
    auto synth_hub = std::make_shared<int>(0);
    auto synth_families = std::make_shared<int>(6);
    CLI::App* synth =
        app.add_subcommand("synth", "generate and freeze a synthetic benchmark package");
    synth->add_option("--preset", synth_opts->preset_name,
                      "regime-jobhop | regime-karrierewege | prevalence-dominated");
    synth->add_option("--out", synth_opts->out_dir, "output package directory")->required();
    synth->add_option_function<int>(
        "--users", [synth_opts](int v) { synth_opts->n_users = v; }, "number of users");
    synth->add_option_function<int>(
        "--items", [synth_opts](int v) { synth_opts->n_items = v; }, "number of occupations");
    synth->add_option_function<double>(
        "--p-stay", [synth_opts](double v) { synth_opts->p_stay = v; },
        "probability the next occupation repeats the current one");
    synth->add_option_function<int>(
        "--min-length", [synth_opts](int v) { synth_opts->min_length = v; },
        "minimum sequence length (>= 3)");
    synth->add_option_function<int>(
        "--max-length", [synth_opts](int v) { synth_opts->max_length = v; },
        "maximum sequence length");
    synth->add_option_function<double>(
        "--richness", [synth_opts](double v) { synth_opts->text_richness = v; },
        "text richness in [0, 1]; 0 = empty descriptions and skills");
    synth->add_option_function<std::uint64_t>(
        "--seed", [synth_opts](std::uint64_t v) { synth_opts->seed = v; },
        "generator seed");
    synth->add_flag_function(
        "--scramble-taxonomy",
        [synth_opts](std::int64_t count) {
            if (count > 0) synth_opts->scramble_taxonomy = true;
        },
        "assign titles so the title taxonomy cuts across the latent walk families");
    synth->add_option("--families", *synth_families, "number of families (custom runs, <= 6)");
    synth->add_option("--kernel", *synth_kernel,
                      "family hop kernel for custom runs: uniform | cyclic | hub");
    synth->add_option("--kernel-weight", *synth_kernel_weight,
                      "forward/hub weight for cyclic/hub kernels");
    synth->add_option("--hub-family", *synth_hub, "hub family index for the hub kernel");
    synth->add_option("--split-seeds", *synth_seeds, "split seeds, e.g. 100-109,20260331");
    synth->callback([&rc, synth_opts, synth_seeds, synth_kernel, synth_kernel_weight, synth_hub,
                     synth_families] {
        if (!synth_seeds->empty()) synth_opts->seeds = parse_seed_list(*synth_seeds);
        if (synth_opts->preset_name.empty()) {
            SynthConfig& cfg = synth_opts->custom;
            cfg.n_families = *synth_families;
            if (synth_opts->n_users) cfg.n_users = *synth_opts->n_users;
            if (synth_opts->n_items) cfg.n_items = *synth_opts->n_items;
            if (*synth_kernel == "uniform") {
                cfg.family_kernel = uniform_kernel(cfg.n_families);
            } else if (*synth_kernel == "cyclic") {
                cfg.family_kernel = cyclic_kernel(cfg.n_families, *synth_kernel_weight);
            } else if (*synth_kernel == "hub") {
                cfg.family_kernel = hub_kernel(cfg.n_families, *synth_hub, *synth_kernel_weight);
            } else {
                throw ValidationError("unknown kernel kind: " + *synth_kernel);
            }
        }
        rc = cmd_synth(*synth_opts, std::cout);
    });

    // --- evaluate / ablate ------------------------------------------------
    auto make_eval_command = [&app, &rc](const std::string& name, const std::string& help,
                                         bool ablation) {
        auto opts = std::make_shared<EvaluateOptions>();
        auto config_flags = std::make_shared<ConfigFlags>();
        auto package_flags = std::make_shared<PackageFlags>();
        auto dump_dir = std::make_shared<std::string>();
        CLI::App* cmd = app.add_subcommand(name, help);
        package_flags->attach(cmd);
        cmd->add_option("--out", opts->out_dir, "report output directory")->required();
        cmd->add_option("--models", opts->models,
                        "comma list of models (popularity, repeat_last, markov, transition_cf, "
                        "nmf, svd, topsis, rl_bandit, cf_topsis, rl_topsis, full)");
        config_flags->attach(cmd);
        cmd->add_option("--dump-training-stats", *dump_dir,
                        "also write canonical-seed training statistics to this directory");
        cmd->callback([&rc, opts, config_flags, package_flags, dump_dir, ablation] {
            opts->config = config_flags->build();
            opts->package = package_flags->build();
            rc = ablation ? cmd_ablate(*opts, std::cout) : cmd_evaluate(*opts, std::cout);
            if (!dump_dir->empty()) {
                StatsDumpOptions dump;
                dump.package = opts->package;
                dump.out_dir = *dump_dir;
                dump.config = opts->config;
                rc = std::max(rc, cmd_dump_statistics(dump, std::cout));
            }
        });
        return cmd;
    };
    make_eval_command("evaluate",
                      "repeated chronological evaluation of the selected models", false);
    make_eval_command("ablate", "repeated evaluation over the full model suite", true);

    // --- sensitivity ------------------------------------------------------
    {
        auto opts = std::make_shared<SensitivityOptions>();
        auto config_flags = std::make_shared<ConfigFlags>();
        auto package_flags = std::make_shared<PackageFlags>();
        CLI::App* cmd = app.add_subcommand(
            "sensitivity", "leave-one-proxy-out sweep of the full hybrid");
        package_flags->attach(cmd);
        cmd->add_option("--out", opts->out_dir, "report output directory")->required();
        config_flags->attach(cmd);
        cmd->callback([&rc, opts, config_flags, package_flags] {
            opts->config = config_flags->build();
            opts->package = package_flags->build();
            rc = cmd_sensitivity(*opts, std::cout);
        });
    }

    // --- explain ----------------------------------------------------------
    {
        auto opts = std::make_shared<ExplainOptions>();
        auto config_flags = std::make_shared<ConfigFlags>();
        auto package_flags = std::make_shared<PackageFlags>();
        auto seed = std::make_shared<std::int64_t>(-1);
        auto out_path = std::make_shared<std::string>();
        CLI::App* cmd = app.add_subcommand(
            "explain", "per-user report: branch scores, weights, and target ranks");
        package_flags->attach(cmd);
        cmd->add_option("--user", opts->user_id, "user id")->required();
        cmd->add_option("--seed", *seed, "split seed (default: canonical seed)");
        cmd->add_option("--out", *out_path, "optional output file");
        config_flags->attach(cmd);
        cmd->callback([&rc, opts, config_flags, package_flags, seed, out_path] {
            opts->config = config_flags->build();
            opts->package = package_flags->build();
            if (*seed >= 0) opts->seed = *seed;
            if (!out_path->empty()) opts->out_path = *out_path;
            rc = cmd_explain(*opts, std::cout);
        });
    }

    // --- stats ------------------------------------------------------------
    {
        auto opts = std::make_shared<StatsOptions>();
        auto out_path = std::make_shared<std::string>();
        CLI::App* cmd = app.add_subcommand(
            "stats", "re-run the paired exact tests from a metrics.tsv file");
        cmd->add_option("--metrics", opts->metrics_path, "metrics.tsv from a previous run")
            ->required();
        cmd->add_option("--reference", opts->reference_model,
                        "reference model compared against every other model");
        cmd->add_option("--metric", opts->metric, "metric column (hr5 | ndcg5 | mrr5)");
        cmd->add_option("--out", *out_path, "optional tests.tsv output file");
        cmd->callback([&rc, opts, out_path] {
            if (!out_path->empty()) opts->out_path = *out_path;
            rc = cmd_stats(*opts, std::cout);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
