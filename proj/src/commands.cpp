#include "talentrec/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <type_traits>
#include <utility>

#include "talentrec/errors.hpp"
#include "talentrec/io.hpp"
#include "talentrec/reports.hpp"
#include "talentrec/topsis.hpp"

namespace talentrec {
namespace {

std::string utc_now_iso8601() {
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

std::vector<std::int64_t> default_split_seeds(const RunConfig& config) {
    std::vector<std::int64_t> seeds = config.seeds;
    seeds.push_back(config.canonical_seed);
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    return seeds;
}

class PhaseTimer {
public:
    explicit PhaseTimer(std::ostream& out) : out_(out) {}
    template <typename F>
    auto run(const std::string& phase, F&& body) {
        const auto start = std::chrono::steady_clock::now();
        if constexpr (std::is_void_v<decltype(body())>) {
            body();
            report(phase, start);
        } else {
            auto result = body();
            report(phase, start);
            return result;
        }
    }

private:
    void report(const std::string& phase, std::chrono::steady_clock::time_point start) {
        const auto elapsed = std::chrono::steady_clock::now() - start;
        const double seconds =
            std::chrono::duration_cast<std::chrono::duration<double>>(elapsed).count();
        char line[128];
        std::snprintf(line, sizeof line, "[%s: %.2f s]\n", phase.c_str(), seconds);
        out_ << line;
    }
    std::ostream& out_;
};

struct PackageContext {
    BenchmarkPackage pkg;
    std::optional<FamilyTaxonomy> taxonomy;
    std::optional<LexiconConfig> lexicons;

    const FamilyTaxonomy* taxonomy_ptr() const { return taxonomy ? &*taxonomy : nullptr; }
    const LexiconConfig* lexicon_ptr() const { return lexicons ? &*lexicons : nullptr; }
};

PackageContext load_context(const PackageOptions& options) {
    PackageContext ctx;
    ctx.pkg = load_package(options.package_dir);
    if (options.taxonomy_path) {
        const ItemIndex index = ItemIndex::build(ctx.pkg.items);
        ctx.taxonomy = taxonomy_from_file(*options.taxonomy_path, ctx.pkg.items, index);
    }
    if (options.digital_terms_path || options.innovation_terms_path || options.role_cues_path) {
        LexiconConfig lex = LexiconConfig::defaults();
        if (options.digital_terms_path) {
            lex.digital_terms = load_term_file(*options.digital_terms_path);
        }
        if (options.innovation_terms_path) {
            lex.innovation_terms = load_term_file(*options.innovation_terms_path);
        }
        if (options.role_cues_path) {
            lex.role_cues = load_role_cue_file(*options.role_cues_path);
        }
        ctx.lexicons = std::move(lex);
    }
    return ctx;
}

int run_evaluation_command(const EvaluateOptions& options, const std::vector<ModelKind>& models,
                           std::ostream& out) {
    PhaseTimer timer(out);
    PackageContext ctx =
        timer.run("load", [&] { return load_context(options.package); });
    out << "package " << ctx.pkg.meta.source << ": " << ctx.pkg.meta.counts.n_users
        << " users, " << ctx.pkg.meta.counts.n_items << " occupations, "
        << ctx.pkg.meta.counts.n_interactions << " interactions\n";

    EvaluationRun run = timer.run("evaluate", [&] {
        return run_repeated_evaluation(ctx.pkg, models, options.config, ctx.taxonomy_ptr(),
                                       ctx.lexicon_ptr());
    });
    timer.run("report", [&] { write_evaluation_reports(run, options.out_dir); });

    out << "\n" << format_summary_console(run);
    if (!run.planned_tests.empty()) {
        out << "\n" << format_tests_console(run.planned_tests);
    }
    out << "\nreports written to " << options.out_dir.string() << "\n";
    return 0;
}

}  // namespace

int cmd_prepare(const PrepareOptions& options, std::ostream& out) {
    auto [histories, items] = ingest(options.histories_path, options.items_path);

    FilterConfig filters;
    filters.min_sequence_length = options.min_sequence_length;
    filters.min_item_user_support = options.min_item_user_support;
    if (options.allow_list_path) {
        filters.allow_list = load_allow_list(*options.allow_list_path);
    }

    FilterResult filtered = apply_filters(std::move(histories), std::move(items), filters);
    out << filtered.audit.summary() << "\n";

    std::vector<std::int64_t> seeds =
        options.seeds.empty() ? default_split_seeds(RunConfig{}) : options.seeds;
    BenchmarkPackage pkg =
        assemble_package(std::move(filtered.histories), std::move(filtered.items), seeds,
                         options.source, filter_config_digest(filters), utc_now_iso8601());
    const std::string digest = freeze(pkg, options.out_dir);
    out << "frozen " << pkg.meta.counts.n_users << " users, " << pkg.meta.counts.n_items
        << " occupations, " << pkg.meta.counts.n_interactions << " interactions to "
        << options.out_dir.string() << "\n";
    out << "digest " << digest << "\n";
    return 0;
}

int cmd_synth(const SynthOptions& options, std::ostream& out) {
    SynthConfig cfg = options.preset_name.empty() ? options.custom : preset(options.preset_name);
    if (options.n_users) cfg.n_users = *options.n_users;
    if (options.n_items) cfg.n_items = *options.n_items;
    if (options.p_stay) cfg.p_stay = *options.p_stay;
    if (options.min_length) cfg.min_length = *options.min_length;
    if (options.max_length) cfg.max_length = *options.max_length;
    if (options.text_richness) cfg.text_richness = *options.text_richness;
    if (options.seed) cfg.seed = *options.seed;
    if (options.scramble_taxonomy) cfg.scramble_taxonomy = *options.scramble_taxonomy;

    std::vector<std::int64_t> seeds =
        options.seeds.empty() ? default_split_seeds(RunConfig{}) : options.seeds;
    BenchmarkPackage pkg = generate(cfg, seeds);
    const std::string digest = freeze(pkg, options.out_dir);
    out << "generated " << pkg.meta.counts.n_users << " users, " << pkg.meta.counts.n_items
        << " occupations, " << pkg.meta.counts.n_interactions << " interactions to "
        << options.out_dir.string() << "\n";
    out << "digest " << digest << "\n";
    return 0;
}

int cmd_evaluate(const EvaluateOptions& options, std::ostream& out) {
    const std::vector<ModelKind> models =
        options.models.empty() ? default_models() : parse_model_list(options.models);
    return run_evaluation_command(options, models, out);
}

int cmd_ablate(const EvaluateOptions& options, std::ostream& out) {
    const std::vector<ModelKind> models =
        options.models.empty() ? all_models() : parse_model_list(options.models);
    return run_evaluation_command(options, models, out);
}

int cmd_sensitivity(const SensitivityOptions& options, std::ostream& out) {
    PhaseTimer timer(out);
    PackageContext ctx = timer.run("load", [&] { return load_context(options.package); });
    SensitivityTable table = timer.run("sensitivity", [&] {
        return proxy_sensitivity(ctx.pkg, options.config, ctx.taxonomy_ptr(), ctx.lexicon_ptr());
    });
    std::filesystem::create_directories(options.out_dir);
    write_file(options.out_dir / "sensitivity.tsv", format_sensitivity_tsv(table));
    out << "\n" << format_sensitivity_console(table);
    out << "\nreport written to " << (options.out_dir / "sensitivity.tsv").string() << "\n";
    return 0;
}

int cmd_explain(const ExplainOptions& options, std::ostream& out) {
    PackageContext ctx = load_context(options.package);
    const std::int64_t seed = options.seed ? *options.seed : options.config.canonical_seed;
    ExplainReport report = explain_user(ctx.pkg, options.user_id, seed, options.config,
                                        ctx.taxonomy_ptr(), ctx.lexicon_ptr());
    const std::string text = format_explain_report(report);
    out << text;
    if (options.out_path) {
        write_file(*options.out_path, text);
        out << "\nreport written to " << options.out_path->string() << "\n";
    }
    return 0;
}

int cmd_stats(const StatsOptions& options, std::ostream& out) {
    std::vector<PairedTestResult> tests =
        tests_from_metrics_file(options.metrics_path, options.reference_model, options.metric);
    out << format_tests_console(tests);
    if (options.out_path) {
        write_file(*options.out_path, format_tests_tsv(tests));
        out << "\nreport written to " << options.out_path->string() << "\n";
    }
    return 0;
}

int cmd_dump_statistics(const StatsDumpOptions& options, std::ostream& out) {
    PackageContext ctx = load_context(options.package);
    dump_statistics(ctx.pkg, options.config, options.out_dir.string(), ctx.taxonomy_ptr(),
                    ctx.lexicon_ptr());
    out << "training statistics written to " << options.out_dir.string() << "\n";
    return 0;
}

}  // namespace talentrec
