#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "talentrec/commands.hpp"
#include "talentrec/config.hpp"
#include "talentrec/engine.hpp"
#include "talentrec/errors.hpp"
#include "talentrec/evaluation.hpp"
#include "talentrec/reports.hpp"
#include "talentrec/synthgen.hpp"

namespace py = pybind11;
using namespace talentrec;

namespace {

using ConfigDict = std::map<std::string, std::string>;

RunConfig config_from(const ConfigDict& kv) {
    RunConfig cfg;
    apply_config(kv, cfg);
    return cfg;
}

py::dict package_summary(const BenchmarkPackage& pkg) {
    py::dict d;
    d["digest"] = pkg.meta.digest;
    d["source"] = pkg.meta.source;
    d["n_users"] = pkg.meta.counts.n_users;
    d["n_items"] = pkg.meta.counts.n_items;
    d["n_interactions"] = pkg.meta.counts.n_interactions;
    d["seeds"] = pkg.meta.seeds;
    return d;
}

py::dict test_to_dict(const PairedTestResult& t) {
    py::dict d;
    d["comparison"] = t.comparison;
    d["p_value"] = t.p_value;
    d["r_rb"] = t.r_rb;
    d["d_z"] = t.d_z;
    d["n"] = t.n;
    d["n_zero"] = t.n_zero;
    d["zero_mass"] = t.zero_mass;
    d["zero_spread"] = t.zero_spread;
    return d;
}

py::dict run_to_dict(const EvaluationRun& run) {
    py::dict models;
    for (const ModelOutcome& outcome : run.outcomes) {
        py::dict entry;
        py::dict per_seed;
        for (const auto& [seed, m] : outcome.by_seed) {
            py::dict row;
            row["hr5"] = m.hr;
            row["ndcg5"] = m.ndcg;
            row["mrr5"] = m.mrr;
            row["precision5"] = m.precision;
            per_seed[py::cast(seed)] = row;
        }
        entry["by_seed"] = per_seed;
        const SeedMetrics mean = outcome.mean_metrics();
        const SeedMetrics sd = outcome.std_metrics();
        py::dict mean_d;
        mean_d["hr5"] = mean.hr;
        mean_d["ndcg5"] = mean.ndcg;
        mean_d["mrr5"] = mean.mrr;
        py::dict sd_d;
        sd_d["hr5"] = sd.hr;
        sd_d["ndcg5"] = sd.ndcg;
        sd_d["mrr5"] = sd.mrr;
        entry["mean"] = mean_d;
        entry["std"] = sd_d;
        models[py::cast(model_name(outcome.model))] = entry;
    }
    py::list tests;
    for (const PairedTestResult& t : run.planned_tests) tests.append(test_to_dict(t));
    py::dict d;
    d["models"] = models;
    d["tests"] = tests;
    return d;
}

}  // namespace

PYBIND11_MODULE(_talentrec, m) {
    m.doc() = "Career-history benchmark construction, hybrid next-occupation "
              "recommendation, and repeated chronological evaluation.";
    m.attr("__version__") = "0.1.0";

    py::register_exception<ParseError>(m, "TalentrecParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "TalentrecValidationError", PyExc_ValueError);
    py::register_exception<IoError>(m, "TalentrecIoError", PyExc_OSError);

    m.def(
        "prepare",
        [](const std::string& histories, const std::string& items, const std::string& out_dir,
           const std::optional<std::string>& allow_list, int min_support, int min_length,
           const std::string& seeds) {
            PrepareOptions opts;
            opts.histories_path = histories;
            opts.items_path = items;
            opts.out_dir = out_dir;
            if (allow_list) opts.allow_list_path = *allow_list;
            opts.min_item_user_support = min_support;
            opts.min_sequence_length = min_length;
            if (!seeds.empty()) opts.seeds = parse_seed_list(seeds);
            std::ostringstream sink;
            cmd_prepare(opts, sink);
            return package_summary(load_package(out_dir));
        },
        py::arg("histories"), py::arg("items"), py::arg("out_dir"),
        py::arg("allow_list") = std::nullopt, py::arg("min_support") = 25,
        py::arg("min_length") = 3, py::arg("seeds") = "",
        "Ingest, filter, split, and freeze a benchmark package; returns its summary.");

    m.def(
        "synth",
        [](const std::string& preset_name, const std::string& out_dir,
           const std::string& split_seeds, const ConfigDict& overrides) {
            SynthOptions opts;
            opts.preset_name = preset_name;
            opts.out_dir = out_dir;
            if (!split_seeds.empty()) opts.seeds = parse_seed_list(split_seeds);
            for (const auto& [key, value] : overrides) {
                if (key == "n_users") opts.n_users = std::stoi(value);
                else if (key == "n_items") opts.n_items = std::stoi(value);
                else if (key == "p_stay") opts.p_stay = std::stod(value);
                else if (key == "min_length") opts.min_length = std::stoi(value);
                else if (key == "max_length") opts.max_length = std::stoi(value);
                else if (key == "text_richness") opts.text_richness = std::stod(value);
                else if (key == "seed") opts.seed = std::stoull(value);
                else throw ValidationError("unknown synth override '" + key + "'");
            }
            std::ostringstream sink;
            cmd_synth(opts, sink);
            return package_summary(load_package(out_dir));
        },
        py::arg("preset"), py::arg("out_dir"), py::arg("split_seeds") = "",
        py::arg("overrides") = ConfigDict{},
        "Generate and freeze a synthetic benchmark package; returns its summary.");

    m.def("preset_names", &preset_names, "Names of the shipped synthetic presets.");

    m.def(
        "package_info",
        [](const std::string& package_dir) { return package_summary(load_package(package_dir)); },
        py::arg("package_dir"), "Load and verify a frozen package; returns its summary.");

    m.def(
        "evaluate",
        [](const std::string& package_dir, const std::optional<std::string>& out_dir,
           const std::string& models, const ConfigDict& config) {
            const BenchmarkPackage pkg = load_package(package_dir);
            const RunConfig cfg = config_from(config);
            const std::vector<ModelKind> model_list =
                models.empty() ? default_models() : parse_model_list(models);
            EvaluationRun run = run_repeated_evaluation(pkg, model_list, cfg);
            if (out_dir) write_evaluation_reports(run, *out_dir);
            return run_to_dict(run);
        },
        py::arg("package_dir"), py::arg("out_dir") = std::nullopt, py::arg("models") = "",
        py::arg("config") = ConfigDict{},
        "Repeated chronological evaluation; returns per-seed and aggregate metrics.");

    m.def(
        "sensitivity",
        [](const std::string& package_dir, const ConfigDict& config) {
            const BenchmarkPackage pkg = load_package(package_dir);
            SensitivityTable table = proxy_sensitivity(pkg, config_from(config));
            py::list rows;
            for (const SensitivityRow& row : table.rows) {
                py::dict d;
                d["criterion"] = row.name;
                d["mean_ndcg5"] = row.mean_ndcg;
                d["delta"] = row.delta;
                d["mean_entropy_weight"] = row.mean_global_weight;
                rows.append(d);
            }
            py::dict d;
            d["baseline_ndcg5"] = table.baseline_mean_ndcg;
            d["rows"] = rows;
            return d;
        },
        py::arg("package_dir"), py::arg("config") = ConfigDict{},
        "Leave-one-proxy-out sensitivity sweep of the full hybrid.");

    m.def(
        "explain",
        [](const std::string& package_dir, const std::string& user_id,
           const std::optional<std::int64_t>& seed, const ConfigDict& config) {
            const BenchmarkPackage pkg = load_package(package_dir);
            const RunConfig cfg = config_from(config);
            ExplainReport report =
                explain_user(pkg, user_id, seed ? *seed : cfg.canonical_seed, cfg);
            return format_explain_report(report);
        },
        py::arg("package_dir"), py::arg("user_id"), py::arg("seed") = std::nullopt,
        py::arg("config") = ConfigDict{}, "Per-user interpretability report as text.");

    m.def(
        "stats_from_metrics",
        [](const std::string& metrics_path, const std::string& reference,
           const std::string& metric) {
            py::list out;
            for (const PairedTestResult& t :
                 tests_from_metrics_file(metrics_path, reference, metric)) {
                out.append(test_to_dict(t));
            }
            return out;
        },
        py::arg("metrics_path"), py::arg("reference") = "full", py::arg("metric") = "ndcg5",
        "Re-run the paired exact tests from a previously written metrics.tsv.");

    m.def(
        "wilcoxon_exact",
        [](const std::vector<double>& differences) {
            WilcoxonResult r = wilcoxon_exact(differences);
            py::dict d;
            d["p_value"] = r.p_value;
            d["w_plus"] = r.w_plus;
            d["w_minus"] = r.w_minus;
            d["n_nonzero"] = r.n_nonzero;
            d["n_zero"] = r.n_zero;
            d["all_zero"] = r.all_zero;
            return d;
        },
        py::arg("differences"), "Exact two-sided paired Wilcoxon signed-rank test.");

    m.def(
        "metrics_at_5",
        [](int rank) {
            TopKMetrics m5 = metrics_at_5(rank);
            py::dict d;
            d["hr5"] = m5.hr;
            d["ndcg5"] = m5.ndcg;
            d["mrr5"] = m5.mrr;
            d["precision5"] = m5.precision;
            return d;
        },
        py::arg("rank"), "Top-5 metrics for a single relevant item at the given 1-based rank.");

    m.def(
        "rank_target",
        [](const std::vector<double>& scores, int target) {
            Eigen::VectorXd v(static_cast<Eigen::Index>(scores.size()));
            for (std::size_t i = 0; i < scores.size(); ++i) {
                v(static_cast<Eigen::Index>(i)) = scores[i];
            }
            return rank_target(v, target);
        },
        py::arg("scores"), py::arg("target"),
        "1-based rank of the target under descending score, ascending-index ties.");
}
