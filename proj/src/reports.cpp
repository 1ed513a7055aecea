#include "talentrec/reports.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "talentrec/errors.hpp"
#include "talentrec/io.hpp"
#include "talentrec/topsis.hpp"

namespace talentrec {
namespace {

std::string fixed(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return buf;
}

std::string fixed10(double v) { return fixed(v, 10); }

// Shortest round-trip-exact decimal form, for the full-precision p column.
std::string full_precision(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string pad(const std::string& s, std::size_t width) {
    if (s.size() >= width) return s + " ";
    return s + std::string(width - s.size(), ' ');
}

std::string flags_of(const PairedTestResult& t) {
    std::string flags;
    if (t.zero_mass) flags = "zero_mass";
    if (t.zero_spread) {
        if (!flags.empty()) flags += ";";
        flags += "zero_spread";
    }
    return flags;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            cells.push_back(line.substr(start));
            break;
        }
        cells.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    if (!cells.empty() && !cells.back().empty() && cells.back().back() == '\r') {
        cells.back().pop_back();
    }
    return cells;
}

}  // namespace

std::string format_mean_std(double mean_value, double std_value) {
    return fixed(mean_value, 4) + " ± " + fixed(std_value, 4);
}

std::string format_metrics_tsv(const EvaluationRun& run) {
    std::string out = "model\tseed\thr5\tndcg5\tmrr5\tprecision5\n";
    for (const ModelOutcome& outcome : run.outcomes) {
        for (const auto& [seed, m] : outcome.by_seed) {
            out += model_name(outcome.model);
            out += "\t" + std::to_string(seed);
            out += "\t" + fixed10(m.hr);
            out += "\t" + fixed10(m.ndcg);
            out += "\t" + fixed10(m.mrr);
            out += "\t" + fixed10(m.precision);
            out += "\n";
        }
    }
    return out;
}

std::string format_summary_tsv(const EvaluationRun& run) {
    std::string out = "model\thr5\tndcg5\tmrr5\n";
    for (const ModelOutcome& outcome : run.outcomes) {
        const SeedMetrics mean = outcome.mean_metrics();
        const SeedMetrics sd = outcome.std_metrics();
        out += model_name(outcome.model);
        out += "\t" + format_mean_std(mean.hr, sd.hr);
        out += "\t" + format_mean_std(mean.ndcg, sd.ndcg);
        out += "\t" + format_mean_std(mean.mrr, sd.mrr);
        out += "\n";
    }
    return out;
}

std::string format_tests_tsv(const std::vector<PairedTestResult>& tests) {
    std::string out = "comparison\tp_value\tp_display\tr_rb\td_z\tn\tn_zero\tflags\n";
    for (const PairedTestResult& t : tests) {
        out += t.comparison;
        out += "\t" + full_precision(t.p_value);
        out += "\t" + fixed(t.p_value, 4);
        out += "\t" + fixed10(t.r_rb);
        out += "\t" + fixed10(t.d_z);
        out += "\t" + std::to_string(t.n);
        out += "\t" + std::to_string(t.n_zero);
        out += "\t" + flags_of(t);
        out += "\n";
    }
    return out;
}

std::string format_selection_tsv(const EvaluationRun& run) {
    std::string out =
        "model\tseed\tstage\talpha\tlambda_cf\tlambda_rl\tlambda_t\tvalidation_metric\tchosen\n";
    for (const ModelOutcome& outcome : run.outcomes) {
        for (const auto& [seed, sel] : outcome.selection) {
            for (const GridPoint& point : sel.trace) {
                const bool chosen =
                    point.stage == "lambda"
                        ? (point.weights.cf == sel.chosen.cf && point.weights.rl == sel.chosen.rl &&
                           point.weights.t == sel.chosen.t)
                        : point.alpha == sel.chosen_alpha;
                out += model_name(outcome.model);
                out += "\t" + std::to_string(seed);
                out += "\t" + point.stage;
                out += "\t" + fixed(point.alpha, 2);
                out += "\t" + fixed(point.weights.cf, 1);
                out += "\t" + fixed(point.weights.rl, 1);
                out += "\t" + fixed(point.weights.t, 1);
                out += "\t" + fixed10(point.metric);
                out += chosen ? "\t1" : "\t0";
                out += "\n";
            }
        }
    }
    return out;
}

std::string format_sensitivity_tsv(const SensitivityTable& table) {
    std::string out =
        "criterion\tmean_ndcg5\tbaseline_ndcg5\tdelta\tmean_entropy_weight\tdisplay\n";
    for (const SensitivityRow& row : table.rows) {
        char display[64];
        std::snprintf(display, sizeof display, "%.4f (%+.4f)", row.mean_ndcg, row.delta);
        out += row.name;
        out += "\t" + fixed10(row.mean_ndcg);
        out += "\t" + fixed10(table.baseline_mean_ndcg);
        out += "\t" + fixed10(row.delta);
        out += "\t" + fixed10(row.mean_global_weight);
        out += "\t";
        out += display;
        out += "\n";
    }
    return out;
}

std::string format_summary_console(const EvaluationRun& run) {
    std::string out = pad("model", 15) + pad("HR@5", 18) + pad("NDCG@5", 18) + "MRR@5\n";
    for (const ModelOutcome& outcome : run.outcomes) {
        const SeedMetrics mean = outcome.mean_metrics();
        const SeedMetrics sd = outcome.std_metrics();
        out += pad(model_name(outcome.model), 15);
        out += pad(format_mean_std(mean.hr, sd.hr), 18);
        out += pad(format_mean_std(mean.ndcg, sd.ndcg), 18);
        out += format_mean_std(mean.mrr, sd.mrr);
        out += "\n";
    }
    return out;
}

std::string format_tests_console(const std::vector<PairedTestResult>& tests) {
    if (tests.empty()) return "";
    std::string out = pad("comparison", 26) + pad("p", 10) + pad("r_rb", 9) + pad("d_z", 9) +
                      pad("n", 4) + "flags\n";
    for (const PairedTestResult& t : tests) {
        out += pad(t.comparison, 26);
        out += pad(fixed(t.p_value, 4), 10);
        out += pad(fixed(t.r_rb, 4), 9);
        out += pad(fixed(t.d_z, 4), 9);
        out += pad(std::to_string(t.n), 4);
        out += flags_of(t);
        out += "\n";
    }
    return out;
}

std::string format_sensitivity_console(const SensitivityTable& table) {
    std::string out = "baseline NDCG@5 = " + fixed(table.baseline_mean_ndcg, 4) + "\n";
    out += pad("removed criterion", 24) + pad("NDCG@5 (delta)", 20) + "entropy weight\n";
    for (const SensitivityRow& row : table.rows) {
        char display[64];
        std::snprintf(display, sizeof display, "%.4f (%+.4f)", row.mean_ndcg, row.delta);
        out += pad(row.name, 24);
        out += pad(display, 20);
        out += fixed(row.mean_global_weight, 4);
        out += "\n";
    }
    return out;
}

std::string format_explain_report(const ExplainReport& report) {
    std::ostringstream out;
    out << "user " << report.user_id << "  (seed " << report.seed << ")\n";
    out << "split: training prefix [0, " << report.split.validation_index
        << "), validation index " << report.split.validation_index << ", test index "
        << report.split.test_index << "\n";
    out << "held-out target: " << report.target_id << " (" << report.target_title << ")\n\n";

    char line[160];
    std::snprintf(line, sizeof line,
                  "selected fusion: lambda_cf = %.1f, lambda_rl = %.1f, lambda_t = %.1f, "
                  "alpha = %.2f\n",
                  report.lambda.cf, report.lambda.rl, report.lambda.t, report.alpha);
    out << line;
    out << "validation metric = " << fixed10(report.validation_metric) << "\n\n";

    out << "criterion weights (user-mixed):\n";
    const auto& names = criterion_names();
    for (int j = 0; j < kNumCriteria; ++j) {
        out << "  " << pad(names[static_cast<std::size_t>(j)], 24)
            << fixed10(report.mixed_weights(j)) << "\n";
    }

    out << "\ntop candidates (scores min-max normalized within user):\n";
    out << "  " << pad("candidate", 36) << pad("CF", 8) << pad("RL", 8) << pad("TOPSIS", 8)
        << "Full\n";
    bool target_shown = false;
    for (const ExplainCandidate& c : report.candidates) {
        out << (c.is_target ? "* " : "  ");
        out << pad(c.title, 36) << pad(fixed(c.cf, 3), 8) << pad(fixed(c.rl, 3), 8)
            << pad(fixed(c.topsis, 3), 8) << fixed(c.fused, 3) << "\n";
        target_shown = target_shown || c.is_target;
    }
    if (target_shown) out << "(* held-out target occupation)\n";

    out << "\ntarget rank by model:\n";
    for (const auto& [name, rank] : report.target_ranks) {
        out << "  " << pad(name, 15) << rank << "\n";
    }
    return out.str();
}

void write_evaluation_reports(const EvaluationRun& run, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    write_file(out_dir / "metrics.tsv", format_metrics_tsv(run));
    write_file(out_dir / "summary.tsv", format_summary_tsv(run));
    write_file(out_dir / "tests.tsv", format_tests_tsv(run.planned_tests));
    write_file(out_dir / "selection.tsv", format_selection_tsv(run));
}

std::vector<PairedTestResult> tests_from_metrics_file(const std::filesystem::path& metrics_path,
                                                      const std::string& reference_model,
                                                      const std::string& metric) {
    const std::string content = read_file(metrics_path);
    std::stringstream ss(content);
    std::string line;
    if (!std::getline(ss, line)) {
        throw ParseError(metrics_path.string() + ": empty metrics file");
    }
    const std::vector<std::string> header = split_tabs(line);
    int metric_col = -1;
    int model_col = -1;
    int seed_col = -1;
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (header[j] == metric) metric_col = static_cast<int>(j);
        if (header[j] == "model") model_col = static_cast<int>(j);
        if (header[j] == "seed") seed_col = static_cast<int>(j);
    }
    if (model_col < 0 || seed_col < 0) {
        throw ParseError(metrics_path.string() + ": expected 'model' and 'seed' columns");
    }
    if (metric_col < 0) {
        throw ValidationError(metrics_path.string() + ": no metric column named '" + metric + "'");
    }

    std::vector<std::string> model_order;
    std::map<std::string, std::map<std::int64_t, double>> by_model;
    int line_no = 1;
    while (std::getline(ss, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const std::vector<std::string> cells = split_tabs(line);
        if (static_cast<int>(cells.size()) <= std::max({model_col, seed_col, metric_col})) {
            throw ParseError(metrics_path.string() + ":" + std::to_string(line_no) +
                             ": too few columns");
        }
        const std::string& model = cells[static_cast<std::size_t>(model_col)];
        std::int64_t seed = 0;
        double value = 0.0;
        try {
            seed = std::stoll(cells[static_cast<std::size_t>(seed_col)]);
            value = std::stod(cells[static_cast<std::size_t>(metric_col)]);
        } catch (const std::exception&) {
            throw ParseError(metrics_path.string() + ":" + std::to_string(line_no) +
                             ": malformed numeric cell");
        }
        if (by_model.count(model) == 0) model_order.push_back(model);
        auto [it, inserted] = by_model[model].emplace(seed, value);
        if (!inserted) {
            throw ValidationError(metrics_path.string() + ":" + std::to_string(line_no) +
                                  ": duplicate (model, seed) row");
        }
    }

    auto ref_it = by_model.find(reference_model);
    if (ref_it == by_model.end()) {
        throw ValidationError(metrics_path.string() + ": reference model '" + reference_model +
                              "' not present");
    }
    std::vector<PairedTestResult> tests;
    for (const std::string& other : model_order) {
        if (other == reference_model) continue;
        std::vector<double> a;
        std::vector<double> b;
        for (const auto& [seed, value] : ref_it->second) {
            auto hit = by_model[other].find(seed);
            if (hit == by_model[other].end()) continue;
            a.push_back(value);
            b.push_back(hit->second);
        }
        if (a.empty()) {
            throw ValidationError(metrics_path.string() + ": models '" + reference_model +
                                  "' and '" + other + "' share no seeds");
        }
        tests.push_back(paired_test(reference_model + "_vs_" + other, a, b));
    }
    return tests;
}

}  // namespace talentrec
