#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "talentrec/engine.hpp"

namespace talentrec {

// Tab-separated report bodies. Numeric cells use fixed 10-decimal notation so
// identical runs serialize byte-identically; display columns round to the
// 4-decimal presentation used in the headline tables.
std::string format_metrics_tsv(const EvaluationRun& run);
std::string format_summary_tsv(const EvaluationRun& run);
std::string format_tests_tsv(const std::vector<PairedTestResult>& tests);
std::string format_selection_tsv(const EvaluationRun& run);
std::string format_sensitivity_tsv(const SensitivityTable& table);

// "0.4213 ± 0.0093"
std::string format_mean_std(double mean_value, double std_value);

// Fixed-width console table: one row per model, mean ± sd per headline metric.
std::string format_summary_console(const EvaluationRun& run);
std::string format_tests_console(const std::vector<PairedTestResult>& tests);
std::string format_sensitivity_console(const SensitivityTable& table);

// Human-readable per-user report: selected weights, criterion profile, top-5
// candidate table (held-out target marked with an asterisk), and the target's
// rank under every reference model.
std::string format_explain_report(const ExplainReport& report);

// Writes metrics.tsv / summary.tsv / tests.tsv / selection.tsv into out_dir.
void write_evaluation_reports(const EvaluationRun& run, const std::filesystem::path& out_dir);

// Re-derives paired comparisons from a previously written metrics.tsv.
std::vector<PairedTestResult> tests_from_metrics_file(const std::filesystem::path& metrics_path,
                                                      const std::string& reference_model,
                                                      const std::string& metric);

}  // namespace talentrec
