#include "talentrec/engine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "talentrec/errors.hpp"
#include "talentrec/io.hpp"
#include "talentrec/transitions.hpp"

namespace talentrec {

namespace {

const std::vector<std::pair<ModelKind, const char*>>& model_table() {
    static const std::vector<std::pair<ModelKind, const char*>> kTable = {
        {ModelKind::Popularity, "popularity"},
        {ModelKind::RepeatLast, "repeat_last"},
        {ModelKind::Markov, "markov"},
        {ModelKind::TransitionCF, "transition_cf"},
        {ModelKind::NMF, "nmf"},
        {ModelKind::SVD, "svd"},
        {ModelKind::Topsis, "topsis"},
        {ModelKind::RLBandit, "rl_bandit"},
        {ModelKind::CfTopsis, "cf_topsis"},
        {ModelKind::RlTopsis, "rl_topsis"},
        {ModelKind::Full, "full"},
    };
    return kTable;
}

// Run fn(u) for u in [0, n) across `jobs` threads; every index writes only
// its own output slot, so scheduling cannot affect results.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
    if (jobs <= 1 || n < 2 * jobs) {
        for (int u = 0; u < n; ++u) fn(u);
        return;
    }
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            try {
                for (int u = w; u < n; u += jobs) fn(u);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

struct SplitData {
    std::vector<std::vector<int>> train_prefixes;
    std::vector<std::vector<int>> test_contexts;  // [0, test_index): includes validation item
    std::vector<int> val_targets;
    std::vector<int> test_targets;
    int n_users = 0;
};

SplitData make_split_data(const BenchmarkPackage& pkg, const std::vector<SplitSpec>& splits,
                          const ItemIndex& index) {
    SplitData data;
    data.n_users = static_cast<int>(pkg.histories.size());
    data.train_prefixes.resize(pkg.histories.size());
    data.test_contexts.resize(pkg.histories.size());
    data.val_targets.resize(pkg.histories.size());
    data.test_targets.resize(pkg.histories.size());
    for (std::size_t u = 0; u < pkg.histories.size(); ++u) {
        const auto& seq = pkg.histories[u].sequence;
        const SplitSpec& sp = splits[u];
        std::vector<int> dense(seq.size());
        for (std::size_t t = 0; t < seq.size(); ++t) dense[t] = index.at(seq[t]);
        data.train_prefixes[u].assign(dense.begin(), dense.begin() + sp.validation_index);
        data.test_contexts[u].assign(dense.begin(), dense.begin() + sp.test_index);
        data.val_targets[u] = dense[static_cast<std::size_t>(sp.validation_index)];
        data.test_targets[u] = dense[static_cast<std::size_t>(sp.test_index)];
    }
    return data;
}

struct SeedNeeds {
    bool cf = false;
    bool rl = false;
    bool topsis = false;
    bool nmf = false;
    bool svd = false;
};

SeedNeeds needs_for(const std::vector<ModelKind>& models) {
    SeedNeeds needs;
    for (ModelKind m : models) {
        switch (m) {
            case ModelKind::TransitionCF:
            case ModelKind::CfTopsis:
                needs.cf = true;
                break;
            case ModelKind::RLBandit:
            case ModelKind::RlTopsis:
                needs.rl = true;
                break;
            case ModelKind::Full:
                needs.cf = needs.rl = true;
                break;
            case ModelKind::NMF:
                needs.nmf = true;
                break;
            case ModelKind::SVD:
                needs.svd = true;
                break;
            default:
                break;
        }
        if (m == ModelKind::Topsis || m == ModelKind::CfTopsis || m == ModelKind::RlTopsis ||
            m == ModelKind::Full) {
            needs.topsis = true;
        }
    }
    return needs;
}

struct FittedSeed {
    std::int64_t seed = 0;
    SplitData data;
    TransitionModel tm;
    Eigen::MatrixXd q_norm;
    CriterionMatrix crit;
    Eigen::VectorXd w_global;
    std::vector<double> alphas;  // effective alpha grid (forced alpha collapses it)
    Eigen::MatrixXd val_cf, test_cf, val_rl, test_rl;
    std::vector<Eigen::MatrixXd> val_topsis;
    std::vector<std::optional<Eigen::MatrixXd>> test_topsis;  // lazy per alpha
    Eigen::MatrixXd counts_matrix;  // user x item training occurrence counts
    const RunConfig* cfg = nullptr;
    const FamilyTaxonomy* taxonomy = nullptr;

    const Eigen::MatrixXd& test_topsis_at(std::size_t alpha_idx) {
        auto& slot = test_topsis[alpha_idx];
        if (!slot) {
            Eigen::MatrixXd m(data.n_users, tm.n_items);
            const double alpha = alphas[alpha_idx];
            for (int u = 0; u < data.n_users; ++u) {
                const Eigen::VectorXd wu =
                    user_weights(data.test_contexts[static_cast<std::size_t>(u)], crit,
                                 cfg->decay, w_global);
                m.row(u) = topsis_scores(crit, mix_weights(wu, w_global, alpha),
                                         cfg->topsis_norm)
                               .transpose();
            }
            slot = std::move(m);
        }
        return *slot;
    }
};

FittedSeed fit_seed(const BenchmarkPackage& pkg, std::int64_t seed, const SeedNeeds& needs,
                    const RunConfig& cfg, const ItemIndex& index,
                    const FamilyTaxonomy& taxonomy, const LexiconConfig& lexicons,
                    const std::array<bool, kNumCriteria>* active_mask) {
    auto split_it = pkg.splits.find(seed);
    if (split_it == pkg.splits.end()) {
        throw ValidationError("package does not contain splits for seed " +
                              std::to_string(seed));
    }
    FittedSeed fs;
    fs.seed = seed;
    fs.cfg = &cfg;
    fs.taxonomy = &taxonomy;
    fs.data = make_split_data(pkg, split_it->second, index);
    fs.tm = build_transition_model(fs.data.train_prefixes, index.size());

    const int n_users = fs.data.n_users;
    const int n_items = fs.tm.n_items;

    if (needs.cf) {
        fs.val_cf.resize(n_users, n_items);
        fs.test_cf.resize(n_users, n_items);
        parallel_for(n_users, cfg.jobs, [&](int u) {
            fs.val_cf.row(u) =
                score_cf(fs.data.train_prefixes[static_cast<std::size_t>(u)], fs.tm, cfg.cf,
                         cfg.decay)
                    .transpose();
            fs.test_cf.row(u) =
                score_cf(fs.data.test_contexts[static_cast<std::size_t>(u)], fs.tm, cfg.cf,
                         cfg.decay)
                    .transpose();
        });
    }

    if (needs.rl) {
        RLConfig rl_cfg = cfg.rl;
        rl_cfg.seed = static_cast<std::uint64_t>(seed);
        fs.q_norm = normalize_rows(train_bandit(fs.data.train_prefixes, taxonomy, rl_cfg));
        fs.val_rl.resize(n_users, n_items);
        fs.test_rl.resize(n_users, n_items);
        parallel_for(n_users, cfg.jobs, [&](int u) {
            const auto& train = fs.data.train_prefixes[static_cast<std::size_t>(u)];
            const auto& test = fs.data.test_contexts[static_cast<std::size_t>(u)];
            fs.val_rl.row(u) = score_rl(train, fs.q_norm,
                                        family_bias(train, taxonomy, cfg.decay),
                                        fs.tm.popularity, taxonomy, rl_cfg)
                                   .transpose();
            fs.test_rl.row(u) = score_rl(test, fs.q_norm,
                                         family_bias(test, taxonomy, cfg.decay),
                                         fs.tm.popularity, taxonomy, rl_cfg)
                                    .transpose();
        });
    }

    if (needs.topsis) {
        fs.crit = build_criterion_matrix(pkg.items, fs.tm, lexicons);
        if (active_mask) fs.crit.active = *active_mask;
        if (fs.crit.n_active() == 0) {
            throw ValidationError("all criteria deactivated");
        }
        fs.w_global = entropy_weights(fs.crit);
        fs.alphas = cfg.forced_alpha ? std::vector<double>{*cfg.forced_alpha}
                                     : cfg.alpha_grid;
        fs.val_topsis.assign(fs.alphas.size(), Eigen::MatrixXd(n_users, n_items));
        fs.test_topsis.assign(fs.alphas.size(), std::nullopt);
        parallel_for(n_users, cfg.jobs, [&](int u) {
            const Eigen::VectorXd wu =
                user_weights(fs.data.train_prefixes[static_cast<std::size_t>(u)], fs.crit,
                             cfg.decay, fs.w_global);
            for (std::size_t k = 0; k < fs.alphas.size(); ++k) {
                fs.val_topsis[k].row(u) =
                    topsis_scores(fs.crit, mix_weights(wu, fs.w_global, fs.alphas[k]),
                                  cfg.topsis_norm)
                        .transpose();
            }
        });
    }

    if (needs.nmf || needs.svd) {
        fs.counts_matrix = Eigen::MatrixXd::Zero(n_users, n_items);
        for (int u = 0; u < n_users; ++u) {
            for (int item : fs.data.train_prefixes[static_cast<std::size_t>(u)]) {
                fs.counts_matrix(u, item) += 1.0;
            }
        }
    }
    return fs;
}

SeedMetrics evaluate_scores(const std::function<Eigen::VectorXd(int)>& scorer,
                            const std::vector<int>& targets, int jobs) {
    const int n = static_cast<int>(targets.size());
    std::vector<TopKMetrics> per_user(static_cast<std::size_t>(n));
    parallel_for(n, jobs, [&](int u) {
        per_user[static_cast<std::size_t>(u)] =
            metrics_at_5(rank_target(scorer(u), targets[static_cast<std::size_t>(u)]));
    });
    SeedMetrics agg;
    for (const auto& m : per_user) {
        agg.hr += m.hr;
        agg.ndcg += m.ndcg;
        agg.mrr += m.mrr;
        agg.precision += m.precision;
    }
    const double dn = static_cast<double>(n);
    agg.hr /= dn;
    agg.ndcg /= dn;
    agg.mrr /= dn;
    agg.precision /= dn;
    return agg;
}

std::vector<FusionWeights> lambda_candidates(const RunConfig& cfg, LambdaGridMode mode) {
    if (cfg.forced_lambda) {
        const FusionWeights& w = *cfg.forced_lambda;
        if (w.cf < 0.0 || w.rl < 0.0 || w.t < 0.0 ||
            std::fabs(w.cf + w.rl + w.t - 1.0) > 1e-9) {
            throw ValidationError("forced lambda must be non-negative and sum to 1");
        }
        return {w};
    }
    return enumerate_lambda_grid(mode);
}

struct ModelSeedEval {
    SeedMetrics metrics;
    std::optional<SelectionResult> selection;
    std::optional<double> alpha;
    std::optional<int> dim;
};

ModelSeedEval evaluate_factor_model(FittedSeed& fs, FactorModel::Kind kind,
                                    const RunConfig& cfg) {
    const int max_dim = static_cast<int>(
        std::min(fs.counts_matrix.rows(), fs.counts_matrix.cols()));
    const int iterations =
        kind == FactorModel::Kind::NMF ? cfg.nmf_iterations : cfg.svd_iterations;

    std::optional<int> best_dim;
    double best_obj = -1.0;
    Eigen::MatrixXd best_scores;
    for (int d : cfg.latent_dims) {
        if (d < 1 || d > max_dim) continue;  // infeasible on this package size
        const FactorModel model = fit_factor_model(
            fs.counts_matrix, d, kind, static_cast<std::uint64_t>(fs.seed), iterations);
        Eigen::MatrixXd scores(fs.data.n_users, fs.tm.n_items);
        parallel_for(fs.data.n_users, cfg.jobs, [&](int u) {
            scores.row(u) = score_factors(model, u).transpose();
        });
        double obj = 0.0;
        for (int u = 0; u < fs.data.n_users; ++u) {
            const int rank = rank_target(scores.row(u).transpose(),
                                         fs.data.val_targets[static_cast<std::size_t>(u)]);
            obj += objective_of(metrics_at_5(rank), cfg.validation_objective);
        }
        obj /= static_cast<double>(fs.data.n_users);
        if (!best_dim || obj > best_obj) {  // ties keep the smaller dimension
            best_dim = d;
            best_obj = obj;
            best_scores = std::move(scores);
        }
    }
    if (!best_dim) {
        throw ValidationError("no feasible latent dimension for this package size");
    }
    ModelSeedEval ev;
    ev.dim = *best_dim;
    ev.metrics = evaluate_scores(
        [&](int u) { return best_scores.row(u).transpose(); }, fs.data.test_targets,
        cfg.jobs);
    return ev;
}

ModelSeedEval evaluate_model_on_seed(ModelKind model, FittedSeed& fs, const RunConfig& cfg) {
    ModelSeedEval ev;
    switch (model) {
        case ModelKind::Popularity: {
            const Eigen::VectorXd s = score_popularity(fs.tm);
            ev.metrics = evaluate_scores([&](int) { return s; }, fs.data.test_targets,
                                         cfg.jobs);
            return ev;
        }
        case ModelKind::RepeatLast: {
            ev.metrics = evaluate_scores(
                [&](int u) {
                    return score_repeat_last(fs.data.test_contexts[static_cast<std::size_t>(u)],
                                             fs.tm);
                },
                fs.data.test_targets, cfg.jobs);
            return ev;
        }
        case ModelKind::Markov: {
            ev.metrics = evaluate_scores(
                [&](int u) {
                    return score_markov(fs.data.test_contexts[static_cast<std::size_t>(u)],
                                        fs.tm);
                },
                fs.data.test_targets, cfg.jobs);
            return ev;
        }
        case ModelKind::TransitionCF: {
            ev.metrics = evaluate_scores(
                [&](int u) { return fs.test_cf.row(u).transpose(); }, fs.data.test_targets,
                cfg.jobs);
            return ev;
        }
        case ModelKind::RLBandit: {
            ev.metrics = evaluate_scores(
                [&](int u) { return fs.test_rl.row(u).transpose(); }, fs.data.test_targets,
                cfg.jobs);
            return ev;
        }
        case ModelKind::NMF:
            return evaluate_factor_model(fs, FactorModel::Kind::NMF, cfg);
        case ModelKind::SVD:
            return evaluate_factor_model(fs, FactorModel::Kind::SVD, cfg);
        case ModelKind::Topsis: {
            // TOPSIS-only still selects alpha on validation (stage 1); the
            // lambda stage is pinned at (0, 0, 1).
            SelectionResult sel = select_fusion(
                Eigen::MatrixXd::Zero(fs.data.n_users, fs.tm.n_items),
                Eigen::MatrixXd::Zero(fs.data.n_users, fs.tm.n_items), fs.val_topsis,
                fs.alphas, fs.data.val_targets,
                std::vector<FusionWeights>{FusionWeights{0.0, 0.0, 1.0}},
                cfg.validation_objective);
            const std::size_t alpha_idx = static_cast<std::size_t>(
                std::find(fs.alphas.begin(), fs.alphas.end(), sel.chosen_alpha) -
                fs.alphas.begin());
            const Eigen::MatrixXd& scores = fs.test_topsis_at(alpha_idx);
            ev.metrics = evaluate_scores(
                [&](int u) { return scores.row(u).transpose(); }, fs.data.test_targets,
                cfg.jobs);
            ev.selection = std::move(sel);
            ev.alpha = ev.selection->chosen_alpha;
            return ev;
        }
        case ModelKind::CfTopsis:
        case ModelKind::RlTopsis:
        case ModelKind::Full: {
            const LambdaGridMode mode = model == ModelKind::CfTopsis ? LambdaGridMode::CfTopsis
                                        : model == ModelKind::RlTopsis
                                            ? LambdaGridMode::RlTopsis
                                            : LambdaGridMode::Full;
            // Pairwise grids never weight the absent branch, so a zero matrix
            // stands in without affecting scores.
            const Eigen::MatrixXd zeros = Eigen::MatrixXd::Zero(fs.data.n_users, fs.tm.n_items);
            const Eigen::MatrixXd& vcf = model == ModelKind::RlTopsis ? zeros : fs.val_cf;
            const Eigen::MatrixXd& vrl = model == ModelKind::CfTopsis ? zeros : fs.val_rl;
            SelectionResult sel =
                select_fusion(vcf, vrl, fs.val_topsis, fs.alphas, fs.data.val_targets,
                              lambda_candidates(cfg, mode), cfg.validation_objective);
            const std::size_t alpha_idx = static_cast<std::size_t>(
                std::find(fs.alphas.begin(), fs.alphas.end(), sel.chosen_alpha) -
                fs.alphas.begin());
            const Eigen::MatrixXd& tt = fs.test_topsis_at(alpha_idx);
            const Eigen::MatrixXd& tcf = model == ModelKind::RlTopsis ? zeros : fs.test_cf;
            const Eigen::MatrixXd& trl = model == ModelKind::CfTopsis ? zeros : fs.test_rl;
            const FusionWeights w = sel.chosen;
            ev.metrics = evaluate_scores(
                [&](int u) {
                    return Eigen::VectorXd(w.cf * tcf.row(u).transpose() +
                                           w.rl * trl.row(u).transpose() +
                                           w.t * tt.row(u).transpose());
                },
                fs.data.test_targets, cfg.jobs);
            ev.selection = std::move(sel);
            ev.alpha = ev.selection->chosen_alpha;
            return ev;
        }
    }
    throw ValidationError("unhandled model kind");
}

}  // namespace

std::string model_name(ModelKind kind) {
    for (const auto& [k, name] : model_table()) {
        if (k == kind) return name;
    }
    throw ValidationError("unhandled model kind");
}

ModelKind model_from_name(const std::string& name) {
    for (const auto& [k, n] : model_table()) {
        if (name == n) return k;
    }
    throw ValidationError("unknown model name: " + name);
}

std::vector<ModelKind> default_models() {
    return {ModelKind::RepeatLast, ModelKind::Markov, ModelKind::TransitionCF,
            ModelKind::CfTopsis, ModelKind::Full};
}

std::vector<ModelKind> all_models() {
    std::vector<ModelKind> models;
    for (const auto& [k, name] : model_table()) models.push_back(k);
    return models;
}

std::vector<ModelKind> parse_model_list(const std::string& csv) {
    std::vector<ModelKind> models;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        const ModelKind kind = model_from_name(token);
        if (std::find(models.begin(), models.end(), kind) == models.end()) {
            models.push_back(kind);
        }
    }
    if (models.empty()) throw ValidationError("empty model list");
    return models;
}

std::vector<double> ModelOutcome::seed_series(const std::string& metric) const {
    std::vector<double> series;
    series.reserve(by_seed.size());
    for (const auto& [seed, m] : by_seed) {
        if (metric == "hr5") {
            series.push_back(m.hr);
        } else if (metric == "ndcg5") {
            series.push_back(m.ndcg);
        } else if (metric == "mrr5") {
            series.push_back(m.mrr);
        } else if (metric == "precision5") {
            series.push_back(m.precision);
        } else {
            throw ValidationError("unknown metric name: " + metric);
        }
    }
    return series;
}

SeedMetrics ModelOutcome::mean_metrics() const {
    SeedMetrics out;
    out.hr = mean(seed_series("hr5"));
    out.ndcg = mean(seed_series("ndcg5"));
    out.mrr = mean(seed_series("mrr5"));
    out.precision = mean(seed_series("precision5"));
    return out;
}

SeedMetrics ModelOutcome::std_metrics() const {
    SeedMetrics out;
    out.hr = population_std(seed_series("hr5"));
    out.ndcg = population_std(seed_series("ndcg5"));
    out.mrr = population_std(seed_series("mrr5"));
    out.precision = population_std(seed_series("precision5"));
    return out;
}

const ModelOutcome* EvaluationRun::find(ModelKind kind) const {
    for (const auto& outcome : outcomes) {
        if (outcome.model == kind) return &outcome;
    }
    return nullptr;
}

EvaluationRun run_repeated_evaluation(const BenchmarkPackage& pkg,
                                      const std::vector<ModelKind>& models,
                                      const RunConfig& config,
                                      const FamilyTaxonomy* taxonomy_override,
                                      const LexiconConfig* lexicon_override,
                                      const std::array<bool, kNumCriteria>* active_mask) {
    if (models.empty()) throw ValidationError("no models requested");
    if (config.seeds.empty()) throw ValidationError("no seeds requested");

    const ItemIndex index = ItemIndex::build(pkg.items);
    const FamilyTaxonomy taxonomy =
        taxonomy_override ? *taxonomy_override : taxonomy_from_rules(pkg.items);
    const LexiconConfig lexicons =
        lexicon_override ? *lexicon_override : LexiconConfig::defaults();
    const SeedNeeds needs = needs_for(models);

    EvaluationRun run;
    run.models = models;
    run.seeds = config.seeds;
    run.outcomes.resize(models.size());
    for (std::size_t m = 0; m < models.size(); ++m) run.outcomes[m].model = models[m];

    for (std::int64_t seed : config.seeds) {
        FittedSeed fs =
            fit_seed(pkg, seed, needs, config, index, taxonomy, lexicons, active_mask);
        if (needs.topsis) run.global_weights_by_seed[seed] = fs.w_global;
        for (std::size_t m = 0; m < models.size(); ++m) {
            ModelSeedEval ev = evaluate_model_on_seed(models[m], fs, config);
            run.outcomes[m].by_seed[seed] = ev.metrics;
            if (ev.selection) run.outcomes[m].selection[seed] = std::move(*ev.selection);
            if (ev.alpha) run.outcomes[m].chosen_alpha[seed] = *ev.alpha;
            if (ev.dim) run.outcomes[m].chosen_dim[seed] = *ev.dim;
        }
    }

    const ModelOutcome* full = run.find(ModelKind::Full);
    if (full) {
        for (ModelKind baseline : {ModelKind::RepeatLast, ModelKind::Markov,
                                   ModelKind::TransitionCF, ModelKind::CfTopsis}) {
            const ModelOutcome* other = run.find(baseline);
            if (!other) continue;
            run.planned_tests.push_back(
                paired_test("full_vs_" + model_name(baseline), full->seed_series("ndcg5"),
                            other->seed_series("ndcg5")));
        }
    }
    return run;
}

SensitivityTable proxy_sensitivity(const BenchmarkPackage& pkg, const RunConfig& config,
                                   const FamilyTaxonomy* taxonomy_override,
                                   const LexiconConfig* lexicon_override) {
    const std::vector<ModelKind> models{ModelKind::Full};
    const EvaluationRun baseline =
        run_repeated_evaluation(pkg, models, config, taxonomy_override, lexicon_override);
    SensitivityTable table;
    table.baseline_mean_ndcg = baseline.find(ModelKind::Full)->mean_metrics().ndcg;

    for (int c = 0; c < kNumCriteria; ++c) {
        std::array<bool, kNumCriteria> mask;
        mask.fill(true);
        mask[static_cast<std::size_t>(c)] = false;
        const EvaluationRun run = run_repeated_evaluation(pkg, models, config,
                                                          taxonomy_override, lexicon_override,
                                                          &mask);
        SensitivityRow row;
        row.criterion = c;
        row.name = criterion_names()[static_cast<std::size_t>(c)];
        row.mean_ndcg = run.find(ModelKind::Full)->mean_metrics().ndcg;
        row.delta = row.mean_ndcg - table.baseline_mean_ndcg;
        std::vector<double> weights;
        for (const auto& [seed, w] : baseline.global_weights_by_seed) {
            weights.push_back(w(c));
        }
        row.mean_global_weight = weights.empty() ? 0.0 : mean(weights);
        table.rows.push_back(std::move(row));
    }
    return table;
}

ExplainReport explain_user(const BenchmarkPackage& pkg, const std::string& user_id,
                           std::int64_t seed, const RunConfig& config,
                           const FamilyTaxonomy* taxonomy_override,
                           const LexiconConfig* lexicon_override) {
    const ItemIndex index = ItemIndex::build(pkg.items);
    const FamilyTaxonomy taxonomy =
        taxonomy_override ? *taxonomy_override : taxonomy_from_rules(pkg.items);
    const LexiconConfig lexicons =
        lexicon_override ? *lexicon_override : LexiconConfig::defaults();

    int user_idx = -1;
    for (std::size_t u = 0; u < pkg.histories.size(); ++u) {
        if (pkg.histories[u].user_id == user_id) {
            user_idx = static_cast<int>(u);
            break;
        }
    }
    if (user_idx < 0) throw ValidationError("unknown user: " + user_id);

    SeedNeeds needs;
    needs.cf = needs.rl = needs.topsis = true;
    FittedSeed fs = fit_seed(pkg, seed, needs, config, index, taxonomy, lexicons, nullptr);

    ExplainReport report;
    report.user_id = user_id;
    report.seed = seed;
    report.split = pkg.splits.at(seed)[static_cast<std::size_t>(user_idx)];
    const int target = fs.data.test_targets[static_cast<std::size_t>(user_idx)];
    report.target_id = pkg.items[static_cast<std::size_t>(target)].occupation_id;
    report.target_title = pkg.items[static_cast<std::size_t>(target)].title;

    SelectionResult sel =
        select_fusion(fs.val_cf, fs.val_rl, fs.val_topsis, fs.alphas, fs.data.val_targets,
                      lambda_candidates(config, LambdaGridMode::Full),
                      config.validation_objective);
    report.lambda = sel.chosen;
    report.alpha = sel.chosen_alpha;
    report.validation_metric = sel.validation_metric;
    const std::size_t alpha_idx = static_cast<std::size_t>(
        std::find(fs.alphas.begin(), fs.alphas.end(), sel.chosen_alpha) - fs.alphas.begin());

    const auto& context = fs.data.test_contexts[static_cast<std::size_t>(user_idx)];
    report.mixed_weights = mix_weights(user_weights(context, fs.crit, config.decay, fs.w_global),
                                       fs.w_global, report.alpha);

    const Eigen::VectorXd s_cf = fs.test_cf.row(user_idx).transpose();
    const Eigen::VectorXd s_rl = fs.test_rl.row(user_idx).transpose();
    const Eigen::VectorXd s_t = fs.test_topsis_at(alpha_idx).row(user_idx).transpose();
    // Min-max the fused column so every displayed column is normalized within
    // the user's candidate universe (ranks are unaffected: the map is
    // monotone).
    const Eigen::VectorXd fused = min_max_normalize(fuse(s_cf, s_rl, s_t, report.lambda));

    // Top-5 by fused score (descending, ascending-id tie-break), plus the
    // held-out target when it falls outside.
    std::vector<int> order(static_cast<std::size_t>(fs.tm.n_items));
    for (int i = 0; i < fs.tm.n_items; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (fused(a) != fused(b)) return fused(a) > fused(b);
        return a < b;
    });
    auto add_candidate = [&](int item) {
        ExplainCandidate c;
        c.occupation_id = pkg.items[static_cast<std::size_t>(item)].occupation_id;
        c.title = pkg.items[static_cast<std::size_t>(item)].title;
        c.cf = s_cf(item);
        c.rl = s_rl(item);
        c.topsis = s_t(item);
        c.fused = fused(item);
        c.is_target = item == target;
        report.candidates.push_back(std::move(c));
    };
    bool target_listed = false;
    for (int k = 0; k < std::min(5, fs.tm.n_items); ++k) {
        add_candidate(order[static_cast<std::size_t>(k)]);
        if (order[static_cast<std::size_t>(k)] == target) target_listed = true;
    }
    if (!target_listed) add_candidate(target);

    // Target rank under every branch, pairwise, and reference model.
    auto record_rank = [&](const std::string& name, const Eigen::VectorXd& scores) {
        report.target_ranks.emplace_back(name, rank_target(scores, target));
    };
    record_rank(model_name(ModelKind::Popularity), score_popularity(fs.tm));
    record_rank(model_name(ModelKind::RepeatLast), score_repeat_last(context, fs.tm));
    record_rank(model_name(ModelKind::Markov), score_markov(context, fs.tm));
    record_rank(model_name(ModelKind::TransitionCF), s_cf);
    record_rank(model_name(ModelKind::RLBandit), s_rl);
    record_rank(model_name(ModelKind::Topsis), s_t);
    for (ModelKind pairwise : {ModelKind::CfTopsis, ModelKind::RlTopsis}) {
        const LambdaGridMode mode = pairwise == ModelKind::CfTopsis ? LambdaGridMode::CfTopsis
                                                                    : LambdaGridMode::RlTopsis;
        const Eigen::MatrixXd zeros = Eigen::MatrixXd::Zero(fs.data.n_users, fs.tm.n_items);
        const Eigen::MatrixXd& vcf = pairwise == ModelKind::RlTopsis ? zeros : fs.val_cf;
        const Eigen::MatrixXd& vrl = pairwise == ModelKind::CfTopsis ? zeros : fs.val_rl;
        SelectionResult psel =
            select_fusion(vcf, vrl, fs.val_topsis, fs.alphas, fs.data.val_targets,
                          lambda_candidates(config, mode), config.validation_objective);
        record_rank(model_name(pairwise), fuse(s_cf, s_rl, s_t, psel.chosen));
    }
    record_rank(model_name(ModelKind::Full), fused);
    return report;
}

void dump_statistics(const BenchmarkPackage& pkg, const RunConfig& config,
                     const std::string& out_dir,
                     const FamilyTaxonomy* taxonomy_override,
                     const LexiconConfig* lexicon_override) {
    const ItemIndex index = ItemIndex::build(pkg.items);
    const LexiconConfig lexicons =
        lexicon_override ? *lexicon_override : LexiconConfig::defaults();
    (void)taxonomy_override;

    auto split_it = pkg.splits.find(config.canonical_seed);
    if (split_it == pkg.splits.end()) {
        throw ValidationError("package does not contain splits for the canonical seed " +
                              std::to_string(config.canonical_seed));
    }
    const SplitData data = make_split_data(pkg, split_it->second, index);
    const TransitionModel tm = build_transition_model(data.train_prefixes, index.size());
    const CriterionMatrix crit = build_criterion_matrix(pkg.items, tm, lexicons);
    const Eigen::VectorXd w_global = entropy_weights(crit);

    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);

    auto matrix_tsv = [&](const Eigen::MatrixXd& m, const char* fmt) {
        std::ostringstream os;
        os << "occupation_id";
        for (const auto& id : index.ids) os << '\t' << id;
        os << '\n';
        char buf[64];
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            os << index.ids[static_cast<std::size_t>(r)];
            for (Eigen::Index c = 0; c < m.cols(); ++c) {
                std::snprintf(buf, sizeof buf, fmt, m(r, c));
                os << '\t' << buf;
            }
            os << '\n';
        }
        return os.str();
    };
    write_file(dir / "counts.tsv", matrix_tsv(tm.counts, "%.0f"));
    write_file(dir / "probs.tsv", matrix_tsv(tm.probs, "%.10f"));
    write_file(dir / "sims.tsv", matrix_tsv(tm.sims, "%.10f"));

    {
        std::ostringstream os;
        os << "occupation_id\tpopularity\n";
        char buf[64];
        for (Eigen::Index i = 0; i < tm.popularity.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.10f", tm.popularity(i));
            os << index.ids[static_cast<std::size_t>(i)] << '\t' << buf << '\n';
        }
        write_file(dir / "popularity.tsv", os.str());
    }
    {
        std::ostringstream os;
        os << "occupation_id";
        for (const auto& name : criterion_names()) os << '\t' << name;
        os << '\n';
        char buf[64];
        for (Eigen::Index i = 0; i < crit.X.rows(); ++i) {
            os << index.ids[static_cast<std::size_t>(i)];
            for (int c = 0; c < kNumCriteria; ++c) {
                std::snprintf(buf, sizeof buf, "%.10f", crit.X(i, c));
                os << '\t' << buf;
            }
            os << '\n';
        }
        write_file(dir / "criteria.tsv", os.str());
    }
    {
        std::ostringstream os;
        os << "criterion\tglobal_weight\n";
        char buf[64];
        for (int c = 0; c < kNumCriteria; ++c) {
            std::snprintf(buf, sizeof buf, "%.10f", w_global(c));
            os << criterion_names()[static_cast<std::size_t>(c)] << '\t' << buf << '\n';
        }
        write_file(dir / "weights.tsv", os.str());
    }
}

}  // namespace talentrec
