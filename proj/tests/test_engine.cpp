#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "talentrec/engine.hpp"
#include "talentrec/errors.hpp"
#include "talentrec/synthgen.hpp"
#include "talentrec/transitions.hpp"
#include "test_common.hpp"

using namespace talentrec;
namespace tt = talentrec::testing;

namespace {

// Small but filter-feasible corpus shared by the engine tests.
const BenchmarkPackage& tiny_package() {
    static const BenchmarkPackage pkg = [] {
        SynthConfig cfg;
        cfg.n_users = 220;
        cfg.n_items = 12;
        cfg.p_stay = 0.3;
        cfg.family_kernel = uniform_kernel(6);
        cfg.min_length = 3;
        cfg.max_length = 4;
        cfg.seed = 515;
        return generate(cfg, {100, 101});
    }();
    return pkg;
}

// Same walk structure with no text, so every content criterion is constant.
const BenchmarkPackage& textless_package() {
    static const BenchmarkPackage pkg = [] {
        SynthConfig cfg;
        cfg.n_users = 220;
        cfg.n_items = 12;
        cfg.p_stay = 0.3;
        cfg.family_kernel = uniform_kernel(6);
        cfg.min_length = 3;
        cfg.max_length = 4;
        cfg.text_richness = 0.0;
        cfg.seed = 515;
        return generate(cfg, {100, 101});
    }();
    return pkg;
}

RunConfig tiny_config() {
    RunConfig cfg;
    cfg.seeds = {100, 101};
    cfg.latent_dims = {2, 3};
    cfg.nmf_iterations = 60;
    cfg.svd_iterations = 30;
    return cfg;
}

bool same_metrics(const SeedMetrics& a, const SeedMetrics& b) {
    return a.hr == b.hr && a.ndcg == b.ndcg && a.mrr == b.mrr &&
           a.precision == b.precision;
}

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("model names round-trip and the model lists are consistent") {
    for (ModelKind kind : all_models()) {
        CHECK(model_from_name(model_name(kind)) == kind);
    }
    CHECK(all_models().size() == 11);
    CHECK(model_name(ModelKind::Full) == "full");
    CHECK(model_name(ModelKind::TransitionCF) == "transition_cf");
    CHECK_THROWS_AS(model_from_name("bogus"), ValidationError);

    const auto defaults = default_models();
    CHECK(defaults == std::vector<ModelKind>{ModelKind::RepeatLast, ModelKind::Markov,
                                             ModelKind::TransitionCF, ModelKind::CfTopsis,
                                             ModelKind::Full});

    const auto parsed = parse_model_list("markov,full,markov,,popularity");
    CHECK(parsed == std::vector<ModelKind>{ModelKind::Markov, ModelKind::Full,
                                           ModelKind::Popularity});
    CHECK_THROWS_AS(parse_model_list(""), ValidationError);
    CHECK_THROWS_AS(parse_model_list("markov,mystery"), ValidationError);
}

TEST_CASE("popularity outcome matches a hand-assembled split-and-score pipeline") {
    const BenchmarkPackage& pkg = tiny_package();
    const RunConfig cfg = tiny_config();
    const EvaluationRun run =
        run_repeated_evaluation(pkg, {ModelKind::Popularity}, cfg);
    const ModelOutcome* outcome = run.find(ModelKind::Popularity);
    REQUIRE(outcome != nullptr);

    const ItemIndex index = ItemIndex::build(pkg.items);
    for (std::int64_t seed : cfg.seeds) {
        const auto& splits = pkg.splits.at(seed);
        std::vector<std::vector<int>> prefixes(pkg.histories.size());
        std::vector<int> targets(pkg.histories.size());
        for (std::size_t u = 0; u < pkg.histories.size(); ++u) {
            const auto& seq = pkg.histories[u].sequence;
            for (int t = 0; t < splits[u].validation_index; ++t) {
                prefixes[u].push_back(index.at(seq[static_cast<std::size_t>(t)]));
            }
            targets[u] = index.at(seq[static_cast<std::size_t>(splits[u].test_index)]);
        }
        const TransitionModel tm = build_transition_model(prefixes, index.size());
        SeedMetrics expected;
        for (std::size_t u = 0; u < targets.size(); ++u) {
            const TopKMetrics m =
                metrics_at_5(rank_target(tm.popularity, targets[u]));
            expected.hr += m.hr;
            expected.ndcg += m.ndcg;
            expected.mrr += m.mrr;
            expected.precision += m.precision;
        }
        const double dn = static_cast<double>(targets.size());
        expected.hr /= dn;
        expected.ndcg /= dn;
        expected.mrr /= dn;
        expected.precision /= dn;
        CHECK(same_metrics(outcome->by_seed.at(seed), expected));
    }
}

TEST_CASE("repeated runs and thread counts leave every metric bit-identical") {
    const BenchmarkPackage& pkg = tiny_package();
    RunConfig cfg = tiny_config();
    const std::vector<ModelKind> models = all_models();

    const EvaluationRun a = run_repeated_evaluation(pkg, models, cfg);
    const EvaluationRun b = run_repeated_evaluation(pkg, models, cfg);
    cfg.jobs = 3;
    const EvaluationRun c = run_repeated_evaluation(pkg, models, cfg);

    REQUIRE(a.outcomes.size() == models.size());
    for (std::size_t m = 0; m < models.size(); ++m) {
        for (std::int64_t seed : cfg.seeds) {
            CHECK(same_metrics(a.outcomes[m].by_seed.at(seed),
                               b.outcomes[m].by_seed.at(seed)));
            CHECK(same_metrics(a.outcomes[m].by_seed.at(seed),
                               c.outcomes[m].by_seed.at(seed)));
        }
        CHECK(a.outcomes[m].chosen_alpha == b.outcomes[m].chosen_alpha);
        CHECK(a.outcomes[m].chosen_dim == b.outcomes[m].chosen_dim);
        CHECK(a.outcomes[m].chosen_alpha == c.outcomes[m].chosen_alpha);
        CHECK(a.outcomes[m].chosen_dim == c.outcomes[m].chosen_dim);
    }
}

TEST_CASE("forcing the fusion onto the history branch reproduces transition-CF") {
    const BenchmarkPackage& pkg = tiny_package();
    RunConfig cfg = tiny_config();
    cfg.forced_lambda = FusionWeights{1.0, 0.0, 0.0};
    const EvaluationRun run = run_repeated_evaluation(
        pkg, {ModelKind::TransitionCF, ModelKind::Full}, cfg);
    const ModelOutcome* cf = run.find(ModelKind::TransitionCF);
    const ModelOutcome* full = run.find(ModelKind::Full);
    REQUIRE(cf != nullptr);
    REQUIRE(full != nullptr);
    for (std::int64_t seed : cfg.seeds) {
        CHECK(same_metrics(cf->by_seed.at(seed), full->by_seed.at(seed)));
        CHECK(full->selection.at(seed).chosen.cf == 1.0);
        CHECK(full->selection.at(seed).chosen.rl == 0.0);
        CHECK(full->selection.at(seed).chosen.t == 0.0);
    }
}

TEST_CASE("forced alpha collapses the mixing search") {
    const BenchmarkPackage& pkg = tiny_package();
    RunConfig cfg = tiny_config();
    cfg.forced_alpha = 0.25;
    const EvaluationRun run =
        run_repeated_evaluation(pkg, {ModelKind::Topsis, ModelKind::Full}, cfg);
    for (const ModelOutcome& outcome : run.outcomes) {
        for (std::int64_t seed : cfg.seeds) {
            CHECK(outcome.chosen_alpha.at(seed) == 0.25);
        }
    }
}

TEST_CASE("invalid forced lambda weights are rejected") {
    const BenchmarkPackage& pkg = tiny_package();
    RunConfig cfg = tiny_config();
    cfg.forced_lambda = FusionWeights{0.6, 0.6, -0.2};
    CHECK_THROWS_AS(run_repeated_evaluation(pkg, {ModelKind::Full}, cfg),
                    ValidationError);
    cfg.forced_lambda = FusionWeights{0.5, 0.2, 0.2};  // sums to 0.9
    CHECK_THROWS_AS(run_repeated_evaluation(pkg, {ModelKind::Full}, cfg),
                    ValidationError);
}

TEST_CASE("degenerate requests are rejected") {
    const BenchmarkPackage& pkg = tiny_package();
    RunConfig cfg = tiny_config();
    CHECK_THROWS_AS(run_repeated_evaluation(pkg, {}, cfg), ValidationError);

    RunConfig no_seeds = tiny_config();
    no_seeds.seeds.clear();
    CHECK_THROWS_AS(run_repeated_evaluation(pkg, {ModelKind::Popularity}, no_seeds),
                    ValidationError);

    RunConfig missing = tiny_config();
    missing.seeds = {100, 999};
    CHECK_THROWS_WITH_AS(run_repeated_evaluation(pkg, {ModelKind::Popularity}, missing),
                         doctest::Contains("999"), ValidationError);
}

TEST_CASE("planned paired comparisons cover the shipped baselines") {
    const BenchmarkPackage& pkg = tiny_package();
    const RunConfig cfg = tiny_config();
    const EvaluationRun run = run_repeated_evaluation(pkg, default_models(), cfg);
    REQUIRE(run.planned_tests.size() == 4);
    std::vector<std::string> names;
    for (const auto& t : run.planned_tests) {
        names.push_back(t.comparison);
        CHECK(t.n == static_cast<int>(cfg.seeds.size()));
    }
    CHECK(names == std::vector<std::string>{"full_vs_repeat_last", "full_vs_markov",
                                            "full_vs_transition_cf",
                                            "full_vs_cf_topsis"});

    // Without the full hybrid in the model set there is nothing to compare.
    const EvaluationRun partial =
        run_repeated_evaluation(pkg, {ModelKind::Markov}, cfg);
    CHECK(partial.planned_tests.empty());
    CHECK(partial.global_weights_by_seed.empty());
}

TEST_CASE("selection metadata is populated exactly where it applies") {
    const BenchmarkPackage& pkg = tiny_package();
    const RunConfig cfg = tiny_config();
    const EvaluationRun run = run_repeated_evaluation(pkg, all_models(), cfg);

    for (const ModelOutcome& outcome : run.outcomes) {
        const bool fusion = outcome.model == ModelKind::Topsis ||
                            outcome.model == ModelKind::CfTopsis ||
                            outcome.model == ModelKind::RlTopsis ||
                            outcome.model == ModelKind::Full;
        const bool factor =
            outcome.model == ModelKind::NMF || outcome.model == ModelKind::SVD;
        CHECK(outcome.by_seed.size() == cfg.seeds.size());
        CHECK(outcome.selection.size() == (fusion ? cfg.seeds.size() : 0));
        CHECK(outcome.chosen_alpha.size() == (fusion ? cfg.seeds.size() : 0));
        CHECK(outcome.chosen_dim.size() == (factor ? cfg.seeds.size() : 0));
        for (const auto& [seed, sel] : outcome.selection) {
            CHECK(sel.chosen.cf + sel.chosen.rl + sel.chosen.t ==
                  doctest::Approx(1.0).epsilon(1e-12));
            CHECK_FALSE(sel.trace.empty());
            const double alpha = outcome.chosen_alpha.at(seed);
            CHECK(std::find(cfg.alpha_grid.begin(), cfg.alpha_grid.end(), alpha) !=
                  cfg.alpha_grid.end());
        }
        for (const auto& [seed, dim] : outcome.chosen_dim) {
            CHECK(std::find(cfg.latent_dims.begin(), cfg.latent_dims.end(), dim) !=
                  cfg.latent_dims.end());
        }
        // Restricted grids pin the absent branch at zero.
        if (outcome.model == ModelKind::CfTopsis) {
            for (const auto& [seed, sel] : outcome.selection) CHECK(sel.chosen.rl == 0.0);
        }
        if (outcome.model == ModelKind::RlTopsis) {
            for (const auto& [seed, sel] : outcome.selection) CHECK(sel.chosen.cf == 0.0);
        }
        if (outcome.model == ModelKind::Topsis) {
            for (const auto& [seed, sel] : outcome.selection) {
                CHECK(sel.chosen.t == 1.0);
            }
        }
    }

    // Entropy weights are recorded per seed and live on the simplex.
    CHECK(run.global_weights_by_seed.size() == cfg.seeds.size());
    for (const auto& [seed, w] : run.global_weights_by_seed) {
        CHECK(w.size() == kNumCriteria);
        CHECK(w.sum() == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(w.minCoeff() >= 0.0);
    }
}

TEST_CASE("seed series and aggregates follow the per-seed table") {
    const BenchmarkPackage& pkg = tiny_package();
    const RunConfig cfg = tiny_config();
    const EvaluationRun run = run_repeated_evaluation(pkg, {ModelKind::Markov}, cfg);
    const ModelOutcome* outcome = run.find(ModelKind::Markov);
    REQUIRE(outcome != nullptr);

    const std::vector<double> ndcg = outcome->seed_series("ndcg5");
    REQUIRE(ndcg.size() == 2);
    CHECK(ndcg[0] == outcome->by_seed.at(100).ndcg);
    CHECK(ndcg[1] == outcome->by_seed.at(101).ndcg);
    CHECK(outcome->mean_metrics().ndcg ==
          doctest::Approx((ndcg[0] + ndcg[1]) / 2.0).epsilon(1e-12));
    const double spread = std::fabs(ndcg[0] - ndcg[1]) / 2.0;
    CHECK(outcome->std_metrics().ndcg == doctest::Approx(spread).epsilon(1e-12));
    CHECK_THROWS_AS(outcome->seed_series("accuracy"), ValidationError);
    CHECK(run.find(ModelKind::Full) == nullptr);
}

TEST_CASE("leave-one-proxy-out reports exact zero deltas for dead criteria") {
    const BenchmarkPackage& pkg = textless_package();
    const RunConfig cfg = tiny_config();
    const SensitivityTable table = proxy_sensitivity(pkg, cfg);

    REQUIRE(table.rows.size() == static_cast<std::size_t>(kNumCriteria));
    for (int c = 0; c < kNumCriteria; ++c) {
        CHECK(table.rows[static_cast<std::size_t>(c)].criterion == c);
        CHECK(table.rows[static_cast<std::size_t>(c)].name ==
              criterion_names()[static_cast<std::size_t>(c)]);
    }
    // With zero text richness, breadth, digital density, and innovation are
    // constant columns: entropy assigns them no weight, and removing a
    // zero-weight proxy cannot move any score.
    for (int c : {1, 2, 3}) {
        const SensitivityRow& row = table.rows[static_cast<std::size_t>(c)];
        CHECK(row.mean_global_weight == 0.0);
        CHECK(row.delta == 0.0);
        CHECK(row.mean_ndcg == table.baseline_mean_ndcg);
    }
}

TEST_CASE("per-user explanation report is internally consistent") {
    const BenchmarkPackage& pkg = tiny_package();
    const RunConfig cfg = tiny_config();
    const std::string user = pkg.histories.front().user_id;
    const ExplainReport report = explain_user(pkg, user, 100, cfg);

    CHECK(report.user_id == user);
    CHECK(report.seed == 100);

    // Target fields match the frozen split row for this user.
    const SplitSpec& split = pkg.splits.at(100).front();
    CHECK(report.split.test_index == split.test_index);
    CHECK(report.split.validation_index == split.validation_index);
    const std::string& target_occ =
        pkg.histories.front().sequence[static_cast<std::size_t>(split.test_index)];
    CHECK(report.target_id == target_occ);

    // Convexity of the fusion weights and the mixed criterion weights.
    CHECK(report.lambda.cf + report.lambda.rl + report.lambda.t ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.mixed_weights.sum() == doctest::Approx(1.0).epsilon(1e-9));

    // Top-5 candidates sorted by fused score, with the target always present.
    REQUIRE(report.candidates.size() >= 5);
    CHECK(report.candidates.size() <= 6);
    for (std::size_t k = 0; k + 1 < 5; ++k) {
        CHECK(report.candidates[k].fused >= report.candidates[k + 1].fused);
    }
    int target_rows = 0;
    for (const auto& c : report.candidates) {
        if (c.is_target) ++target_rows;
        CHECK(c.fused >= 0.0);
        CHECK(c.fused <= 1.0);
    }
    CHECK(target_rows == 1);

    // Every reference model reports a rank within the universe.
    REQUIRE(report.target_ranks.size() == 9);
    std::set<std::string> rank_models;
    for (const auto& [name, rank] : report.target_ranks) {
        rank_models.insert(name);
        CHECK(rank >= 1);
        CHECK(rank <= static_cast<int>(pkg.items.size()));
    }
    CHECK(rank_models.count("full") == 1);
    CHECK(rank_models.count("markov") == 1);
    CHECK(rank_models.count("topsis") == 1);

    CHECK_THROWS_AS(explain_user(pkg, "nobody", 100, cfg), ValidationError);
    CHECK_THROWS_AS(explain_user(pkg, user, 777, cfg), ValidationError);
}

}  // TEST_SUITE
