#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "talentrec/config.hpp"
#include "talentrec/errors.hpp"
#include "talentrec/io.hpp"
#include "test_common.hpp"

using namespace talentrec;
namespace tt = talentrec::testing;

TEST_SUITE("config") {

TEST_CASE("config files parse key=value with comments and whitespace") {
    tt::TempDir dir("config");
    const auto path = dir / "run.cfg";
    write_file(path,
               "# full line comment\n"
               "\n"
               "beta = 0.9   # trailing comment\n"
               "  decay=0.75\n"
               "seeds = 100-102 \n");
    const auto kv = parse_config_file(path);
    REQUIRE(kv.size() == 3);
    CHECK(kv.at("beta") == "0.9");
    CHECK(kv.at("decay") == "0.75");
    CHECK(kv.at("seeds") == "100-102");
}

TEST_CASE("config parse errors carry the file name and line number") {
    tt::TempDir dir("config");
    const auto path = dir / "bad.cfg";

    write_file(path, "beta = 0.9\nnot a pair\n");
    CHECK_THROWS_WITH_AS(parse_config_file(path), doctest::Contains(":2"), ParseError);

    write_file(path, "= 0.5\n");
    CHECK_THROWS_WITH_AS(parse_config_file(path), doctest::Contains("empty key"),
                         ParseError);

    write_file(path, "beta=0.9\nbeta=0.8\n");
    CHECK_THROWS_WITH_AS(parse_config_file(path), doctest::Contains("duplicate"),
                         ParseError);

    CHECK_THROWS_AS(parse_config_file(dir / "missing.cfg"), IoError);
}

TEST_CASE("seed lists accept single values, ranges, and mixtures") {
    CHECK(parse_seed_list("7") == std::vector<std::int64_t>{7});
    CHECK(parse_seed_list("100-104") ==
          std::vector<std::int64_t>{100, 101, 102, 103, 104});
    // Sorted and deduplicated regardless of input order.
    CHECK(parse_seed_list("105,100-102,100") ==
          std::vector<std::int64_t>{100, 101, 102, 105});
    // A leading minus sign is a sign, not a range separator.
    CHECK(parse_seed_list("-3") == std::vector<std::int64_t>{-3});
    CHECK(parse_seed_list("-3--1") == std::vector<std::int64_t>{-3, -2, -1});

    CHECK_THROWS_AS(parse_seed_list("104-100"), ParseError);
    CHECK_THROWS_AS(parse_seed_list("0-20000"), ParseError);
    CHECK_THROWS_AS(parse_seed_list(""), ParseError);
    CHECK_THROWS_AS(parse_seed_list("ten"), ParseError);
}

TEST_CASE("recognized keys land on the right run-config fields") {
    RunConfig cfg;
    apply_config({{"beta", "0.6"},
                  {"gamma", "0.5"},
                  {"decay", "0.9"},
                  {"eta", "0.1"},
                  {"reward_pos", "2.0"},
                  {"reward_neg", "-0.5"},
                  {"negatives_per_positive", "3"},
                  {"passes", "12"},
                  {"omega", "0.4"},
                  {"mix_family", "0.6"},
                  {"mix_pop", "0.4"},
                  {"topsis_norm", "MinMax"},
                  {"alpha_grid", "0.0, 0.5, 1.0"},
                  {"latent_dims", "4,8"},
                  {"nmf_iterations", "75"},
                  {"svd_iterations", "20"},
                  {"seeds", "200-201,205"},
                  {"canonical_seed", "42"},
                  {"validation_objective", "MRR5"},
                  {"jobs", "2"},
                  {"force_lambda", "0.3,0.2,0.5"},
                  {"force_alpha", "0.75"}},
                 cfg);
    CHECK(cfg.cf.beta == 0.6);
    CHECK(cfg.cf.gamma == 0.5);
    CHECK(cfg.decay == 0.9);
    CHECK(cfg.rl.eta == 0.1);
    CHECK(cfg.rl.reward_pos == 2.0);
    CHECK(cfg.rl.reward_neg == -0.5);
    CHECK(cfg.rl.negatives_per_positive == 3);
    CHECK(cfg.rl.passes == 12);
    CHECK(cfg.rl.omega == 0.4);
    CHECK(cfg.rl.mix_family == 0.6);
    CHECK(cfg.rl.mix_pop == 0.4);
    CHECK(cfg.topsis_norm == TopsisNorm::MinMax);
    CHECK(cfg.alpha_grid == std::vector<double>{0.0, 0.5, 1.0});
    CHECK(cfg.latent_dims == std::vector<int>{4, 8});
    CHECK(cfg.nmf_iterations == 75);
    CHECK(cfg.svd_iterations == 20);
    CHECK(cfg.seeds == std::vector<std::int64_t>{200, 201, 205});
    CHECK(cfg.canonical_seed == 42);
    CHECK(cfg.validation_objective == ValidationObjective::Mrr5);
    CHECK(cfg.jobs == 2);
    REQUIRE(cfg.forced_lambda.has_value());
    CHECK(cfg.forced_lambda->cf == 0.3);
    CHECK(cfg.forced_lambda->rl == 0.2);
    CHECK(cfg.forced_lambda->t == 0.5);
    REQUIRE(cfg.forced_alpha.has_value());
    CHECK(*cfg.forced_alpha == 0.75);
}

TEST_CASE("an empty mapping leaves the defaults untouched and valid") {
    RunConfig cfg;
    apply_config({}, cfg);
    CHECK(cfg.cf.beta == 0.85);
    CHECK(cfg.cf.gamma == 0.7);
    CHECK(cfg.decay == 0.8);
    CHECK(cfg.topsis_norm == TopsisNorm::Vector);
    CHECK(cfg.seeds.size() == 10);
    CHECK_FALSE(cfg.forced_lambda.has_value());
    CHECK_FALSE(cfg.forced_alpha.has_value());
}

TEST_CASE("unknown keys and malformed values are parse errors") {
    RunConfig cfg;
    CHECK_THROWS_WITH_AS(apply_config({{"betamax", "0.5"}}, cfg),
                         doctest::Contains("betamax"), ParseError);
    CHECK_THROWS_AS(apply_config({{"beta", "fast"}}, cfg), ParseError);
    CHECK_THROWS_AS(apply_config({{"passes", "3.5"}}, cfg), ParseError);
    CHECK_THROWS_AS(apply_config({{"topsis_norm", "euclid"}}, cfg), ParseError);
    CHECK_THROWS_AS(apply_config({{"validation_objective", "auc"}}, cfg), ParseError);
    CHECK_THROWS_AS(apply_config({{"alpha_grid", " , "}}, cfg), ParseError);
    CHECK_THROWS_AS(apply_config({{"latent_dims", ""}}, cfg), ParseError);
    CHECK_THROWS_AS(apply_config({{"force_lambda", "0.5,0.5"}}, cfg), ParseError);
}

TEST_CASE("out-of-range values are validation errors") {
    auto rejects = [](std::map<std::string, std::string> kv) {
        RunConfig cfg;
        CHECK_THROWS_AS(apply_config(kv, cfg), ValidationError);
    };
    rejects({{"beta", "1.5"}});
    rejects({{"gamma", "-0.1"}});
    rejects({{"decay", "0"}});
    rejects({{"eta", "0"}});
    rejects({{"eta", "1.5"}});
    rejects({{"passes", "0"}});
    rejects({{"negatives_per_positive", "-1"}});
    rejects({{"omega", "1.2"}});
    // The family/popularity mix must stay a partition of unity; moving one
    // side alone breaks the pairing with the untouched default.
    rejects({{"mix_family", "0.8"}});
    rejects({{"alpha_grid", "0.5,1.5"}});
    rejects({{"latent_dims", "0"}});
    rejects({{"nmf_iterations", "0"}});
    rejects({{"svd_iterations", "0"}});
    rejects({{"jobs", "-1"}});
    rejects({{"force_lambda", "0.5,0.2,0.2"}});
    rejects({{"force_lambda", "0.8,0.4,-0.2"}});
    rejects({{"force_alpha", "1.5"}});
}

TEST_CASE("forced lambda tolerates only sub-nanoscale convexity slack") {
    RunConfig cfg;
    apply_config({{"force_lambda", "0.3,0.3,0.4000000005"}}, cfg);  // 5e-10 off
    REQUIRE(cfg.forced_lambda.has_value());
    RunConfig strict;
    CHECK_THROWS_AS(apply_config({{"force_lambda", "0.3,0.3,0.400001"}}, strict),
                    ValidationError);
}

TEST_CASE("the config environment variable name is stable") {
    CHECK(std::string(kConfigEnvVar) == "TALENTREC_CONFIG");
}

}  // TEST_SUITE
