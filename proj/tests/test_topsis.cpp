#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "talentrec/errors.hpp"
#include "talentrec/topsis.hpp"
#include "talentrec/transitions.hpp"
#include "test_common.hpp"

using namespace talentrec;
namespace tt = talentrec::testing;

namespace {

// Plain-loop TOPSIS closeness, written independently of the Eigen pipeline.
std::vector<double> naive_closeness(const CriterionMatrix& cm, const Eigen::VectorXd& w,
                                    TopsisNorm norm) {
    const int m = static_cast<int>(cm.X.rows());
    std::vector<std::vector<double>> v(static_cast<std::size_t>(m),
                                       std::vector<double>(kNumCriteria, 0.0));
    for (int j = 0; j < kNumCriteria; ++j) {
        if (!cm.active[static_cast<std::size_t>(j)]) continue;
        std::vector<double> col(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) col[static_cast<std::size_t>(i)] = cm.X(i, j);
        if (norm == TopsisNorm::Vector) {
            double ss = 0.0;
            for (double x : col) ss += x * x;
            ss = std::sqrt(ss);
            for (double& x : col) x = ss > 0.0 ? x / ss : 0.0;
        } else {
            col = tt::oracle_minmax(col);
        }
        for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            w(j) * col[static_cast<std::size_t>(i)];
    }

    std::vector<double> out(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        double d_pos = 0.0, d_neg = 0.0;
        for (int j = 0; j < kNumCriteria; ++j) {
            if (!cm.active[static_cast<std::size_t>(j)]) continue;
            double hi = v[0][static_cast<std::size_t>(j)], lo = hi;
            for (int r = 1; r < m; ++r) {
                hi = std::max(hi, v[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]);
                lo = std::min(lo, v[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]);
            }
            const double x = v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            d_pos += (x - hi) * (x - hi);
            d_neg += (x - lo) * (x - lo);
        }
        d_pos = std::sqrt(d_pos);
        d_neg = std::sqrt(d_neg);
        out[static_cast<std::size_t>(i)] =
            d_pos + d_neg == 0.0 ? 0.5 : d_neg / (d_pos + d_neg);
    }
    return out;
}

// 3 occupations x 2 active criteria with known decision values in columns 0/1.
CriterionMatrix two_criterion_instance() {
    CriterionMatrix cm;
    cm.X = Eigen::MatrixXd::Zero(3, kNumCriteria);
    cm.X(0, 0) = 4.0; cm.X(0, 1) = 1.0;
    cm.X(1, 0) = 2.0; cm.X(1, 1) = 3.0;
    cm.X(2, 0) = 0.0; cm.X(2, 1) = 2.0;
    cm.active = {true, true, false, false, false, false};
    return cm;
}

Eigen::VectorXd weights_01(double w0, double w1) {
    Eigen::VectorXd w = Eigen::VectorXd::Zero(kNumCriteria);
    w(0) = w0;
    w(1) = w1;
    return w;
}

CriterionMatrix random_matrix(std::mt19937_64& gen, int m, bool random_mask) {
    std::uniform_real_distribution<double> val(0.0, 5.0);
    std::uniform_int_distribution<int> zero(0, 4);
    CriterionMatrix cm;
    cm.X.resize(m, kNumCriteria);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < kNumCriteria; ++j) {
            cm.X(i, j) = zero(gen) == 0 ? 0.0 : val(gen);
        }
    }
    if (random_mask) {
        int n_active = 0;
        for (int j = 0; j < kNumCriteria; ++j) {
            cm.active[static_cast<std::size_t>(j)] = (gen() % 3) != 0;
            n_active += cm.active[static_cast<std::size_t>(j)] ? 1 : 0;
        }
        if (n_active == 0) cm.active[static_cast<std::size_t>(gen() % kNumCriteria)] = true;
    }
    return cm;
}

Eigen::VectorXd random_simplex(std::mt19937_64& gen) {
    std::uniform_real_distribution<double> val(0.05, 1.0);
    Eigen::VectorXd w(kNumCriteria);
    for (int j = 0; j < kNumCriteria; ++j) w(j) = val(gen);
    return w / w.sum();
}

}  // namespace

TEST_SUITE("topsis") {

TEST_CASE("criterion names and indices round-trip") {
    const auto& names = criterion_names();
    REQUIRE(names.size() == kNumCriteria);
    for (int c = 0; c < kNumCriteria; ++c) {
        CHECK(criterion_index(names[static_cast<std::size_t>(c)]) == c);
    }
    CHECK(criterion_index("market_prevalence") == 0);
    CHECK(criterion_index("transition_mobility") == 5);
    CHECK_THROWS_AS(criterion_index("charisma"), ValidationError);
}

TEST_CASE("closeness matches the hand-worked 3x2 instance under vector normalization") {
    const CriterionMatrix cm = two_criterion_instance();
    const Eigen::VectorXd c = topsis_closeness(cm, weights_01(0.6, 0.4), TopsisNorm::Vector);
    // Worked by hand: column norms sqrt(20) and sqrt(14); weighted columns,
    // ideal = column max, anti-ideal = column min, closeness = D- / (D+ + D-).
    REQUIRE(c.size() == 3);
    CHECK(c(0) == doctest::Approx(0.7150980981882591).epsilon(1e-12));
    CHECK(c(1) == doctest::Approx(0.5611417626853672).epsilon(1e-12));
    CHECK(c(2) == doctest::Approx(0.16343625225507508).epsilon(1e-12));
    // The worked ordering: item 0 wins on the heavier criterion.
    CHECK(c(0) > c(1));
    CHECK(c(1) > c(2));
}

TEST_CASE("closeness matches the hand-worked 3x2 instance under min-max normalization") {
    const CriterionMatrix cm = two_criterion_instance();
    const Eigen::VectorXd c = topsis_closeness(cm, weights_01(0.6, 0.4), TopsisNorm::MinMax);
    CHECK(c(0) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(c(1) == doctest::Approx(0.625).epsilon(1e-12));
    CHECK(c(2) == doctest::Approx(0.24025307335204213).epsilon(1e-12));
}

TEST_CASE("closeness agrees with a plain-loop reimplementation on random instances") {
    std::mt19937_64 gen(40413);
    for (int trial = 0; trial < 120; ++trial) {
        const int m = 2 + static_cast<int>(gen() % 9);
        const CriterionMatrix cm = random_matrix(gen, m, true);
        const Eigen::VectorXd w = random_simplex(gen);
        for (TopsisNorm norm : {TopsisNorm::Vector, TopsisNorm::MinMax}) {
            const Eigen::VectorXd got = topsis_closeness(cm, w, norm);
            const std::vector<double> want = naive_closeness(cm, w, norm);
            for (int i = 0; i < m; ++i) {
                CHECK(got(i) == doctest::Approx(want[static_cast<std::size_t>(i)])
                                    .epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("degenerate alternatives sit at closeness 0.5") {
    // A single alternative is its own ideal and anti-ideal.
    std::mt19937_64 gen(1);
    CriterionMatrix one;
    one.X = Eigen::MatrixXd::Constant(1, kNumCriteria, 2.0);
    CHECK(topsis_closeness(one, random_simplex(gen))(0) == 0.5);

    // Identical rows: every alternative coincides with both reference points.
    CriterionMatrix flat;
    flat.X = Eigen::MatrixXd::Constant(4, kNumCriteria, 3.0);
    const Eigen::VectorXd c = topsis_closeness(flat, Eigen::VectorXd::Constant(kNumCriteria, 1.0 / kNumCriteria));
    for (int i = 0; i < 4; ++i) CHECK(c(i) == 0.5);
}

TEST_CASE("scores are the min-max normalization of closeness") {
    std::mt19937_64 gen(991);
    const CriterionMatrix cm = random_matrix(gen, 7, false);
    const Eigen::VectorXd w = random_simplex(gen);
    const Eigen::VectorXd close = topsis_closeness(cm, w);
    const Eigen::VectorXd scores = topsis_scores(cm, w);
    const std::vector<double> want = tt::oracle_minmax(tt::to_std(close));
    for (int i = 0; i < 7; ++i) {
        CHECK(scores(i) == doctest::Approx(want[static_cast<std::size_t>(i)]).epsilon(1e-15));
    }
    CHECK(scores.minCoeff() == 0.0);
    CHECK(scores.maxCoeff() == 1.0);
}

TEST_CASE("per-column positive rescaling leaves scores unchanged to 1e-12") {
    std::mt19937_64 gen(5157);
    std::uniform_real_distribution<double> scale(0.1, 10.0);
    for (int trial = 0; trial < 40; ++trial) {
        const CriterionMatrix cm = random_matrix(gen, 8, true);
        const Eigen::VectorXd w = random_simplex(gen);
        CriterionMatrix scaled = cm;
        for (int j = 0; j < kNumCriteria; ++j) scaled.X.col(j) *= scale(gen);
        for (TopsisNorm norm : {TopsisNorm::Vector, TopsisNorm::MinMax}) {
            const Eigen::VectorXd a = topsis_scores(cm, w, norm);
            const Eigen::VectorXd b = topsis_scores(scaled, w, norm);
            for (int i = 0; i < 8; ++i) CHECK(std::abs(a(i) - b(i)) < 1e-12);
        }
    }
}

TEST_CASE("inactive criteria are ignored regardless of their weight entries") {
    const CriterionMatrix cm = two_criterion_instance();
    Eigen::VectorXd w = weights_01(0.6, 0.4);
    Eigen::VectorXd noisy = w;
    for (int j = 2; j < kNumCriteria; ++j) noisy(j) = 17.0;  // inactive columns
    const Eigen::VectorXd a = topsis_closeness(cm, w);
    const Eigen::VectorXd b = topsis_closeness(cm, noisy);
    for (int i = 0; i < 3; ++i) CHECK(a(i) == b(i));
}

TEST_CASE("entropy weights form a simplex over the active criteria") {
    std::mt19937_64 gen(20805);
    for (int trial = 0; trial < 60; ++trial) {
        const CriterionMatrix cm = random_matrix(gen, 3 + static_cast<int>(gen() % 8), true);
        const Eigen::VectorXd w = entropy_weights(cm);
        double sum = 0.0;
        for (int j = 0; j < kNumCriteria; ++j) {
            if (cm.active[static_cast<std::size_t>(j)]) {
                CHECK(w(j) >= 0.0);
                sum += w(j);
            } else {
                CHECK(w(j) == 0.0);  // inactive entries are exact zeros
            }
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("entropy weights agree with a plain-loop reimplementation") {
    // Same smoothing constant as the library contract: 1e-9 added to every
    // entry of a non-constant column before normalizing.
    std::mt19937_64 gen(33190);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = 2 + static_cast<int>(gen() % 9);
        const CriterionMatrix cm = random_matrix(gen, m, true);
        const Eigen::VectorXd got = entropy_weights(cm);

        std::vector<double> divergence(kNumCriteria, 0.0);
        int n_active = 0;
        for (int j = 0; j < kNumCriteria; ++j) {
            if (!cm.active[static_cast<std::size_t>(j)]) continue;
            ++n_active;
            double lo = cm.X(0, j), hi = cm.X(0, j);
            for (int i = 1; i < m; ++i) {
                lo = std::min(lo, cm.X(i, j));
                hi = std::max(hi, cm.X(i, j));
            }
            if (hi == lo) continue;
            double total = 0.0;
            for (int i = 0; i < m; ++i) total += cm.X(i, j) + 1e-9;
            double entropy = 0.0;
            for (int i = 0; i < m; ++i) {
                const double p = (cm.X(i, j) + 1e-9) / total;
                entropy -= p * std::log(p);
            }
            divergence[static_cast<std::size_t>(j)] =
                std::max(0.0, 1.0 - entropy / std::log(static_cast<double>(m)));
        }
        double total_div = 0.0;
        for (double d : divergence) total_div += d;
        for (int j = 0; j < kNumCriteria; ++j) {
            const double want =
                total_div > 0.0
                    ? divergence[static_cast<std::size_t>(j)] / total_div
                    : (cm.active[static_cast<std::size_t>(j)] ? 1.0 / n_active : 0.0);
            CHECK(got(j) == doctest::Approx(want).epsilon(1e-9));
        }
    }
}

TEST_CASE("an exactly constant column gets entropy weight exactly zero") {
    CriterionMatrix cm;
    cm.X.resize(4, kNumCriteria);
    for (int j = 0; j < kNumCriteria; ++j) {
        for (int i = 0; i < 4; ++i) cm.X(i, j) = static_cast<double>(i + j + 1);
    }
    cm.X.col(2).setConstant(0.7);  // constant, non-zero
    cm.X.col(4).setZero();         // constant at zero
    const Eigen::VectorXd w = entropy_weights(cm);
    CHECK(w(2) == 0.0);
    CHECK(w(4) == 0.0);
    CHECK(w(0) > 0.0);
    CHECK(w.sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("all-constant active columns fall back to uniform weights") {
    CriterionMatrix cm;
    cm.X = Eigen::MatrixXd::Zero(5, kNumCriteria);
    cm.X.col(0).setConstant(1.0);
    cm.X.col(3).setConstant(4.0);
    cm.active = {true, false, false, true, true, false};  // col 4 is all-zero
    const Eigen::VectorXd w = entropy_weights(cm);
    CHECK(w(0) == 1.0 / 3.0);
    CHECK(w(3) == 1.0 / 3.0);
    CHECK(w(4) == 1.0 / 3.0);
    CHECK(w(1) == 0.0);
    CHECK(w(2) == 0.0);
    CHECK(w(5) == 0.0);
}

TEST_CASE("a more concentrated column earns a larger entropy weight") {
    CriterionMatrix cm;
    cm.X.resize(4, kNumCriteria);
    cm.X.setZero();
    cm.X.col(0) << 1.0, 2.0, 3.0, 4.0;  // mild spread
    cm.X.col(1) << 1.0, 1.0, 1.0, 3.0;  // concentrated on one alternative
    cm.active = {true, true, false, false, false, false};
    const Eigen::VectorXd w = entropy_weights(cm);
    CHECK(w(1) > w(0));
    // Closed-form check without smoothing; the 1e-9 smoothing shifts the
    // result by well under the tolerance on a zero-free column.
    const double h0 = -(0.1 * std::log(0.1) + 0.2 * std::log(0.2) + 0.3 * std::log(0.3) +
                        0.4 * std::log(0.4)) / std::log(4.0);
    const double h1 = -(3.0 * (1.0 / 6.0) * std::log(1.0 / 6.0) + 0.5 * std::log(0.5)) /
                      std::log(4.0);
    const double d0 = 1.0 - h0, d1 = 1.0 - h1;
    CHECK(w(0) == doctest::Approx(d0 / (d0 + d1)).epsilon(1e-6));
    CHECK(w(1) == doctest::Approx(d1 / (d0 + d1)).epsilon(1e-6));
}

TEST_CASE("entropy weights require at least one active criterion") {
    CriterionMatrix cm;
    cm.X = Eigen::MatrixXd::Ones(3, kNumCriteria);
    cm.active = {false, false, false, false, false, false};
    CHECK_THROWS_AS(entropy_weights(cm), ValidationError);
}

TEST_CASE("user weights normalize the recency-weighted criterion profile") {
    CriterionMatrix cm;
    cm.X = Eigen::MatrixXd::Zero(3, kNumCriteria);
    cm.X.row(0) << 1.0, 0.0, 2.0, 0.0, 1.0, 0.0;
    cm.X.row(2) << 0.0, 2.0, 2.0, 0.0, 0.0, 0.0;
    const Eigen::VectorXd global = Eigen::VectorXd::Constant(kNumCriteria, 1.0 / kNumCriteria);

    // Single-item prefix: that row, normalized to sum 1.
    const Eigen::VectorXd w1 = user_weights({0}, cm, 0.8, global);
    CHECK(w1(0) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(w1(2) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(w1(4) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(w1.sum() == doctest::Approx(1.0).epsilon(1e-12));

    // Two-item prefix {2, 0} under decay 0.8: recency weights (4/9, 5/9).
    const Eigen::VectorXd w2 = user_weights({2, 0}, cm, 0.8, global);
    Eigen::VectorXd profile = (4.0 / 9.0) * cm.X.row(2).transpose() +
                              (5.0 / 9.0) * cm.X.row(0).transpose();
    profile /= profile.sum();
    for (int j = 0; j < kNumCriteria; ++j) {
        CHECK(w2(j) == doctest::Approx(profile(j)).epsilon(1e-12));
    }
}

TEST_CASE("user weights fall back to the global vector on an all-zero profile") {
    CriterionMatrix cm;
    cm.X = Eigen::MatrixXd::Zero(3, kNumCriteria);
    cm.X.row(0).setConstant(1.0);
    Eigen::VectorXd global(kNumCriteria);
    global << 0.4, 0.3, 0.1, 0.1, 0.05, 0.05;
    const Eigen::VectorXd w = user_weights({1}, cm, 0.8, global);  // row 1 is zero
    for (int j = 0; j < kNumCriteria; ++j) CHECK(w(j) == global(j));
}

TEST_CASE("user weights exclude inactive criteria from the profile") {
    CriterionMatrix cm;
    cm.X = Eigen::MatrixXd::Zero(2, kNumCriteria);
    cm.X.row(0) << 1.0, 9.0, 1.0, 0.0, 0.0, 0.0;
    cm.active = {true, false, true, true, true, true};  // the 9.0 column is off
    const Eigen::VectorXd global = Eigen::VectorXd::Constant(kNumCriteria, 1.0 / kNumCriteria);
    const Eigen::VectorXd w = user_weights({0}, cm, 0.8, global);
    CHECK(w(1) == 0.0);
    CHECK(w(0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(w(2) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("user weights require a non-empty prefix") {
    CriterionMatrix cm;
    cm.X = Eigen::MatrixXd::Ones(2, kNumCriteria);
    const Eigen::VectorXd global = Eigen::VectorXd::Constant(kNumCriteria, 1.0 / kNumCriteria);
    CHECK_THROWS_AS(user_weights({}, cm, 0.8, global), ValidationError);
}

TEST_CASE("mix_weights interpolates between user and global vectors") {
    Eigen::VectorXd user(kNumCriteria), global(kNumCriteria);
    user << 1.0, 0.0, 0.0, 0.0, 0.0, 0.0;
    global << 0.0, 1.0, 0.0, 0.0, 0.0, 0.0;
    CHECK(mix_weights(user, global, 0.0) == global);
    CHECK(mix_weights(user, global, 1.0) == user);
    const Eigen::VectorXd mid = mix_weights(user, global, 0.25);
    CHECK(mid(0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(mid(1) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("proxy deactivation flips flags and guards the last active criterion") {
    CriterionMatrix cm;
    cm.X = Eigen::MatrixXd::Ones(3, kNumCriteria);
    CriterionMatrix masked = deactivate_proxy(cm, 2);
    CHECK_FALSE(masked.active[2]);
    CHECK(masked.n_active() == kNumCriteria - 1);
    CHECK_THROWS_AS(deactivate_proxy(masked, 2), ValidationError);  // already off

    // Drive down to a single active criterion, then refuse the last one.
    for (int j : {0, 1, 3, 4}) masked = deactivate_proxy(masked, j);
    CHECK(masked.n_active() == 1);
    CHECK_THROWS_AS(deactivate_proxy(masked, 5), ValidationError);
    CHECK_THROWS_AS(deactivate_proxy(cm, -1), ValidationError);
    CHECK_THROWS_AS(deactivate_proxy(cm, kNumCriteria), ValidationError);

    const CriterionMatrix restored = activate_proxy(masked, 2);
    CHECK(restored.active[2]);
    CHECK(restored.n_active() == 2);
}

TEST_CASE("deactivating a criterion changes closeness only through that column") {
    std::mt19937_64 gen(777);
    const CriterionMatrix cm = random_matrix(gen, 6, false);
    const Eigen::VectorXd w = random_simplex(gen);
    const CriterionMatrix masked = deactivate_proxy(cm, 3);
    const std::vector<double> want = naive_closeness(masked, w, TopsisNorm::Vector);
    const Eigen::VectorXd got = topsis_closeness(masked, w);
    for (int i = 0; i < 6; ++i) {
        CHECK(got(i) == doctest::Approx(want[static_cast<std::size_t>(i)]).epsilon(1e-12));
    }
}

TEST_CASE("criterion matrix columns match hand-computed proxies") {
    std::vector<OccupationRecord> items = {
        tt::occ("o1", "Cloud Engineer", "Builds cloud systems daily",
                {"cloud computing", "linux"}),
        tt::occ("o2", "Data Analyst"),  // empty description, no skills
        tt::occ("o3", "Support Technician", "Helps the team with software and security",
                {"security"}),
    };
    const std::vector<std::vector<int>> prefixes = {{0, 1, 2}, {0, 1}, {2, 0}, {0, 2}};
    const TransitionModel model = build_transition_model(prefixes, 3);
    const CriterionMatrix cm =
        build_criterion_matrix(items, model, LexiconConfig::defaults());

    REQUIRE(cm.X.rows() == 3);
    REQUIRE(cm.X.cols() == kNumCriteria);

    // Column 0: training popularity (min-maxed occurrence counts 4/2/3).
    CHECK(cm.X(0, 0) == 1.0);
    CHECK(cm.X(1, 0) == 0.0);
    CHECK(cm.X(2, 0) == 0.5);
    for (int i = 0; i < 3; ++i) CHECK(cm.X(i, 0) == model.popularity(i));

    // Column 1: skills plus informative description tokens, min-maxed.
    // o1: 2 skills + {builds, cloud, systems, daily} = 6; o2: 0;
    // o3: 1 skill + {helps, team, software, security} = 5 ("with" is a stop
    // word, "the"/"and" fall under the length-4 floor).
    CHECK(cm.X(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cm.X(1, 1) == 0.0);
    CHECK(cm.X(2, 1) == doctest::Approx(5.0 / 6.0).epsilon(1e-12));

    // Column 2: digital-term density over description+skill tokens, raw.
    // o1: {cloud, cloud, linux} over 7 tokens; o3: {software, security,
    // security} over 8 tokens.
    CHECK(cm.X(0, 2) == doctest::Approx(3.0 / 7.0).epsilon(1e-12));
    CHECK(cm.X(1, 2) == 0.0);
    CHECK(cm.X(2, 2) == doctest::Approx(3.0 / 8.0).epsilon(1e-12));

    // Column 3: distinct innovation terms (cloud / - / security), min-maxed.
    CHECK(cm.X(0, 3) == 1.0);
    CHECK(cm.X(1, 3) == 0.0);
    CHECK(cm.X(2, 3) == 1.0);

    // Column 4: strongest title role cue (engineer 3 / analyst 2 /
    // technician 1), min-maxed.
    CHECK(cm.X(0, 4) == 1.0);
    CHECK(cm.X(1, 4) == 0.5);
    CHECK(cm.X(2, 4) == 0.0);

    // Column 5: distinct observed successors (2/1/1), min-maxed.
    CHECK(cm.X(0, 5) == 1.0);
    CHECK(cm.X(1, 5) == 0.0);
    CHECK(cm.X(2, 5) == 0.0);

    // An occupation with no description and no skills has exact zeros in the
    // three text-derived columns.
    CHECK(cm.X(1, 1) == 0.0);
    CHECK(cm.X(1, 2) == 0.0);
    CHECK(cm.X(1, 3) == 0.0);
}

TEST_CASE("criterion matrix rejects inconsistent inputs") {
    std::vector<OccupationRecord> items = {tt::occ("o1", "Engineer")};
    const TransitionModel model = build_transition_model({{0, 0}}, 1);
    CHECK_THROWS_AS(build_criterion_matrix({}, model, LexiconConfig::defaults()),
                    ValidationError);
    std::vector<OccupationRecord> two = {tt::occ("o1", "Engineer"), tt::occ("o2", "Analyst")};
    CHECK_THROWS_AS(build_criterion_matrix(two, model, LexiconConfig::defaults()),
                    ValidationError);
}

}  // TEST_SUITE
