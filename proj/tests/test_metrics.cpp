#include <cmath>

#include "doctest.h"
#include "hil/metrics.hpp"

using namespace hil;

namespace {

const ScoreDistribution& balanced_mixture() {
    static const ScoreDistribution d{
        BetaMixture({BetaParams(15, 2), BetaParams(2, 15)}, {0.5, 0.5})};
    return d;
}

}  // namespace

TEST_CASE("empirical_expectation worked example") {
    const std::vector<double> scores{0.1, 0.5, 0.9};
    const auto c = empirical_expectation(scores, ThresholdPair(0.2, 0.8));
    CHECK(c.tp == doctest::Approx(1.4));
    CHECK(c.fp == doctest::Approx(0.1));
    CHECK(c.fn == doctest::Approx(0.1));
    CHECK(c.tn == doctest::Approx(1.4));
    CHECK(c.review_load == 1.0);
    CHECK(c.n == 3);

    // all scores below tau_l: only the auto-negative region is active
    const auto low = empirical_expectation(std::vector<double>{0.05, 0.1}, ThresholdPair(0.5, 0.9));
    CHECK(low.tp == 0.0);
    CHECK(low.fp == 0.0);
    CHECK(low.review_load == 0.0);
    CHECK(low.fn == doctest::Approx(0.15));

    CHECK_THROWS_AS(empirical_expectation(std::vector<double>{}, ThresholdPair(0.2, 0.8)),
                    std::invalid_argument);
}

TEST_CASE("empirical conservation is exact") {
    Sampler rng(5);
    const auto scores = balanced_mixture().sample(10000, 8);
    for (int trial = 0; trial < 50; ++trial) {
        double lo = rng.uniform(), hi = rng.uniform();
        if (lo > hi) std::swap(lo, hi);
        const auto c = empirical_expectation(scores, ThresholdPair(lo, hi));
        const double nn = static_cast<double>(c.n);
        CHECK((((nn - c.tp) - c.fp) - c.fn) - c.tn == 0.0);
    }
}

TEST_CASE("analytic_expectation closed forms") {
    const ScoreDistribution uniform{BetaParams(1, 1)};
    const auto c = analytic_expectation(uniform, ThresholdPair(0.25, 0.75), 1);
    CHECK(c.review_load == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(c.fn == doctest::Approx(0.03125).epsilon(1e-10));
    CHECK(c.tp == doctest::Approx(0.46875).epsilon(1e-10));
    CHECK(c.fp == doctest::Approx(0.03125).epsilon(1e-10));
    CHECK(c.tn == doctest::Approx(0.46875).epsilon(1e-10));

    // everything reviewed: no automated errors
    const auto all = analytic_expectation(balanced_mixture(), ThresholdPair(0, 1), 1);
    CHECK(all.fp == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(all.fn == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(all.review_load == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(all.tp == doctest::Approx(balanced_mixture().mean()).epsilon(1e-10));
    CHECK(all.tn == doctest::Approx(1.0 - balanced_mixture().mean()).epsilon(1e-10));
}

TEST_CASE("analytic_expectation matches frozen quadrature values") {
    // mixture 0.5/0.5 Beta(15,2)/Beta(2,15), t = (0.25, 0.75), n = 10,000
    const auto c = analytic_expectation(balanced_mixture(), ThresholdPair(0.25, 0.75), 10000);
    CHECK(c.tp == doctest::Approx(4508.060220396146).epsilon(1e-9));
    CHECK(c.fp == doctest::Approx(491.9397796038538).epsilon(1e-9));
    CHECK(c.tn == doctest::Approx(4508.060220396146).epsilon(1e-9));
    CHECK(c.fn == doctest::Approx(491.93977960385376).epsilon(1e-9));
    CHECK(c.review_load == doctest::Approx(634.7642838954926).epsilon(1e-9));
}

TEST_CASE("empirical sample agrees with analytic expectation") {
    const std::size_t n = 10000;
    const auto scores = balanced_mixture().sample(n, 123);
    const ThresholdPair t(0.25, 0.75);
    const auto emp = empirical_expectation(scores, t);
    const auto ana = analytic_expectation(balanced_mixture(), t, n);

    // standard error of each aggregate from the sample itself
    auto within = [&](double emp_v, double ana_v, auto contribution) {
        double mean = 0.0;
        for (double p : scores) mean += contribution(p);
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (double p : scores) {
            const double d = contribution(p) - mean;
            var += d * d;
        }
        var /= static_cast<double>(n - 1);
        const double se = std::sqrt(var * static_cast<double>(n));
        CHECK(std::fabs(emp_v - ana_v) <= 3.0 * se + 1e-9);
    };
    within(emp.tp, ana.tp, [&](double p) { return expected_contribution(p, t).tp; });
    within(emp.fp, ana.fp, [&](double p) { return expected_contribution(p, t).fp; });
    within(emp.fn, ana.fn, [&](double p) { return expected_contribution(p, t).fn; });
    within(emp.tn, ana.tn, [&](double p) { return expected_contribution(p, t).tn; });
}

TEST_CASE("derive_metrics") {
    ConfusionExpectation c;
    c.tp = 1.4;
    c.fp = 0.1;
    c.fn = 0.1;
    c.tn = 1.4;
    c.review_load = 1.0;
    c.n = 3;
    const auto m = derive_metrics(c);
    CHECK(*m.f1 == doctest::Approx(2.8 / 3.0));
    CHECK(m.review_fraction == doctest::Approx(1.0 / 3.0));

    ConfusionExpectation zero;
    zero.tn = 5;
    zero.n = 5;
    const auto mz = derive_metrics(zero);
    CHECK_FALSE(mz.precision.has_value());
    CHECK_FALSE(mz.recall.has_value());
    CHECK_FALSE(mz.f1.has_value());
    CHECK(mz.accuracy == doctest::Approx(1.0));

    ConfusionExpectation quarters;
    quarters.tp = quarters.fp = quarters.tn = quarters.fn = 25;
    quarters.n = 100;
    const auto mq = derive_metrics(quarters);
    CHECK(mq.accuracy == doctest::Approx(0.5));
    CHECK(*mq.precision == doctest::Approx(0.5));
    CHECK(*mq.recall == doctest::Approx(0.5));
    CHECK(*mq.f1 == doctest::Approx(0.5));
}

TEST_CASE("monte_carlo_f1 degenerate point mass") {
    const ScoreDistribution ones{EmpiricalScores({1.0, 1.0, 1.0})};
    const auto est = monte_carlo_f1(ones, ThresholdPair(0.2, 0.8), 100, 10, 7);
    CHECK(est.excluded_runs == 0);
    CHECK(est.mean_f1 == doctest::Approx(1.0));
    CHECK(est.std_f1 == doctest::Approx(0.0));

    // all-negative point mass: F1 undefined in every run
    const ScoreDistribution zeros{EmpiricalScores({0.0})};
    const auto none = monte_carlo_f1(zeros, ThresholdPair(0.0, 1.0), 50, 5, 7);
    CHECK(none.excluded_runs == 5);
}

TEST_CASE("monte_carlo_f1 agrees with analytic plug-in") {
    const ThresholdPair t(0.01, 0.99);
    const std::size_t n = 10000;
    const auto est = monte_carlo_f1(balanced_mixture(), t, n, 100, 2024);
    const auto ana = derive_metrics(analytic_expectation(balanced_mixture(), t, n));
    REQUIRE(ana.f1.has_value());
    const double se = est.std_f1 / std::sqrt(100.0);
    CHECK(std::fabs(est.mean_f1 - *ana.f1) <= 3.0 * se);
}

TEST_CASE("monte_carlo_f1 reproducibility") {
    const ThresholdPair t(0.2, 0.8);
    const auto a = monte_carlo_f1(balanced_mixture(), t, 500, 8, 99);
    const auto b = monte_carlo_f1(balanced_mixture(), t, 500, 8, 99);
    CHECK(a.mean_f1 == b.mean_f1);
    CHECK(a.std_f1 == b.std_f1);
    for (std::size_t r = 0; r < 8; ++r) {
        CHECK(a.per_run_counts[r].tp == b.per_run_counts[r].tp);
        CHECK(a.per_run_counts[r].review_load == b.per_run_counts[r].review_load);
    }
    const auto c = monte_carlo_f1(balanced_mixture(), t, 500, 8, 100);
    CHECK(a.mean_f1 != c.mean_f1);

    // fixed-scores mode is reproducible too and differs from resampling
    const auto f1x = monte_carlo_f1(balanced_mixture(), t, 500, 8, 99, false);
    const auto f2x = monte_carlo_f1(balanced_mixture(), t, 500, 8, 99, false);
    CHECK(f1x.mean_f1 == f2x.mean_f1);
    CHECK(f1x.per_run_counts[0].review_load == f1x.per_run_counts[1].review_load);
}

TEST_CASE("interval widening monotonicity") {
    // widening the review interval never decreases tp, never increases fp/fn
    const std::vector<std::pair<double, double>> nested{
        {0.4, 0.6}, {0.3, 0.7}, {0.2, 0.8}, {0.1, 0.9}, {0.0, 1.0}};
    ConfusionExpectation prev;
    bool first = true;
    for (const auto& [lo, hi] : nested) {
        const auto c = analytic_expectation(balanced_mixture(), ThresholdPair(lo, hi), 1000);
        if (!first) {
            CHECK(c.tp >= prev.tp - 1e-9);
            CHECK(c.fp <= prev.fp + 1e-9);
            CHECK(c.fn <= prev.fn + 1e-9);
        }
        prev = c;
        first = false;
    }
}

TEST_CASE("objective_value") {
    ConfusionExpectation c;
    c.tp = 5;
    c.tn = 3;
    c.fp = 1;
    c.fn = 1;
    c.review_load = 2;
    c.n = 10;
    CHECK(objective_value(c, {ObjectiveKind::CorrectDecisions}) == doctest::Approx(8.0));
    CHECK(objective_value(c, {ObjectiveKind::ExpectedTp}) == doctest::Approx(5.0));
    CHECK(objective_value(c, {ObjectiveKind::WeightedCost, 0, 0, 0}) == 0.0);
    CHECK(objective_value(c, {ObjectiveKind::WeightedCost, 1, 2, 0.5}) ==
          doctest::Approx(-(1.0 + 2.0 + 1.0)));
    CHECK(objective_value(c, {ObjectiveKind::F1}) == doctest::Approx(10.0 / 12.0));

    ConfusionExpectation undef;
    undef.tn = 4;
    undef.n = 4;
    CHECK_THROWS_AS(objective_value(undef, {ObjectiveKind::F1}), std::runtime_error);

    // worked sample from the empirical example
    const auto worked =
        empirical_expectation(std::vector<double>{0.1, 0.5, 0.9}, ThresholdPair(0.2, 0.8));
    CHECK(objective_value(worked, {ObjectiveKind::ExpectedTp}) == doctest::Approx(1.4));
}
