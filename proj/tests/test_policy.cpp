#include "doctest.h"
#include "hil/policy.hpp"
#include "hil/rng.hpp"

using namespace hil;

TEST_CASE("decide regions and boundary ties") {
    const ThresholdPair t(0.40, 0.60);
    CHECK(decide(0.30, t) == Action::AutoNegative);
    CHECK(decide(0.40, t) == Action::Review);       // left boundary -> Review
    CHECK(decide(0.50, t) == Action::Review);
    CHECK(decide(0.60, t) == Action::AutoPositive); // upper boundary -> AutoPositive
    CHECK(decide(0.95, t) == Action::AutoPositive);
    CHECK(decide(0.0, t) == Action::AutoNegative);
    CHECK(decide(1.0, t) == Action::AutoPositive);
}

TEST_CASE("decide is monotone in p") {
    Sampler rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        double lo = rng.uniform(), hi = rng.uniform();
        if (lo > hi) std::swap(lo, hi);
        const ThresholdPair t(lo, hi);
        int prev = 0;
        for (int i = 0; i <= 500; ++i) {
            const int cur = static_cast<int>(decide(i / 500.0, t));
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("expected_contribution per region") {
    const ThresholdPair t(0.2, 0.8);

    const auto pos = expected_contribution(0.95, t);
    CHECK(pos.tp == doctest::Approx(0.95));
    CHECK(pos.fp == doctest::Approx(0.05));
    CHECK(pos.tn == 0.0);
    CHECK(pos.fn == 0.0);

    const auto rev = expected_contribution(0.50, t);
    CHECK(rev.tp == doctest::Approx(0.5));
    CHECK(rev.tn == doctest::Approx(0.5));
    CHECK(rev.fp == 0.0);
    CHECK(rev.fn == 0.0);

    const auto neg = expected_contribution(0.0, t);
    CHECK(neg.tn == 1.0);
    CHECK(neg.tp == 0.0);
    CHECK(neg.fp == 0.0);
    CHECK(neg.fn == 0.0);
}

TEST_CASE("contribution fields sum to exactly 1") {
    Sampler rng(17);
    for (int trial = 0; trial < 5000; ++trial) {
        double lo = rng.uniform(), hi = rng.uniform();
        if (lo > hi) std::swap(lo, hi);
        const ThresholdPair t(lo, hi);
        const double p = rng.uniform();
        const auto c = expected_contribution(p, t);
        CHECK(c.tp + c.fp + c.tn + c.fn == 1.0);
        // error fields only in their own regions
        if (c.fp > 0.0) CHECK(decide(p, t) == Action::AutoPositive);
        if (c.fn > 0.0) CHECK(decide(p, t) == Action::AutoNegative);
    }
}

TEST_CASE("simulate_decision") {
    const ThresholdPair t(0.2, 0.8);

    const auto fp_case = simulate_decision(0.9, t, 0);
    CHECK(fp_case.prediction == 1);
    CHECK_FALSE(fp_case.reviewed);

    const auto reviewed = simulate_decision(0.5, t, 1);
    CHECK(reviewed.prediction == 1);
    CHECK(reviewed.reviewed);

    const auto fn_case = simulate_decision(0.1, t, 1);
    CHECK(fn_case.prediction == 0);
    CHECK_FALSE(fn_case.reviewed);

    // reviewed implies prediction == label
    Sampler rng(3);
    for (int trial = 0; trial < 2000; ++trial) {
        double lo = rng.uniform(), hi = rng.uniform();
        if (lo > hi) std::swap(lo, hi);
        const int label = rng.uniform() < 0.5 ? 0 : 1;
        const auto d = simulate_decision(rng.uniform(), ThresholdPair(lo, hi), label);
        if (d.reviewed) CHECK(d.prediction == label);
    }
}

TEST_CASE("degenerate pair has empty review region") {
    const ThresholdPair t(0.5, 0.5);
    CHECK(t.degenerate());
    CHECK(decide(0.49, t) == Action::AutoNegative);
    CHECK(decide(0.5, t) == Action::AutoPositive);
    CHECK_THROWS_AS(ThresholdPair(0.6, 0.4), std::invalid_argument);
}
