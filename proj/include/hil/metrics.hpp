#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hil/distributions.hpp"
#include "hil/policy.hpp"

namespace hil {

/// Expected confusion counts for one operating point over n instances.
struct ConfusionExpectation {
    double tp = 0.0;
    double fp = 0.0;
    double tn = 0.0;
    double fn = 0.0;
    double review_load = 0.0;
    std::size_t n = 0;
};

/// Ratio metrics derived from expected counts. Zero-denominator metrics are
/// left unset rather than coerced to 0 or 1.
struct DerivedMetrics {
    double accuracy = 0.0;
    std::optional<double> precision;
    std::optional<double> recall;
    std::optional<double> f1;
    double review_fraction = 0.0;
};

struct MonteCarloEstimate {
    double mean_f1 = 0.0;
    double std_f1 = 0.0;
    std::size_t runs = 0;
    std::size_t excluded_runs = 0;  // runs with an undefined F1 (zero denominator)
    std::vector<DerivedMetrics> per_run;
    std::vector<ConfusionExpectation> per_run_counts;
    std::uint64_t base_seed = 0;
};

enum class ObjectiveKind {
    ExpectedTp,
    CorrectDecisions,
    F1,
    Precision,
    Recall,
    WeightedCost,
};

struct ObjectiveSpec {
    ObjectiveKind kind = ObjectiveKind::F1;
    // weighted_cost only
    double w_fp = 0.0;
    double w_fn = 0.0;
    double w_review = 0.0;
};

/// Sum of per-instance expected contributions over a score sample.
/// review_load is the integer count of Review actions. tn is accumulated as
/// n - tp - fp - fn, which equals the per-region sum algebraically and keeps
/// the conservation identity exact in floating point.
ConfusionExpectation empirical_expectation(std::span<const double> scores,
                                           const ThresholdPair& t);

/// Closed-form expectation over the score distribution, scaled to n:
///   tp = n * PE(tau_l, 1)
///   fn = n * PE(0, tau_l)
///   fp = n * [(1 - F(tau_u)) - PE(tau_u, 1)]
///   tn = n * [F(tau_u) - PE(0, tau_u)]
///   review_load = n * [F(tau_u) - F(tau_l)]
/// where F is the CDF and PE the partial expectation of p.
ConfusionExpectation analytic_expectation(const ScoreDistribution& d,
                                          const ThresholdPair& t, std::size_t n);

DerivedMetrics derive_metrics(const ConfusionExpectation& c);

/// Monte Carlo expectation-of-ratio F1. Run r draws its scores (unless
/// resample_scores is false, in which case scores are drawn once from the
/// base seed), labels y_i ~ Bernoulli(p_i), simulates the policy and
/// computes the per-run F1 from integer counts. Per-run seed:
/// split_seed(base_seed, r).
MonteCarloEstimate monte_carlo_f1(const ScoreDistribution& d, const ThresholdPair& t,
                                  std::size_t n, std::size_t runs,
                                  std::uint64_t base_seed,
                                  bool resample_scores = true);

/// Scalar objective, maximization sense for every kind (weighted cost is
/// negated). Throws std::runtime_error when an f1/precision/recall objective
/// is undefined at this point.
double objective_value(const ConfusionExpectation& c, const ObjectiveSpec& obj);

}  // namespace hil
