#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hil/sweep.hpp"

namespace hil {

/// One operating point under the (maximize metric, minimize review load)
/// order; carries the index into the source point list.
struct FrontierPoint {
    std::size_t id = 0;
    double review_fraction = 0.0;
    double metric_value = 0.0;
    ThresholdPair thresholds{0.0, 1.0};
};

struct BudgetQuery {
    double budget_fraction = 1.0;
    ObjectiveSpec objective;
};

struct Recommendation {
    ThresholdPair thresholds{0.0, 1.0};
    double objective_value = 0.0;
    double review_fraction = 0.0;
    bool binding = false;  // budget tight within grid resolution
};

struct NoFeasiblePoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Non-dominated subset, sorted by review fraction ascending; metric values
/// along the output are strictly increasing. Duplicate (load, metric) points
/// keep the lexicographically smallest thresholds.
std::vector<FrontierPoint> pareto_frontier(const std::vector<FrontierPoint>& points);

/// Convenience: build frontier inputs from a sweep for a given metric kind
/// (f1 / precision / recall / others via objective_value); points where the
/// metric is undefined are excluded.
std::vector<FrontierPoint> frontier_candidates(const SweepResult& sweep,
                                               const ObjectiveSpec& objective);

/// Argmax of the objective over the feasible set {review_fraction <= B};
/// ties broken by lower review fraction, then lower tau_l, then lower tau_u.
/// Throws NoFeasiblePoint when the grid's minimum load exceeds the budget.
Recommendation optimize_under_budget(const SweepResult& sweep, const BudgetQuery& q);

/// Symmetric review band (0.5 - delta, 0.5 + delta) whose probability mass
/// equals the budget, found by bisection on the mass (tolerance 1e-10);
/// delta capped at 0.5 when the full-interval mass is below the budget.
ThresholdPair symmetric_accuracy_policy(const ScoreDistribution& d,
                                        double budget_fraction);

/// Expected accuracy gain from reviewing an instance with score p.
inline double marginal_review_value(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("marginal_review_value: p outside [0,1]");
    return p < 1.0 - p ? p : 1.0 - p;
}

struct SingleThresholdResult {
    double threshold = 0.0;
    double f1 = 0.0;
};

/// Scan degenerate pairs (t, t) on a uniform grid and return the analytic-F1
/// argmax (smallest t on ties).
SingleThresholdResult best_single_threshold_f1(const ScoreDistribution& d,
                                               std::size_t n, std::size_t resolution);

}  // namespace hil
