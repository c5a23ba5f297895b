#include "hil/frontier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hil {

std::vector<FrontierPoint> pareto_frontier(const std::vector<FrontierPoint>& points) {
    std::vector<FrontierPoint> sorted = points;
    std::sort(sorted.begin(), sorted.end(), [](const FrontierPoint& a, const FrontierPoint& b) {
        if (a.review_fraction != b.review_fraction)
            return a.review_fraction < b.review_fraction;
        if (a.metric_value != b.metric_value) return a.metric_value > b.metric_value;
        if (a.thresholds.tau_l != b.thresholds.tau_l)
            return a.thresholds.tau_l < b.thresholds.tau_l;
        return a.thresholds.tau_u < b.thresholds.tau_u;
    });

    std::vector<FrontierPoint> frontier;
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& p : sorted) {
        if (p.metric_value > best) {
            frontier.push_back(p);
            best = p.metric_value;
        }
    }
    return frontier;
}

std::vector<FrontierPoint> frontier_candidates(const SweepResult& sweep,
                                               const ObjectiveSpec& objective) {
    std::vector<FrontierPoint> out;
    out.reserve(sweep.points.size());
    for (std::size_t i = 0; i < sweep.points.size(); ++i) {
        const OperatingPoint& op = sweep.points[i];
        const DerivedMetrics& m = op.analytic_metrics;
        std::optional<double> value;
        switch (objective.kind) {
            case ObjectiveKind::F1: value = m.f1; break;
            case ObjectiveKind::Precision: value = m.precision; break;
            case ObjectiveKind::Recall: value = m.recall; break;
            default: value = objective_value(op.analytic, objective); break;
        }
        if (!value) continue;
        out.push_back({i, m.review_fraction, *value, op.thresholds});
    }
    return out;
}

Recommendation optimize_under_budget(const SweepResult& sweep, const BudgetQuery& q) {
    if (sweep.points.empty())
        throw std::invalid_argument("optimize_under_budget: empty sweep");

    const OperatingPoint* best = nullptr;
    double best_value = 0.0;
    bool any_feasible = false;
    double best_infeasible = -std::numeric_limits<double>::infinity();

    for (const auto& op : sweep.points) {
        const double load = op.analytic_metrics.review_fraction;
        double value;
        try {
            value = objective_value(op.analytic, q.objective);
        } catch (const std::runtime_error&) {
            continue;  // undefined metric at this point
        }
        if (load > q.budget_fraction) {
            best_infeasible = std::max(best_infeasible, value);
            continue;
        }
        any_feasible = true;
        if (!best) {
            best = &op;
            best_value = value;
            continue;
        }
        const double cur_load = best->analytic_metrics.review_fraction;
        bool better = value > best_value;
        if (value == best_value) {
            if (load != cur_load)
                better = load < cur_load;
            else if (op.thresholds.tau_l != best->thresholds.tau_l)
                better = op.thresholds.tau_l < best->thresholds.tau_l;
            else
                better = op.thresholds.tau_u < best->thresholds.tau_u;
        }
        if (better) {
            best = &op;
            best_value = value;
        }
    }

    if (!any_feasible || !best)
        throw NoFeasiblePoint("optimize_under_budget: no grid point within budget");

    Recommendation rec;
    rec.thresholds = best->thresholds;
    rec.objective_value = best_value;
    rec.review_fraction = best->analytic_metrics.review_fraction;
    // the constraint is tight if relaxing the budget would improve the optimum
    rec.binding = best_infeasible > best_value;
    return rec;
}

ThresholdPair symmetric_accuracy_policy(const ScoreDistribution& d,
                                        double budget_fraction) {
    if (!(budget_fraction >= 0.0 && budget_fraction <= 1.0))
        throw std::domain_error("symmetric_accuracy_policy: budget outside [0,1]");

    auto mass = [&](double delta) {
        return d.cdf(0.5 + delta) - d.cdf(0.5 - delta);
    };
    if (mass(0.5) <= budget_fraction) return ThresholdPair(0.0, 1.0);
    if (budget_fraction == 0.0) return ThresholdPair(0.5, 0.5);

    double lo = 0.0, hi = 0.5;
    double mid = 0.25;
    for (int iter = 0; iter < 200; ++iter) {
        mid = 0.5 * (lo + hi);
        const double m = mass(mid);
        if (std::fabs(m - budget_fraction) <= 1e-10) break;
        (m < budget_fraction ? lo : hi) = mid;
    }
    return ThresholdPair(0.5 - mid, 0.5 + mid);
}

SingleThresholdResult best_single_threshold_f1(const ScoreDistribution& d,
                                               std::size_t n, std::size_t resolution) {
    if (resolution < 2)
        throw std::invalid_argument("best_single_threshold_f1: resolution must be >= 2");

    SingleThresholdResult best;
    bool found = false;
    for (std::size_t i = 0; i < resolution; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(resolution - 1);
        const auto c = analytic_expectation(d, ThresholdPair(t, t), n);
        const auto m = derive_metrics(c);
        if (!m.f1) continue;
        if (!found || *m.f1 > best.f1) {
            best = {t, *m.f1};
            found = true;
        }
    }
    if (!found)
        throw std::runtime_error("best_single_threshold_f1: F1 undefined everywhere");
    return best;
}

}  // namespace hil
