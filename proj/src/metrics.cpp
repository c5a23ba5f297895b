#include "hil/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace hil {

ConfusionExpectation empirical_expectation(std::span<const double> scores,
                                           const ThresholdPair& t) {
    if (scores.empty())
        throw std::invalid_argument("empirical_expectation: empty score list");

    double sum_neg = 0.0, sum_rev = 0.0, sum_pos = 0.0;
    std::size_t n_rev = 0, n_pos = 0;
    for (double p : scores) {
        switch (decide(p, t)) {
            case Action::AutoNegative: sum_neg += p; break;
            case Action::Review:
                sum_rev += p;
                ++n_rev;
                break;
            case Action::AutoPositive:
                sum_pos += p;
                ++n_pos;
                break;
        }
    }
    ConfusionExpectation c;
    c.n = scores.size();
    c.tp = sum_rev + sum_pos;
    c.fp = static_cast<double>(n_pos) - sum_pos;
    c.fn = sum_neg;
    c.tn = ((static_cast<double>(c.n) - c.tp) - c.fp) - c.fn;
    c.review_load = static_cast<double>(n_rev);
    return c;
}

ConfusionExpectation analytic_expectation(const ScoreDistribution& d,
                                          const ThresholdPair& t, std::size_t n) {
    if (n < 1) throw std::invalid_argument("analytic_expectation: n must be >= 1");
    const double nn = static_cast<double>(n);
    const double f_lo = d.cdf(t.tau_l);
    const double f_hi = d.cdf(t.tau_u);
    const double pe_above_lo = d.partial_expectation(t.tau_l, 1.0);
    const double pe_above_hi = d.partial_expectation(t.tau_u, 1.0);
    const double pe_below_lo = d.partial_expectation(0.0, t.tau_l);
    const double pe_below_hi = d.partial_expectation(0.0, t.tau_u);

    ConfusionExpectation c;
    c.n = n;
    c.tp = nn * pe_above_lo;
    c.fn = nn * pe_below_lo;
    c.fp = nn * ((1.0 - f_hi) - pe_above_hi);
    c.tn = nn * (f_hi - pe_below_hi);
    c.review_load = nn * (f_hi - f_lo);
    return c;
}

DerivedMetrics derive_metrics(const ConfusionExpectation& c) {
    if (c.n < 1) throw std::invalid_argument("derive_metrics: n must be >= 1");
    DerivedMetrics m;
    const double nn = static_cast<double>(c.n);
    m.accuracy = (c.tp + c.tn) / nn;
    m.review_fraction = c.review_load / nn;
    if (c.tp + c.fp > 0.0) m.precision = c.tp / (c.tp + c.fp);
    if (c.tp + c.fn > 0.0) m.recall = c.tp / (c.tp + c.fn);
    const double f1_den = 2.0 * c.tp + c.fp + c.fn;
    if (f1_den > 0.0) m.f1 = 2.0 * c.tp / f1_den;
    return m;
}

MonteCarloEstimate monte_carlo_f1(const ScoreDistribution& d, const ThresholdPair& t,
                                  std::size_t n, std::size_t runs,
                                  std::uint64_t base_seed, bool resample_scores) {
    if (n < 1 || runs < 1)
        throw std::invalid_argument("monte_carlo_f1: n and runs must be >= 1");

    std::vector<double> fixed_scores;
    if (!resample_scores) fixed_scores = d.sample(n, base_seed);

    MonteCarloEstimate est;
    est.runs = runs;
    est.base_seed = base_seed;
    est.per_run.reserve(runs);
    est.per_run_counts.reserve(runs);

    for (std::size_t r = 0; r < runs; ++r) {
        const std::uint64_t seed_r = split_seed(base_seed, r);
        ScoreDistribution::Sampler score_gen(d, seed_r);
        // label stream is kept separate so fixed-scores mode reuses it as-is
        Sampler label_gen(split_seed(seed_r, 0));

        std::size_t tp = 0, fp = 0, tn = 0, fn = 0, reviewed = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double p = resample_scores ? score_gen.next() : fixed_scores[i];
            const int label = label_gen.uniform() < p ? 1 : 0;
            const Decision dec = simulate_decision(p, t, label);
            reviewed += dec.reviewed ? 1 : 0;
            if (dec.prediction == 1)
                (label == 1 ? tp : fp)++;
            else
                (label == 0 ? tn : fn)++;
        }
        ConfusionExpectation c;
        c.n = n;
        c.tp = static_cast<double>(tp);
        c.fp = static_cast<double>(fp);
        c.tn = static_cast<double>(tn);
        c.fn = static_cast<double>(fn);
        c.review_load = static_cast<double>(reviewed);
        est.per_run_counts.push_back(c);
        est.per_run.push_back(derive_metrics(c));
    }

    double sum = 0.0;
    std::size_t defined = 0;
    for (const auto& m : est.per_run) {
        if (m.f1) {
            sum += *m.f1;
            ++defined;
        }
    }
    est.excluded_runs = runs - defined;
    if (defined > 0) {
        est.mean_f1 = sum / static_cast<double>(defined);
        double ss = 0.0;
        for (const auto& m : est.per_run)
            if (m.f1) ss += (*m.f1 - est.mean_f1) * (*m.f1 - est.mean_f1);
        est.std_f1 = defined > 1 ? std::sqrt(ss / static_cast<double>(defined - 1)) : 0.0;
    }
    return est;
}

double objective_value(const ConfusionExpectation& c, const ObjectiveSpec& obj) {
    switch (obj.kind) {
        case ObjectiveKind::ExpectedTp: return c.tp;
        case ObjectiveKind::CorrectDecisions: return c.tp + c.tn;
        case ObjectiveKind::WeightedCost:
            return -(obj.w_fp * c.fp + obj.w_fn * c.fn + obj.w_review * c.review_load);
        default: break;
    }
    const DerivedMetrics m = derive_metrics(c);
    const std::optional<double>* v = nullptr;
    switch (obj.kind) {
        case ObjectiveKind::F1: v = &m.f1; break;
        case ObjectiveKind::Precision: v = &m.precision; break;
        case ObjectiveKind::Recall: v = &m.recall; break;
        default: break;
    }
    if (!v || !v->has_value())
        throw std::runtime_error("objective_value: metric undefined at this point");
    return **v;
}

}  // namespace hil
