#pragma once

#include <stdexcept>

namespace hil {

/// Double-threshold policy. tau_l == tau_u is allowed and yields an empty
/// review region (single-threshold policy).
struct ThresholdPair {
    double tau_l;
    double tau_u;

    ThresholdPair(double lower, double upper) : tau_l(lower), tau_u(upper) {
        if (!(tau_l >= 0.0 && tau_u <= 1.0 && tau_l <= tau_u))
            throw std::invalid_argument("ThresholdPair: need 0 <= tau_l <= tau_u <= 1");
    }

    bool degenerate() const { return tau_l == tau_u; }
};

enum class Action { AutoNegative, Review, AutoPositive };

/// Boundary ties are normative: p == tau_l goes to Review, p == tau_u goes
/// to AutoPositive.
inline Action decide(double p, const ThresholdPair& t) {
    if (p < t.tau_l) return Action::AutoNegative;
    if (p < t.tau_u) return Action::Review;
    return Action::AutoPositive;
}

/// Expected confusion contribution of a single instance with calibrated
/// score p; the four fields sum to exactly 1.
struct ExpectedContribution {
    double tp = 0.0;
    double fp = 0.0;
    double tn = 0.0;
    double fn = 0.0;
};

inline ExpectedContribution expected_contribution(double p, const ThresholdPair& t) {
    ExpectedContribution c;
    switch (decide(p, t)) {
        case Action::AutoPositive:
            c.tp = p;
            c.fp = 1.0 - p;
            break;
        case Action::Review:  // perfect reviewer: no errors
            c.tp = p;
            c.tn = 1.0 - p;
            break;
        case Action::AutoNegative:
            c.tn = 1.0 - p;
            c.fn = p;
            break;
    }
    return c;
}

struct Decision {
    int prediction;  // 0 or 1
    bool reviewed;
};

/// One Monte Carlo decision: reviewed instances get the true label.
inline Decision simulate_decision(double p, const ThresholdPair& t, int label) {
    switch (decide(p, t)) {
        case Action::AutoPositive: return {1, false};
        case Action::AutoNegative: return {0, false};
        case Action::Review: return {label, true};
    }
    return {0, false};  // unreachable
}

}  // namespace hil
