#include "hil/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hil {

namespace {

// Lentz continued fraction for I_x(a,b), valid for x < (a+1)/(a+b+2).
double beta_cont_frac(double a, double b, double x) {
    constexpr double eps = 1e-12;
    constexpr double tiny = 1e-300;
    constexpr int max_iter = 300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps) break;
    }
    return h;
}

void check_unit_interval(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error(std::string(what) + " outside [0,1]: " + std::to_string(p));
}

}  // namespace

double reg_inc_beta(double x, double a, double b) {
    check_unit_interval(x, "x");
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("beta shapes must be positive");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;

    const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                             a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * beta_cont_frac(a, b, x) / a;
    return 1.0 - front * beta_cont_frac(b, a, 1.0 - x) / b;
}

BetaParams::BetaParams(double alpha_in, double beta_in)
    : alpha(alpha_in), beta(beta_in) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("BetaParams: shapes must be positive");
    log_norm_ = std::lgamma(alpha) + std::lgamma(beta) - std::lgamma(alpha + beta);
}

double BetaParams::pdf(double p) const {
    check_unit_interval(p, "p");
    if (p == 0.0) {
        if (alpha < 1.0) return std::numeric_limits<double>::infinity();
        if (alpha == 1.0) return std::exp(-log_norm_);
        return 0.0;
    }
    if (p == 1.0) {
        if (beta < 1.0) return std::numeric_limits<double>::infinity();
        if (beta == 1.0) return std::exp(-log_norm_);
        return 0.0;
    }
    return std::exp((alpha - 1.0) * std::log(p) + (beta - 1.0) * std::log1p(-p) - log_norm_);
}

double BetaParams::cdf(double p) const { return reg_inc_beta(p, alpha, beta); }

double BetaParams::partial_expectation_from_zero(double x) const {
    return mean() * reg_inc_beta(x, alpha + 1.0, beta);
}

BetaMixture::BetaMixture(std::vector<BetaParams> components_in,
                         std::vector<double> weights_in)
    : components(std::move(components_in)), weights(std::move(weights_in)) {
    if (components.empty())
        throw std::invalid_argument("BetaMixture: needs at least one component");
    if (components.size() != weights.size())
        throw std::invalid_argument("BetaMixture: components/weights length mismatch");
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0 && w <= 1.0))
            throw std::invalid_argument("BetaMixture: weight outside [0,1]");
        sum += w;
    }
    if (std::fabs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("BetaMixture: weights must sum to 1");
}

EmpiricalScores::EmpiricalScores(std::vector<double> scores_in)
    : scores(std::move(scores_in)) {
    if (scores.empty())
        throw std::invalid_argument("EmpiricalScores: empty score list");
    for (double s : scores) check_unit_interval(s, "score");
}

ScoreDistribution::ScoreDistribution(EmpiricalScores e) : v_(std::move(e)) {
    auto& scores = std::get<EmpiricalScores>(v_).scores;
    std::sort(scores.begin(), scores.end());

    // Freedman-Diaconis bin width, clipped to at least 20 bins; used for
    // pdf() display only. cdf/partial_expectation work on the raw sample.
    const std::size_t n = scores.size();
    const double q1 = scores[static_cast<std::size_t>(0.25 * (n - 1))];
    const double q3 = scores[static_cast<std::size_t>(0.75 * (n - 1))];
    const double iqr = q3 - q1;
    std::size_t bins = 20;
    if (iqr > 0.0) {
        const double width = 2.0 * iqr / std::cbrt(static_cast<double>(n));
        bins = std::max<std::size_t>(20, static_cast<std::size_t>(std::ceil(1.0 / width)));
    }
    hist_edges_.resize(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i)
        hist_edges_[i] = static_cast<double>(i) / static_cast<double>(bins);
    hist_density_.assign(bins, 0.0);
    const double bin_width = 1.0 / static_cast<double>(bins);
    for (double s : scores) {
        std::size_t k = std::min(bins - 1, static_cast<std::size_t>(s * bins));
        hist_density_[k] += 1.0 / (static_cast<double>(n) * bin_width);
    }
}

double ScoreDistribution::pdf(double p) const {
    check_unit_interval(p, "p");
    return std::visit(
        [&](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, BetaParams>) {
                return d.pdf(p);
            } else if constexpr (std::is_same_v<T, BetaMixture>) {
                double acc = 0.0;
                for (std::size_t k = 0; k < d.components.size(); ++k)
                    acc += d.weights[k] * d.components[k].pdf(p);
                return acc;
            } else {
                const std::size_t bins = hist_density_.size();
                std::size_t k = std::min(bins - 1, static_cast<std::size_t>(p * bins));
                return hist_density_[k];
            }
        },
        v_);
}

double ScoreDistribution::cdf(double p) const {
    check_unit_interval(p, "p");
    return std::visit(
        [&](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, BetaParams>) {
                return d.cdf(p);
            } else if constexpr (std::is_same_v<T, BetaMixture>) {
                double acc = 0.0;
                for (std::size_t k = 0; k < d.components.size(); ++k)
                    acc += d.weights[k] * d.components[k].cdf(p);
                return acc;
            } else {
                auto it = std::upper_bound(d.scores.begin(), d.scores.end(), p);
                return static_cast<double>(it - d.scores.begin()) /
                       static_cast<double>(d.scores.size());
            }
        },
        v_);
}

double ScoreDistribution::partial_expectation(double a, double b) const {
    check_unit_interval(a, "a");
    check_unit_interval(b, "b");
    if (a > b) throw std::domain_error("partial_expectation: a > b");
    return std::visit(
        [&](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, BetaParams>) {
                return d.partial_expectation_from_zero(b) - d.partial_expectation_from_zero(a);
            } else if constexpr (std::is_same_v<T, BetaMixture>) {
                double acc = 0.0;
                for (std::size_t k = 0; k < d.components.size(); ++k)
                    acc += d.weights[k] * (d.components[k].partial_expectation_from_zero(b) -
                                           d.components[k].partial_expectation_from_zero(a));
                return acc;
            } else {
                auto lo = std::upper_bound(d.scores.begin(), d.scores.end(), a);
                auto hi = std::upper_bound(d.scores.begin(), d.scores.end(), b);
                double acc = 0.0;
                for (auto it = lo; it != hi; ++it) acc += *it;
                return acc / static_cast<double>(d.scores.size());
            }
        },
        v_);
}

ScoreDistribution::Sampler::Sampler(const ScoreDistribution& d, std::uint64_t seed)
    : d_(&d), rng_(seed) {}

double ScoreDistribution::Sampler::next() {
    return std::visit(
        [&](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, BetaParams>) {
                return rng_.beta(d.alpha, d.beta);
            } else if constexpr (std::is_same_v<T, BetaMixture>) {
                const double u = rng_.uniform();
                double acc = 0.0;
                std::size_t k = 0;
                for (; k + 1 < d.components.size(); ++k) {
                    acc += d.weights[k];
                    if (u < acc) break;
                }
                return rng_.beta(d.components[k].alpha, d.components[k].beta);
            } else {
                const std::size_t i = static_cast<std::size_t>(
                    rng_.uniform() * static_cast<double>(d.scores.size()));
                return d.scores[std::min(i, d.scores.size() - 1)];
            }
        },
        d_->v_);
}

std::vector<double> ScoreDistribution::sample(std::size_t n, std::uint64_t seed) const {
    Sampler s(*this, seed);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(s.next());
    return out;
}

}  // namespace hil
