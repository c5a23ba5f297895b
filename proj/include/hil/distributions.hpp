#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "hil/rng.hpp"

namespace hil {

/// Regularized incomplete beta function I_x(a, b), continued-fraction
/// expansion with the symmetry switch at x > (a+1)/(a+b+2).
/// Throws std::domain_error outside 0 <= x <= 1 or for nonpositive shapes.
double reg_inc_beta(double x, double a, double b);

struct BetaParams {
    double alpha;
    double beta;

    BetaParams(double alpha, double beta);

    double mean() const { return alpha / (alpha + beta); }
    double pdf(double p) const;
    double cdf(double p) const;
    /// Integral of p * f(p) over [0, x]:  mean * I_x(alpha + 1, beta).
    double partial_expectation_from_zero(double x) const;

private:
    double log_norm_;  // log B(alpha, beta)
};

struct BetaMixture {
    std::vector<BetaParams> components;
    std::vector<double> weights;

    BetaMixture(std::vector<BetaParams> components, std::vector<double> weights);
};

struct EmpiricalScores {
    std::vector<double> scores;

    explicit EmpiricalScores(std::vector<double> scores);
};

/// A calibrated score model: exact density, CDF, partial expectation and
/// reproducible sampling over [0, 1]. Immutable after construction.
class ScoreDistribution {
public:
    using Variant = std::variant<BetaParams, BetaMixture, EmpiricalScores>;

    ScoreDistribution(BetaParams b) : v_(std::move(b)) {}
    ScoreDistribution(BetaMixture m) : v_(std::move(m)) {}
    ScoreDistribution(EmpiricalScores e);

    const Variant& variant() const { return v_; }

    double pdf(double p) const;
    double cdf(double p) const;
    /// Integral of p * f(p) over [a, b]; empirical variant sums scores in
    /// (a, b] exactly (a value of 0 contributes nothing either way).
    double partial_expectation(double a, double b) const;
    double mean() const { return partial_expectation(0.0, 1.0); }

    /// n draws, deterministic for a fixed seed.
    std::vector<double> sample(std::size_t n, std::uint64_t seed) const;
    class Sampler;  // streaming variant, see below

private:
    Variant v_;
    // Empirical display-only histogram (Freedman-Diaconis, >= 20 bins).
    std::vector<double> hist_edges_;
    std::vector<double> hist_density_;
};

/// Streaming per-draw sampler; one instance per thread/run.
class ScoreDistribution::Sampler {
public:
    Sampler(const ScoreDistribution& d, std::uint64_t seed);
    double next();

private:
    const ScoreDistribution* d_;
    hil::Sampler rng_;
};

}  // namespace hil
