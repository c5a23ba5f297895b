#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hil/metrics.hpp"

namespace hil {

/// Inclusive uniform grid per axis.
struct GridSpec {
    std::size_t tau_l_count = 30;
    double tau_l_min = 0.01;
    double tau_l_max = 0.50;
    std::size_t tau_u_count = 30;
    double tau_u_min = 0.50;
    double tau_u_max = 0.99;

    void validate() const;
};

struct OperatingPoint {
    std::size_t grid_index = 0;  // row-major over the full grid, dropped pairs included
    ThresholdPair thresholds{0.0, 1.0};
    ConfusionExpectation analytic;
    DerivedMetrics analytic_metrics;
    std::optional<MonteCarloEstimate> mc;
};

struct SweepResult {
    std::vector<OperatingPoint> points;  // row-major by (tau_l index, tau_u index)
    std::size_t excluded_pairs = 0;      // grid pairs with tau_l > tau_u
    GridSpec grid;
    std::size_t n = 0;
    std::optional<std::size_t> mc_runs;
    std::uint64_t base_seed = 0;
    std::string distribution_label;
};

/// Cartesian product of the two axes, row-major; pairs with tau_l > tau_u
/// are dropped.
std::vector<ThresholdPair> make_grid(const GridSpec& g);

/// Evaluate every grid pair. Analytic expectations always; Monte Carlo when
/// mc_runs is set, with the per-point seed split_seed(base_seed, grid_index)
/// so any subset of the grid reproduces identically. jobs == 0 means
/// hardware parallelism; results are identical to sequential evaluation.
SweepResult run_sweep(const ScoreDistribution& d, const GridSpec& g, std::size_t n,
                      std::optional<std::size_t> mc_runs, std::uint64_t base_seed,
                      std::size_t jobs = 0, bool resample_scores = true);

}  // namespace hil
