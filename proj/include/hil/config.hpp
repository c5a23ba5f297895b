#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hil/metrics.hpp"
#include "hil/sweep.hpp"

namespace hil {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class DistributionKind { Beta, BetaMixture, Empirical };

struct MixtureComponentSpec {
    double alpha;
    double beta;
    double weight;
};

struct DistributionSpec {
    DistributionKind kind = DistributionKind::BetaMixture;
    double alpha = 15.0;  // kind = beta
    double beta = 2.0;
    std::vector<MixtureComponentSpec> components;  // kind = beta_mixture
    std::string scores_file;                       // kind = empirical
    std::string label;

    /// Builds the distribution, reading the score file for the empirical
    /// kind. Malformed lines raise ConfigError with the line number.
    ScoreDistribution build(const std::filesystem::path& base_dir) const;
};

/// Full run configuration; defaults mirror the standard simulation setup
/// (N = 10,000, R = 100, 30x30 grid).
struct RunConfig {
    DistributionSpec distribution;
    GridSpec grid;
    std::size_t n = 10000;
    std::optional<std::size_t> mc_runs = 100;
    std::uint64_t base_seed = 0;
    bool resample_scores = true;
    ObjectiveSpec objective{ObjectiveKind::F1};
    std::optional<double> budget_fraction;
    std::string output_dir = "out";
    bool emit_svg = true;
    std::vector<std::string> heatmap_metrics = {"tp",  "f1",          "precision",
                                                "recall", "fn", "fp", "review_load"};

    std::filesystem::path base_dir = ".";  // for resolving relative paths

    static RunConfig from_file(const std::filesystem::path& path);
    static RunConfig from_string(const std::string& text,
                                 const std::filesystem::path& base_dir = ".");

    /// Fully-resolved key = value text (what --print-config emits and the
    /// manifest echoes).
    std::string resolved_text() const;
};

/// Newline-delimited decimal scores in [0,1]; '#' starts a comment line.
std::vector<double> read_score_file(const std::filesystem::path& path);

std::string objective_kind_name(ObjectiveKind k);
ObjectiveKind objective_kind_from_name(const std::string& name);

}  // namespace hil
