#pragma once

#include <string>
#include <vector>

#include "hil/config.hpp"

namespace hil {

/// CLI command bodies. All writes happen after computation completes.
/// Errors surface as exceptions: ConfigError (exit 1), NoFeasiblePoint
/// (exit 2), IoError (exit 3).

void cmd_sweep(const RunConfig& cfg, std::size_t jobs,
               const std::string& command_name = "sweep");

void cmd_frontier(const RunConfig& cfg, const std::string& metric, std::size_t jobs);

void cmd_optimize(const RunConfig& cfg, std::size_t jobs);

void cmd_compare(const std::vector<RunConfig>& cfgs, const std::string& metric,
                 std::size_t jobs);

void cmd_scores(const RunConfig& cfg, std::size_t jobs);

}  // namespace hil
