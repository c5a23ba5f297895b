#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hil/frontier.hpp"
#include "hil/sweep.hpp"

namespace hil {

/// Shortest-roundtrip-ish fixed formatting; '.' decimal separator,
/// independent of locale. Undefined values serialize as empty fields.
std::string csv_number(double v);
std::string csv_number(std::optional<double> v);

/// Columns: tau_l, tau_u, tp, fp, tn, fn, review_load, review_fraction,
/// accuracy, precision, recall, f1, mc_mean_f1, mc_std_f1, mc_runs_excluded.
/// Row order is row-major by (tau_l index, tau_u index); LF line endings.
void write_sweep_csv(std::ostream& out, const SweepResult& sweep);

/// Columns: review_fraction, metric_value, tau_l, tau_u.
void write_frontier_csv(std::ostream& out, const std::vector<FrontierPoint>& frontier);

/// Overlaid frontiers; columns: label, review_fraction, metric_value, tau_l, tau_u.
void write_compare_csv(std::ostream& out,
                       const std::vector<std::pair<std::string, std::vector<FrontierPoint>>>&
                           labeled_frontiers);

}  // namespace hil
