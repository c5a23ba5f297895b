#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hil/frontier.hpp"

namespace hil {

/// Self-contained SVG charts, fixed 960x720 viewbox, no external assets.

struct HeatmapData {
    std::vector<double> tau_l_values;             // x axis
    std::vector<double> tau_u_values;             // y axis
    std::vector<std::optional<double>> values;    // row-major by (tau_l, tau_u)
    std::string title;
    std::string value_label;
    bool percent = false;  // format labels as percentages
};

std::string render_heatmap(const HeatmapData& data);

struct ScatterFrontierData {
    std::vector<std::pair<double, double>> points;  // (review fraction, metric)
    std::vector<FrontierPoint> frontier;
    std::string title;
    std::string y_label;
    std::size_t annotate_knees = 3;  // largest second-difference frontier points
};

std::string render_scatter_frontier(const ScatterFrontierData& data);

struct CompareData {
    std::vector<std::pair<std::string, std::vector<FrontierPoint>>> labeled_frontiers;
    std::string title;
    std::string y_label;
};

std::string render_compare(const CompareData& data);

}  // namespace hil
