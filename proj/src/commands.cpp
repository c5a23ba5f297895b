#include "hil/commands.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "hil/csv.hpp"
#include "hil/manifest.hpp"
#include "hil/svg.hpp"
#include "json.hpp"

namespace hil {

namespace {

namespace fs = std::filesystem;

fs::path ensure_output_dir(const RunConfig& cfg) {
    fs::path dir(cfg.output_dir);
    if (dir.is_relative()) dir = cfg.base_dir / dir;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory: " + dir.string());
    return dir;
}

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write: " + path.string());
    out << text;
    if (!out) throw IoError("write failed: " + path.string());
}

std::vector<double> axis_values(std::size_t count, double lo, double hi) {
    std::vector<double> v(count);
    for (std::size_t i = 0; i < count; ++i)
        v[i] = count == 1 ? lo
                          : (i + 1 == count ? hi
                                            : lo + (hi - lo) * static_cast<double>(i) /
                                                       static_cast<double>(count - 1));
    return v;
}

struct HeatmapMetric {
    std::string value_label;
    bool percent;
    std::function<std::optional<double>(const OperatingPoint&)> get;
};

HeatmapMetric heatmap_metric(const std::string& name, std::size_t n) {
    const double nn = static_cast<double>(n);
    if (name == "tp")
        return {"expected true positives (%)", true,
                [nn](const OperatingPoint& p) { return p.analytic.tp / nn; }};
    if (name == "fp")
        return {"expected false positives (%)", true,
                [nn](const OperatingPoint& p) { return p.analytic.fp / nn; }};
    if (name == "fn")
        return {"expected false negatives (%)", true,
                [nn](const OperatingPoint& p) { return p.analytic.fn / nn; }};
    if (name == "tn")
        return {"expected true negatives (%)", true,
                [nn](const OperatingPoint& p) { return p.analytic.tn / nn; }};
    if (name == "review_load")
        return {"expected human review load (%)", true, [](const OperatingPoint& p) {
                    return p.analytic_metrics.review_fraction;
                }};
    if (name == "accuracy")
        return {"expected accuracy", false,
                [](const OperatingPoint& p) { return p.analytic_metrics.accuracy; }};
    if (name == "f1")
        return {"expected F1", false,
                [](const OperatingPoint& p) { return p.analytic_metrics.f1; }};
    if (name == "precision")
        return {"expected precision", false,
                [](const OperatingPoint& p) { return p.analytic_metrics.precision; }};
    if (name == "recall")
        return {"expected recall", false,
                [](const OperatingPoint& p) { return p.analytic_metrics.recall; }};
    throw ConfigError("unknown heatmap metric: " + name);
}

std::string sweep_csv_text(const SweepResult& sweep) {
    std::ostringstream out;
    write_sweep_csv(out, sweep);
    return out.str();
}

SweepResult run_configured_sweep(const RunConfig& cfg, std::size_t jobs, bool with_mc) {
    const ScoreDistribution d = cfg.distribution.build(cfg.base_dir);
    SweepResult sweep = run_sweep(d, cfg.grid, cfg.n, with_mc ? cfg.mc_runs : std::nullopt,
                                  cfg.base_seed, jobs, cfg.resample_scores);
    sweep.distribution_label = cfg.distribution.label;
    return sweep;
}

ObjectiveKind frontier_metric_kind(const std::string& metric) {
    if (metric == "f1") return ObjectiveKind::F1;
    if (metric == "precision") return ObjectiveKind::Precision;
    if (metric == "recall") return ObjectiveKind::Recall;
    throw ConfigError("frontier metric must be f1, precision or recall; got: " + metric);
}

}  // namespace

void cmd_sweep(const RunConfig& cfg, std::size_t jobs, const std::string& command_name) {
    const SweepResult sweep = run_configured_sweep(cfg, jobs, true);
    const fs::path dir = ensure_output_dir(cfg);

    std::vector<fs::path> artifacts;
    const fs::path csv_path = dir / "sweep.csv";
    write_text_file(csv_path, sweep_csv_text(sweep));
    artifacts.push_back(csv_path);

    if (cfg.emit_svg) {
        const auto lows = axis_values(cfg.grid.tau_l_count, cfg.grid.tau_l_min,
                                      cfg.grid.tau_l_max);
        const auto highs = axis_values(cfg.grid.tau_u_count, cfg.grid.tau_u_min,
                                       cfg.grid.tau_u_max);
        for (const auto& name : cfg.heatmap_metrics) {
            const HeatmapMetric metric = heatmap_metric(name, cfg.n);
            HeatmapData data;
            data.tau_l_values = lows;
            data.tau_u_values = highs;
            data.values.assign(lows.size() * highs.size(), std::nullopt);
            for (const auto& op : sweep.points)
                data.values[op.grid_index] = metric.get(op);
            data.title = metric.value_label + " — " + sweep.distribution_label;
            data.value_label = name;
            data.percent = metric.percent;
            const fs::path svg_path = dir / ("heatmap_" + name + ".svg");
            write_text_file(svg_path, render_heatmap(data));
            artifacts.push_back(svg_path);
        }
    }
    write_manifest(dir / "sweep_manifest.json", command_name, cfg.resolved_text(),
                   artifacts);
}

void cmd_frontier(const RunConfig& cfg, const std::string& metric, std::size_t jobs) {
    ObjectiveSpec objective;
    objective.kind = frontier_metric_kind(metric);

    const SweepResult sweep = run_configured_sweep(cfg, jobs, false);
    const auto candidates = frontier_candidates(sweep, objective);
    if (candidates.empty())
        throw ConfigError("frontier: metric '" + metric + "' undefined at every point");
    const auto frontier = pareto_frontier(candidates);

    const fs::path dir = ensure_output_dir(cfg);
    std::vector<fs::path> artifacts;
    const fs::path csv_path = dir / "frontier.csv";
    {
        std::ostringstream out;
        write_frontier_csv(out, frontier);
        write_text_file(csv_path, out.str());
    }
    artifacts.push_back(csv_path);

    if (cfg.emit_svg) {
        ScatterFrontierData data;
        for (const auto& c : candidates)
            data.points.push_back({c.review_fraction, c.metric_value});
        data.frontier = frontier;
        data.title = "Pareto frontier: " + metric + " vs review load — " +
                     sweep.distribution_label;
        data.y_label = "expected " + metric;
        const fs::path svg_path = dir / "scatter_frontier.svg";
        write_text_file(svg_path, render_scatter_frontier(data));
        artifacts.push_back(svg_path);
    }
    write_manifest(dir / "frontier_manifest.json", "frontier", cfg.resolved_text(),
                   artifacts);
}

void cmd_optimize(const RunConfig& cfg, std::size_t jobs) {
    if (!cfg.budget_fraction)
        throw ConfigError("optimize: budget_fraction required ([optimize] section)");

    const SweepResult sweep = run_configured_sweep(cfg, jobs, false);
    BudgetQuery q;
    q.budget_fraction = *cfg.budget_fraction;
    q.objective = cfg.objective;
    const Recommendation rec = optimize_under_budget(sweep, q);

    const fs::path dir = ensure_output_dir(cfg);
    nlohmann::json j;
    j["thresholds"] = {{"tau_l", rec.thresholds.tau_l}, {"tau_u", rec.thresholds.tau_u}};
    j["objective"] = objective_kind_name(cfg.objective.kind);
    j["value"] = rec.objective_value;
    j["review_fraction"] = rec.review_fraction;
    j["budget_fraction"] = *cfg.budget_fraction;
    j["binding"] = rec.binding;
    const fs::path rec_path = dir / "recommendation.json";
    write_text_file(rec_path, j.dump(2) + "\n");
    write_manifest(dir / "optimize_manifest.json", "optimize", cfg.resolved_text(),
                   {rec_path});
}

void cmd_compare(const std::vector<RunConfig>& cfgs, const std::string& metric,
                 std::size_t jobs) {
    if (cfgs.size() < 2) throw ConfigError("compare: needs at least 2 configs");
    const GridSpec& g0 = cfgs.front().grid;
    for (const auto& cfg : cfgs) {
        const GridSpec& g = cfg.grid;
        if (g.tau_l_count != g0.tau_l_count || g.tau_u_count != g0.tau_u_count ||
            g.tau_l_min != g0.tau_l_min || g.tau_l_max != g0.tau_l_max ||
            g.tau_u_min != g0.tau_u_min || g.tau_u_max != g0.tau_u_max)
            throw ConfigError("compare: all configs must use identical grids");
    }

    ObjectiveSpec objective;
    objective.kind = frontier_metric_kind(metric);

    std::vector<std::pair<std::string, std::vector<FrontierPoint>>> labeled;
    std::string echo;
    for (const auto& cfg : cfgs) {
        const SweepResult sweep = run_configured_sweep(cfg, jobs, false);
        const auto candidates = frontier_candidates(sweep, objective);
        if (candidates.empty())
            throw ConfigError("compare: metric undefined at every point for " +
                              cfg.distribution.label);
        labeled.push_back({cfg.distribution.label, pareto_frontier(candidates)});
        echo += cfg.resolved_text() + "\n---\n";
    }

    const fs::path dir = ensure_output_dir(cfgs.front());
    std::vector<fs::path> artifacts;
    const fs::path csv_path = dir / "frontiers_compare.csv";
    {
        std::ostringstream out;
        write_compare_csv(out, labeled);
        write_text_file(csv_path, out.str());
    }
    artifacts.push_back(csv_path);

    if (cfgs.front().emit_svg) {
        CompareData data;
        data.labeled_frontiers = labeled;
        data.title = "Pareto frontiers across score regimes (" + metric + ")";
        data.y_label = "expected " + metric;
        const fs::path svg_path = dir / "frontiers_compare.svg";
        write_text_file(svg_path, render_compare(data));
        artifacts.push_back(svg_path);
    }
    write_manifest(dir / "compare_manifest.json", "compare", echo, artifacts);
}

void cmd_scores(const RunConfig& cfg, std::size_t jobs) {
    if (cfg.distribution.kind != DistributionKind::Empirical)
        throw ConfigError("scores: config must use an empirical distribution");
    cmd_sweep(cfg, jobs, "scores");
}

}  // namespace hil
