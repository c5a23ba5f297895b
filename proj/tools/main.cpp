#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hil/commands.hpp"
#include "hil/frontier.hpp"
#include "hil/manifest.hpp"

namespace {

struct GlobalFlags {
    std::optional<std::uint64_t> seed;
    std::size_t jobs = 0;  // 0 = hardware parallelism
    std::optional<std::string> out;
    bool no_svg = false;
    bool print_config = false;
};

hil::RunConfig load_config(const std::string& path, const GlobalFlags& g) {
    hil::RunConfig cfg = hil::RunConfig::from_file(path);
    if (g.seed) cfg.base_seed = *g.seed;
    // --out is relative to the working directory, not the config file
    if (g.out) cfg.output_dir = std::filesystem::absolute(*g.out).string();
    if (g.no_svg) cfg.emit_svg = false;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hil — double-threshold human-in-the-loop policy optimizer"};
    app.set_version_flag("--version", std::string("hil ") + hil::kToolVersion);
    app.require_subcommand(1);

    GlobalFlags g;
    std::uint64_t seed_value = 0;
    auto* seed_opt = app.add_option("--seed", seed_value, "override the base seed");
    app.add_option("--jobs", g.jobs, "sweep worker count (0 = hardware)");
    std::string out_value;
    auto* out_opt = app.add_option("--out", out_value, "override the output directory");
    app.add_flag("--no-svg", g.no_svg, "skip SVG chart emission");
    app.add_flag("--print-config", g.print_config,
                 "print the fully-resolved config and exit");

    std::string config_path;
    std::vector<std::string> config_paths;
    std::string metric = "f1";
    std::optional<double> budget;
    double budget_value = 0.0;

    auto* sweep = app.add_subcommand("sweep", "evaluate the full threshold grid");
    sweep->add_option("--config", config_path, "run configuration file")->required();

    auto* frontier = app.add_subcommand("frontier", "extract the Pareto frontier");
    frontier->add_option("--config", config_path, "run configuration file")->required();
    frontier->add_option("--metric", metric, "f1 | precision | recall");

    auto* optimize = app.add_subcommand("optimize", "recommend thresholds under a budget");
    optimize->add_option("--config", config_path, "run configuration file")->required();
    auto* budget_opt =
        optimize->add_option("--budget", budget_value, "review budget fraction override");

    auto* compare = app.add_subcommand("compare", "overlay frontiers across regimes");
    compare->add_option("--config", config_paths, "configuration files (>= 2)")
        ->required()
        ->expected(-1);
    compare->add_option("--metric", metric, "f1 | precision | recall");

    auto* scores = app.add_subcommand("scores", "sweep over an empirical score file");
    scores->add_option("--config", config_path, "run configuration file")->required();

    // let global flags appear after the subcommand name
    for (auto* sub : {sweep, frontier, optimize, compare, scores}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // collapse CLI11's parse-error codes onto the documented usage code
        return app.exit(e) == 0 ? 0 : 1;
    }
    if (*seed_opt) g.seed = seed_value;
    if (*out_opt) g.out = out_value;
    if (*budget_opt) budget = budget_value;

    try {
        if (compare->parsed()) {
            std::vector<hil::RunConfig> cfgs;
            for (const auto& p : config_paths) cfgs.push_back(load_config(p, g));
            if (g.print_config) {
                for (const auto& c : cfgs) std::cout << c.resolved_text() << "---\n";
                return 0;
            }
            hil::cmd_compare(cfgs, metric, g.jobs);
            return 0;
        }
        hil::RunConfig cfg = load_config(config_path, g);
        if (budget) cfg.budget_fraction = budget;
        if (g.print_config) {
            std::cout << cfg.resolved_text();
            return 0;
        }
        if (sweep->parsed()) hil::cmd_sweep(cfg, g.jobs);
        else if (frontier->parsed()) hil::cmd_frontier(cfg, metric, g.jobs);
        else if (optimize->parsed()) hil::cmd_optimize(cfg, g.jobs);
        else if (scores->parsed()) hil::cmd_scores(cfg, g.jobs);
        return 0;
    } catch (const hil::NoFeasiblePoint& e) {
        std::cerr << "hil: " << e.what() << "\n";
        return 2;
    } catch (const hil::IoError& e) {
        std::cerr << "hil: " << e.what() << "\n";
        return 3;
    } catch (const hil::ConfigError& e) {
        std::cerr << "hil: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "hil: " << e.what() << "\n";
        return 1;
    }
}
