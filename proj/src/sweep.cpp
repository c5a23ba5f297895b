#include "hil/sweep.hpp"

#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>

namespace hil {

namespace {

std::vector<double> axis_values(std::size_t count, double min, double max) {
    std::vector<double> v;
    v.reserve(count);
    if (count == 1) {
        v.push_back(min);
        return v;
    }
    const double step = (max - min) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i)
        v.push_back(i + 1 == count ? max : min + step * static_cast<double>(i));
    return v;
}

}  // namespace

void GridSpec::validate() const {
    if (tau_l_count < 1 || tau_u_count < 1)
        throw std::invalid_argument("GridSpec: axis counts must be >= 1");
    auto check_axis = [](double lo, double hi, const char* name) {
        if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi))
            throw std::invalid_argument(std::string("GridSpec: bad ") + name + " range");
    };
    check_axis(tau_l_min, tau_l_max, "tau_l");
    check_axis(tau_u_min, tau_u_max, "tau_u");
    if (tau_l_count == 1 && tau_l_min != tau_l_max)
        throw std::invalid_argument("GridSpec: single-point tau_l axis needs min == max");
    if (tau_u_count == 1 && tau_u_min != tau_u_max)
        throw std::invalid_argument("GridSpec: single-point tau_u axis needs min == max");
}

std::vector<ThresholdPair> make_grid(const GridSpec& g) {
    g.validate();
    const auto lows = axis_values(g.tau_l_count, g.tau_l_min, g.tau_l_max);
    const auto highs = axis_values(g.tau_u_count, g.tau_u_min, g.tau_u_max);
    std::vector<ThresholdPair> pairs;
    pairs.reserve(lows.size() * highs.size());
    for (double lo : lows)
        for (double hi : highs)
            if (lo <= hi) pairs.emplace_back(lo, hi);
    return pairs;
}

SweepResult run_sweep(const ScoreDistribution& d, const GridSpec& g, std::size_t n,
                      std::optional<std::size_t> mc_runs, std::uint64_t base_seed,
                      std::size_t jobs, bool resample_scores) {
    g.validate();
    if (n < 1) throw std::invalid_argument("run_sweep: n must be >= 1");

    const auto lows = axis_values(g.tau_l_count, g.tau_l_min, g.tau_l_max);
    const auto highs = axis_values(g.tau_u_count, g.tau_u_min, g.tau_u_max);

    struct Cell {
        std::size_t grid_index;
        ThresholdPair t;
    };
    std::vector<Cell> cells;
    cells.reserve(lows.size() * highs.size());
    std::size_t excluded = 0;
    for (std::size_t i = 0; i < lows.size(); ++i) {
        for (std::size_t j = 0; j < highs.size(); ++j) {
            if (lows[i] <= highs[j])
                cells.push_back({i * highs.size() + j, ThresholdPair(lows[i], highs[j])});
            else
                ++excluded;
        }
    }

    std::vector<OperatingPoint> points(cells.size());
    auto eval_cell = [&](std::size_t k) {
        const Cell& cell = cells[k];
        OperatingPoint op;
        op.grid_index = cell.grid_index;
        op.thresholds = cell.t;
        op.analytic = analytic_expectation(d, cell.t, n);
        op.analytic_metrics = derive_metrics(op.analytic);
        if (mc_runs)
            op.mc = monte_carlo_f1(d, cell.t, n, *mc_runs,
                                   split_seed(base_seed, cell.grid_index),
                                   resample_scores);
        points[k] = std::move(op);
    };

    std::size_t workers = jobs == 0 ? std::thread::hardware_concurrency() : jobs;
    if (workers == 0) workers = 1;
    workers = std::min(workers, cells.size() == 0 ? std::size_t{1} : cells.size());

    if (workers <= 1) {
        for (std::size_t k = 0; k < cells.size(); ++k) eval_cell(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t k = next.fetch_add(1);
                    if (k >= cells.size()) return;
                    eval_cell(k);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    SweepResult result;
    result.points = std::move(points);
    result.excluded_pairs = excluded;
    result.grid = g;
    result.n = n;
    result.mc_runs = mc_runs;
    result.base_seed = base_seed;
    return result;
}

}  // namespace hil
