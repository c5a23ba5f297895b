#include "hil/csv.hpp"

#include <cstdio>

namespace hil {

std::string csv_number(double v) {
    char buf[64];
    // %.17g round-trips doubles exactly; trailing noise is acceptable in
    // exchange for byte-stable diffing.
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_number(std::optional<double> v) {
    return v ? csv_number(*v) : std::string();
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep) {
    out << "tau_l,tau_u,tp,fp,tn,fn,review_load,review_fraction,accuracy,"
           "precision,recall,f1,mc_mean_f1,mc_std_f1,mc_runs_excluded\n";
    for (const auto& op : sweep.points) {
        const auto& c = op.analytic;
        const auto& m = op.analytic_metrics;
        out << csv_number(op.thresholds.tau_l) << ',' << csv_number(op.thresholds.tau_u)
            << ',' << csv_number(c.tp) << ',' << csv_number(c.fp) << ','
            << csv_number(c.tn) << ',' << csv_number(c.fn) << ','
            << csv_number(c.review_load) << ',' << csv_number(m.review_fraction) << ','
            << csv_number(m.accuracy) << ',' << csv_number(m.precision) << ','
            << csv_number(m.recall) << ',' << csv_number(m.f1) << ',';
        if (op.mc) {
            const bool has_mean = op.mc->excluded_runs < op.mc->runs;
            out << (has_mean ? csv_number(op.mc->mean_f1) : std::string()) << ','
                << (has_mean ? csv_number(op.mc->std_f1) : std::string()) << ','
                << op.mc->excluded_runs;
        } else {
            out << ",,";
        }
        out << '\n';
    }
}

void write_frontier_csv(std::ostream& out, const std::vector<FrontierPoint>& frontier) {
    out << "review_fraction,metric_value,tau_l,tau_u\n";
    for (const auto& p : frontier)
        out << csv_number(p.review_fraction) << ',' << csv_number(p.metric_value) << ','
            << csv_number(p.thresholds.tau_l) << ',' << csv_number(p.thresholds.tau_u)
            << '\n';
}

void write_compare_csv(std::ostream& out,
                       const std::vector<std::pair<std::string, std::vector<FrontierPoint>>>&
                           labeled_frontiers) {
    out << "label,review_fraction,metric_value,tau_l,tau_u\n";
    for (const auto& [label, frontier] : labeled_frontiers)
        for (const auto& p : frontier)
            out << label << ',' << csv_number(p.review_fraction) << ','
                << csv_number(p.metric_value) << ',' << csv_number(p.thresholds.tau_l)
                << ',' << csv_number(p.thresholds.tau_u) << '\n';
}

}  // namespace hil
