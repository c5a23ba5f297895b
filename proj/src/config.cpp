#include "hil/config.hpp"

#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hil {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& s, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid number for '" + key + "': " + s);
    }
}

std::size_t parse_count(const std::string& s, const std::string& key) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size() || v < 0) throw std::invalid_argument(s);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw ConfigError("invalid count for '" + key + "': " + s);
    }
}

std::uint64_t parse_u64(const std::string& s, const std::string& key) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ConfigError("invalid 64-bit seed for '" + key + "': " + s);
    return v;
}

bool parse_bool(const std::string& s, const std::string& key) {
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw ConfigError("invalid flag for '" + key + "': " + s);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string objective_kind_name(ObjectiveKind k) {
    switch (k) {
        case ObjectiveKind::ExpectedTp: return "expected_tp";
        case ObjectiveKind::CorrectDecisions: return "correct_decisions";
        case ObjectiveKind::F1: return "f1";
        case ObjectiveKind::Precision: return "precision";
        case ObjectiveKind::Recall: return "recall";
        case ObjectiveKind::WeightedCost: return "weighted_cost";
    }
    return "f1";
}

ObjectiveKind objective_kind_from_name(const std::string& name) {
    if (name == "expected_tp") return ObjectiveKind::ExpectedTp;
    if (name == "correct_decisions") return ObjectiveKind::CorrectDecisions;
    if (name == "f1") return ObjectiveKind::F1;
    if (name == "precision") return ObjectiveKind::Precision;
    if (name == "recall") return ObjectiveKind::Recall;
    if (name == "weighted_cost") return ObjectiveKind::WeightedCost;
    throw ConfigError("unknown objective kind: " + name);
}

std::vector<double> read_score_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open score file: " + path.string());
    std::vector<double> scores;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        double v = 0.0;
        try {
            std::size_t pos = 0;
            v = std::stod(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
        } catch (const std::exception&) {
            throw ConfigError("score file " + path.string() + ": malformed line " +
                              std::to_string(lineno) + ": " + s);
        }
        if (!(v >= 0.0 && v <= 1.0))
            throw ConfigError("score file " + path.string() + ": value out of [0,1]: " + s);
        scores.push_back(v);
    }
    if (scores.empty())
        throw ConfigError("score file " + path.string() + ": no scores");
    return scores;
}

ScoreDistribution DistributionSpec::build(const std::filesystem::path& base_dir) const {
    switch (kind) {
        case DistributionKind::Beta:
            return ScoreDistribution(BetaParams(alpha, beta));
        case DistributionKind::BetaMixture: {
            std::vector<BetaParams> comps;
            std::vector<double> weights;
            for (const auto& c : components) {
                comps.emplace_back(c.alpha, c.beta);
                weights.push_back(c.weight);
            }
            return ScoreDistribution(BetaMixture(std::move(comps), std::move(weights)));
        }
        case DistributionKind::Empirical: {
            std::filesystem::path p(scores_file);
            if (p.is_relative()) p = base_dir / p;
            return ScoreDistribution(EmpiricalScores(read_score_file(p)));
        }
    }
    throw ConfigError("invalid distribution kind");
}

RunConfig RunConfig::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return from_string(buf.str(), path.has_parent_path() ? path.parent_path() : ".");
}

RunConfig RunConfig::from_string(const std::string& text,
                                 const std::filesystem::path& base_dir) {
    RunConfig cfg;
    cfg.base_dir = base_dir;
    cfg.distribution.components.clear();
    bool heatmaps_set = false;

    std::istringstream in(text);
    std::string line, section;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#' || s[0] == ';') continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw ConfigError("config line " + std::to_string(lineno) + ": bad section");
            section = trim(s.substr(1, s.size() - 2));
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));

        if (section == "distribution") {
            if (key == "kind") {
                if (value == "beta")
                    cfg.distribution.kind = DistributionKind::Beta;
                else if (value == "beta_mixture")
                    cfg.distribution.kind = DistributionKind::BetaMixture;
                else if (value == "empirical")
                    cfg.distribution.kind = DistributionKind::Empirical;
                else
                    throw ConfigError("unknown distribution kind: " + value);
            } else if (key == "alpha") {
                cfg.distribution.alpha = parse_double(value, key);
            } else if (key == "beta") {
                cfg.distribution.beta = parse_double(value, key);
            } else if (key == "component") {
                const auto parts = split_ws(value);
                if (parts.size() != 3)
                    throw ConfigError("component expects 'alpha beta weight': " + value);
                cfg.distribution.components.push_back({parse_double(parts[0], key),
                                                       parse_double(parts[1], key),
                                                       parse_double(parts[2], key)});
            } else if (key == "scores_file") {
                cfg.distribution.scores_file = value;
            } else if (key == "label") {
                cfg.distribution.label = value;
            } else {
                throw ConfigError("unknown key in [distribution]: " + key);
            }
        } else if (section == "grid") {
            if (key == "tau_l_count") cfg.grid.tau_l_count = parse_count(value, key);
            else if (key == "tau_l_min") cfg.grid.tau_l_min = parse_double(value, key);
            else if (key == "tau_l_max") cfg.grid.tau_l_max = parse_double(value, key);
            else if (key == "tau_u_count") cfg.grid.tau_u_count = parse_count(value, key);
            else if (key == "tau_u_min") cfg.grid.tau_u_min = parse_double(value, key);
            else if (key == "tau_u_max") cfg.grid.tau_u_max = parse_double(value, key);
            else throw ConfigError("unknown key in [grid]: " + key);
        } else if (section == "run") {
            if (key == "n") cfg.n = parse_count(value, key);
            else if (key == "mc_runs") {
                if (value == "none")
                    cfg.mc_runs.reset();
                else
                    cfg.mc_runs = parse_count(value, key);
            } else if (key == "seed") cfg.base_seed = parse_u64(value, key);
            else if (key == "resample_scores") cfg.resample_scores = parse_bool(value, key);
            else throw ConfigError("unknown key in [run]: " + key);
        } else if (section == "objective") {
            if (key == "kind") cfg.objective.kind = objective_kind_from_name(value);
            else if (key == "w_fp") cfg.objective.w_fp = parse_double(value, key);
            else if (key == "w_fn") cfg.objective.w_fn = parse_double(value, key);
            else if (key == "w_review") cfg.objective.w_review = parse_double(value, key);
            else throw ConfigError("unknown key in [objective]: " + key);
        } else if (section == "optimize") {
            if (key == "budget_fraction") cfg.budget_fraction = parse_double(value, key);
            else throw ConfigError("unknown key in [optimize]: " + key);
        } else if (section == "output") {
            if (key == "dir") cfg.output_dir = value;
            else if (key == "svg") cfg.emit_svg = parse_bool(value, key);
            else if (key == "heatmap_metrics") {
                cfg.heatmap_metrics = split_ws(value);
                heatmaps_set = true;
            } else throw ConfigError("unknown key in [output]: " + key);
        } else {
            throw ConfigError("unknown section [" + section + "]");
        }
    }

    // defaults that depend on other keys
    if (cfg.distribution.kind == DistributionKind::BetaMixture &&
        cfg.distribution.components.empty()) {
        cfg.distribution.components = {{15.0, 2.0, 0.5}, {2.0, 15.0, 0.5}};
    }
    if (cfg.distribution.label.empty()) {
        switch (cfg.distribution.kind) {
            case DistributionKind::Beta: cfg.distribution.label = "beta"; break;
            case DistributionKind::BetaMixture: cfg.distribution.label = "beta_mixture"; break;
            case DistributionKind::Empirical: cfg.distribution.label = "empirical"; break;
        }
    }
    if (cfg.distribution.kind == DistributionKind::Empirical &&
        cfg.distribution.scores_file.empty())
        throw ConfigError("empirical distribution requires scores_file");
    (void)heatmaps_set;

    if (cfg.budget_fraction && !(*cfg.budget_fraction >= 0.0 && *cfg.budget_fraction <= 1.0))
        throw ConfigError("budget_fraction outside [0,1]");
    if (cfg.n < 1) throw ConfigError("n must be >= 1");
    if (cfg.mc_runs && *cfg.mc_runs < 1) throw ConfigError("mc_runs must be >= 1 or none");
    try {
        cfg.grid.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

std::string RunConfig::resolved_text() const {
    std::ostringstream out;
    out << "[distribution]\n";
    switch (distribution.kind) {
        case DistributionKind::Beta:
            out << "kind = beta\n";
            out << "alpha = " << format_double(distribution.alpha) << "\n";
            out << "beta = " << format_double(distribution.beta) << "\n";
            break;
        case DistributionKind::BetaMixture:
            out << "kind = beta_mixture\n";
            for (const auto& c : distribution.components)
                out << "component = " << format_double(c.alpha) << " "
                    << format_double(c.beta) << " " << format_double(c.weight) << "\n";
            break;
        case DistributionKind::Empirical:
            out << "kind = empirical\n";
            out << "scores_file = " << distribution.scores_file << "\n";
            break;
    }
    out << "label = " << distribution.label << "\n";
    out << "\n[grid]\n";
    out << "tau_l_count = " << grid.tau_l_count << "\n";
    out << "tau_l_min = " << format_double(grid.tau_l_min) << "\n";
    out << "tau_l_max = " << format_double(grid.tau_l_max) << "\n";
    out << "tau_u_count = " << grid.tau_u_count << "\n";
    out << "tau_u_min = " << format_double(grid.tau_u_min) << "\n";
    out << "tau_u_max = " << format_double(grid.tau_u_max) << "\n";
    out << "\n[run]\n";
    out << "n = " << n << "\n";
    if (mc_runs)
        out << "mc_runs = " << *mc_runs << "\n";
    else
        out << "mc_runs = none\n";
    out << "seed = " << base_seed << "\n";
    out << "resample_scores = " << (resample_scores ? "true" : "false") << "\n";
    out << "\n[objective]\n";
    out << "kind = " << objective_kind_name(objective.kind) << "\n";
    if (objective.kind == ObjectiveKind::WeightedCost) {
        out << "w_fp = " << format_double(objective.w_fp) << "\n";
        out << "w_fn = " << format_double(objective.w_fn) << "\n";
        out << "w_review = " << format_double(objective.w_review) << "\n";
    }
    if (budget_fraction) {
        out << "\n[optimize]\n";
        out << "budget_fraction = " << format_double(*budget_fraction) << "\n";
    }
    out << "\n[output]\n";
    out << "dir = " << output_dir << "\n";
    out << "svg = " << (emit_svg ? "true" : "false") << "\n";
    out << "heatmap_metrics =";
    for (const auto& m : heatmap_metrics) out << " " << m;
    out << "\n";
    return out.str();
}

}  // namespace hil
