#include "hil/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace hil {

namespace {

constexpr double kWidth = 960.0;
constexpr double kHeight = 720.0;
constexpr double kLeft = 90.0;
constexpr double kRight = 140.0;  // room for the color bar / legend
constexpr double kTop = 60.0;
constexpr double kBottom = 70.0;
constexpr double kPlotW = kWidth - kLeft - kRight;
constexpr double kPlotH = kHeight - kTop - kBottom;

std::string fmt(double v, const char* spec = "%.4g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string fmt_label(double v, bool percent) {
    return percent ? fmt(100.0 * v, "%.3g") + "%" : fmt(v);
}

// Sequential YlGnBu-style palette, t in [0,1].
std::string palette(double t) {
    static const int stops[][3] = {
        {255, 255, 217}, {199, 233, 180}, {65, 182, 196}, {34, 94, 168}, {8, 29, 88}};
    constexpr int n = 5;
    t = std::clamp(t, 0.0, 1.0);
    const double x = t * (n - 1);
    const int i = std::min(n - 2, static_cast<int>(x));
    const double f = x - i;
    char buf[16];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                  static_cast<int>(std::lround(stops[i][0] + f * (stops[i + 1][0] - stops[i][0]))),
                  static_cast<int>(std::lround(stops[i][1] + f * (stops[i + 1][1] - stops[i][1]))),
                  static_cast<int>(std::lround(stops[i][2] + f * (stops[i + 1][2] - stops[i][2]))));
    return buf;
}

void svg_open(std::ostringstream& out, const std::string& title) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 960 720\" "
           "font-family=\"sans-serif\">\n";
    out << "<rect width=\"960\" height=\"720\" fill=\"white\"/>\n";
    out << "<text x=\"480\" y=\"34\" text-anchor=\"middle\" font-size=\"20\">" << title
        << "</text>\n";
}

void axes_frame(std::ostringstream& out) {
    out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kPlotW
        << "\" height=\"" << kPlotH << "\" fill=\"none\" stroke=\"#333\"/>\n";
}

void axis_labels(std::ostringstream& out, const std::string& x_label,
                 const std::string& y_label) {
    out << "<text x=\"" << (kLeft + kPlotW / 2) << "\" y=\"" << (kHeight - 18)
        << "\" text-anchor=\"middle\" font-size=\"16\">" << x_label << "</text>\n";
    out << "<text x=\"24\" y=\"" << (kTop + kPlotH / 2)
        << "\" text-anchor=\"middle\" font-size=\"16\" transform=\"rotate(-90 24 "
        << (kTop + kPlotH / 2) << ")\">" << y_label << "</text>\n";
}

// Linear ticks for a [lo, hi] axis; returns (position fraction, label).
std::vector<std::pair<double, std::string>> linear_ticks(double lo, double hi, int count,
                                                         bool percent = false) {
    std::vector<std::pair<double, std::string>> ticks;
    if (hi <= lo) {
        ticks.push_back({0.5, fmt_label(lo, percent)});
        return ticks;
    }
    for (int i = 0; i < count; ++i) {
        const double v = lo + (hi - lo) * i / (count - 1);
        ticks.push_back({static_cast<double>(i) / (count - 1), fmt_label(v, percent)});
    }
    return ticks;
}

void draw_ticks(std::ostringstream& out,
                const std::vector<std::pair<double, std::string>>& x_ticks,
                const std::vector<std::pair<double, std::string>>& y_ticks) {
    for (const auto& [frac, label] : x_ticks) {
        const double x = kLeft + frac * kPlotW;
        out << "<line x1=\"" << x << "\" y1=\"" << (kTop + kPlotH) << "\" x2=\"" << x
            << "\" y2=\"" << (kTop + kPlotH + 6) << "\" stroke=\"#333\"/>\n";
        out << "<text x=\"" << x << "\" y=\"" << (kTop + kPlotH + 24)
            << "\" text-anchor=\"middle\" font-size=\"13\">" << label << "</text>\n";
    }
    for (const auto& [frac, label] : y_ticks) {
        const double y = kTop + kPlotH - frac * kPlotH;
        out << "<line x1=\"" << (kLeft - 6) << "\" y1=\"" << y << "\" x2=\"" << kLeft
            << "\" y2=\"" << y << "\" stroke=\"#333\"/>\n";
        out << "<text x=\"" << (kLeft - 10) << "\" y=\"" << (y + 4)
            << "\" text-anchor=\"end\" font-size=\"13\">" << label << "</text>\n";
    }
}

}  // namespace

std::string render_heatmap(const HeatmapData& data) {
    const std::size_t nx = data.tau_l_values.size();
    const std::size_t ny = data.tau_u_values.size();
    std::ostringstream out;
    svg_open(out, data.title);

    // per-panel normalization over defined cells
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& v : data.values) {
        if (!v) continue;
        lo = std::min(lo, *v);
        hi = std::max(hi, *v);
    }
    const bool any = hi >= lo;
    const double span = (any && hi > lo) ? hi - lo : 1.0;

    const double cw = kPlotW / static_cast<double>(nx);
    const double ch = kPlotH / static_cast<double>(ny);
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
            const auto& v = data.values[i * ny + j];
            const double x = kLeft + cw * static_cast<double>(i);
            // tau_u increases upward
            const double y = kTop + kPlotH - ch * static_cast<double>(j + 1);
            const std::string fill = v ? palette((*v - lo) / span) : std::string("#cccccc");
            out << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" width=\""
                << fmt(cw + 0.5) << "\" height=\"" << fmt(ch + 0.5) << "\" fill=\"" << fill
                << "\"/>\n";
        }
    }
    axes_frame(out);
    draw_ticks(out,
               linear_ticks(data.tau_l_values.front(), data.tau_l_values.back(), 6),
               linear_ticks(data.tau_u_values.front(), data.tau_u_values.back(), 6));
    axis_labels(out, "lower threshold", "upper threshold");

    // color bar
    const double bar_x = kLeft + kPlotW + 30.0;
    const int bar_steps = 64;
    for (int s = 0; s < bar_steps; ++s) {
        const double t = static_cast<double>(s) / (bar_steps - 1);
        const double yy = kTop + kPlotH * (1.0 - static_cast<double>(s + 1) / bar_steps);
        out << "<rect x=\"" << bar_x << "\" y=\"" << fmt(yy) << "\" width=\"22\" height=\""
            << fmt(kPlotH / bar_steps + 0.5) << "\" fill=\"" << palette(t) << "\"/>\n";
    }
    out << "<rect x=\"" << bar_x << "\" y=\"" << kTop << "\" width=\"22\" height=\""
        << kPlotH << "\" fill=\"none\" stroke=\"#333\"/>\n";
    if (any) {
        out << "<text x=\"" << (bar_x + 30) << "\" y=\"" << (kTop + kPlotH)
            << "\" font-size=\"13\">" << fmt_label(lo, data.percent) << "</text>\n";
        out << "<text x=\"" << (bar_x + 30) << "\" y=\"" << (kTop + 10)
            << "\" font-size=\"13\">" << fmt_label(hi, data.percent) << "</text>\n";
    }
    out << "<text x=\"" << (bar_x + 11) << "\" y=\"" << (kTop - 12)
        << "\" text-anchor=\"middle\" font-size=\"14\">" << data.value_label << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

std::string render_scatter_frontier(const ScatterFrontierData& data) {
    std::ostringstream out;
    svg_open(out, data.title);

    double y_lo = std::numeric_limits<double>::infinity();
    double y_hi = -std::numeric_limits<double>::infinity();
    for (const auto& [x, y] : data.points) {
        (void)x;
        y_lo = std::min(y_lo, y);
        y_hi = std::max(y_hi, y);
    }
    if (!(y_hi >= y_lo)) {
        y_lo = 0.0;
        y_hi = 1.0;
    }
    if (y_hi == y_lo) y_hi = y_lo + 1.0;
    auto px = [&](double load) { return kLeft + load * kPlotW; };
    auto py = [&](double v) { return kTop + kPlotH * (1.0 - (v - y_lo) / (y_hi - y_lo)); };

    for (const auto& [x, y] : data.points)
        out << "<circle cx=\"" << fmt(px(x)) << "\" cy=\"" << fmt(py(y))
            << "\" r=\"2.5\" fill=\"#aaaaaa\" fill-opacity=\"0.6\"/>\n";

    if (!data.frontier.empty()) {
        out << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2.5\" points=\"";
        for (const auto& p : data.frontier)
            out << fmt(px(p.review_fraction)) << ',' << fmt(py(p.metric_value)) << ' ';
        out << "\"/>\n";
        for (const auto& p : data.frontier)
            out << "<circle cx=\"" << fmt(px(p.review_fraction)) << "\" cy=\""
                << fmt(py(p.metric_value)) << "\" r=\"3.5\" fill=\"#1f4e9c\"/>\n";
    }

    // knee annotations: largest |second difference| of metric along the frontier
    if (data.frontier.size() >= 3 && data.annotate_knees > 0) {
        std::vector<std::pair<double, std::size_t>> curvature;
        for (std::size_t i = 1; i + 1 < data.frontier.size(); ++i) {
            const double d2 = data.frontier[i + 1].metric_value -
                              2.0 * data.frontier[i].metric_value +
                              data.frontier[i - 1].metric_value;
            curvature.push_back({std::fabs(d2), i});
        }
        std::sort(curvature.begin(), curvature.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        const std::size_t k = std::min<std::size_t>(data.annotate_knees, curvature.size());
        for (std::size_t c = 0; c < k; ++c) {
            const auto& p = data.frontier[curvature[c].second];
            const double x = px(p.review_fraction);
            const double y = py(p.metric_value);
            out << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
                << "\" r=\"5\" fill=\"none\" stroke=\"#c23b22\" stroke-width=\"2\"/>\n";
            out << "<text x=\"" << fmt(x + 8) << "\" y=\"" << fmt(y - 8)
                << "\" font-size=\"13\" fill=\"#c23b22\">(" << fmt(p.thresholds.tau_l)
                << ", " << fmt(p.thresholds.tau_u) << ")</text>\n";
        }
    }

    axes_frame(out);
    draw_ticks(out, linear_ticks(0.0, 1.0, 6, true), linear_ticks(y_lo, y_hi, 6));
    axis_labels(out, "human review load", data.y_label);
    out << "</svg>\n";
    return out.str();
}

std::string render_compare(const CompareData& data) {
    static const char* colors[] = {"#1f4e9c", "#c23b22", "#2a7f3f", "#7d3c98", "#b8860b"};
    std::ostringstream out;
    svg_open(out, data.title);

    double y_lo = std::numeric_limits<double>::infinity();
    double y_hi = -std::numeric_limits<double>::infinity();
    for (const auto& [label, frontier] : data.labeled_frontiers) {
        (void)label;
        for (const auto& p : frontier) {
            y_lo = std::min(y_lo, p.metric_value);
            y_hi = std::max(y_hi, p.metric_value);
        }
    }
    if (!(y_hi >= y_lo)) {
        y_lo = 0.0;
        y_hi = 1.0;
    }
    if (y_hi == y_lo) y_hi = y_lo + 1.0;
    auto px = [&](double load) { return kLeft + load * kPlotW; };
    auto py = [&](double v) { return kTop + kPlotH * (1.0 - (v - y_lo) / (y_hi - y_lo)); };

    std::size_t idx = 0;
    for (const auto& [label, frontier] : data.labeled_frontiers) {
        const char* color = colors[idx % 5];
        if (!frontier.empty()) {
            out << "<polyline fill=\"none\" stroke=\"" << color
                << "\" stroke-width=\"2.5\" points=\"";
            for (const auto& p : frontier)
                out << fmt(px(p.review_fraction)) << ',' << fmt(py(p.metric_value)) << ' ';
            out << "\"/>\n";
        }
        const double ly = kTop + 20.0 + 22.0 * static_cast<double>(idx);
        const double lx = kLeft + kPlotW + 16.0;
        out << "<line x1=\"" << lx << "\" y1=\"" << (ly - 4) << "\" x2=\"" << (lx + 24)
            << "\" y2=\"" << (ly - 4) << "\" stroke=\"" << color
            << "\" stroke-width=\"2.5\"/>\n";
        out << "<text x=\"" << (lx + 30) << "\" y=\"" << ly << "\" font-size=\"13\">"
            << label << "</text>\n";
        ++idx;
    }

    axes_frame(out);
    draw_ticks(out, linear_ticks(0.0, 1.0, 6, true), linear_ticks(y_lo, y_hi, 6));
    axis_labels(out, "human review load", data.y_label);
    out << "</svg>\n";
    return out.str();
}

}  // namespace hil
