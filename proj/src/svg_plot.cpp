#include "clscnd/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace clscnd {
namespace {

constexpr double kPanelW = 300.0, kPanelH = 300.0;
constexpr double kMarginL = 52.0, kMarginR = 14.0, kMarginT = 26.0, kMarginB = 34.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct Axis {
    double lo = 0.0, hi = 1.0;
    double place(double v, double a, double b) const {  // maps lo..hi onto a..b
        return a + (v - lo) / (hi - lo) * (b - a);
    }
};

Axis axis_for(const PayoffTable& payoff, int objective) {
    Axis ax;
    ax.lo = payoff.values.col(objective).minCoeff();
    ax.hi = payoff.values.col(objective).maxCoeff();
    if (ax.hi - ax.lo < 1e-12) {  // collapsed range: pad so points stay visible
        const double pad = std::max(1.0, std::abs(ax.lo) * 0.1);
        ax.lo -= pad;
        ax.hi += pad;
    }
    return ax;
}

void panel(std::string& svg, const ParetoFront& front, int panel_index, int ox, int oy) {
    static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    const int fx = kPairs[panel_index][0], fy = kPairs[panel_index][1];
    const Axis ax = axis_for(front.payoff, fx), ay = axis_for(front.payoff, fy);

    const double x0 = ox + kMarginL, x1 = ox + kPanelW - kMarginR;
    const double y0 = oy + kPanelH - kMarginB, y1 = oy + kMarginT;  // y grows downward

    svg += "<g font-family=\"sans-serif\" font-size=\"9\">\n";
    svg += "<rect x=\"" + num(x0) + "\" y=\"" + num(y1) + "\" width=\"" + num(x1 - x0) +
           "\" height=\"" + num(y0 - y1) +
           "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + num((x0 + x1) / 2) + "\" y=\"" + num(oy + 14.0) +
           "\" text-anchor=\"middle\" font-size=\"11\">" + std::string(objective_name(fx)) +
           " vs " + objective_name(fy) + "</text>\n";
    // Axis extreme annotations (payoff-table column extremes).
    svg += "<text x=\"" + num(x0) + "\" y=\"" + num(y0 + 12.0) + "\" text-anchor=\"start\">" +
           num(ax.lo) + "</text>\n";
    svg += "<text x=\"" + num(x1) + "\" y=\"" + num(y0 + 12.0) + "\" text-anchor=\"end\">" +
           num(ax.hi) + "</text>\n";
    svg += "<text x=\"" + num(x0 - 4.0) + "\" y=\"" + num(y0) + "\" text-anchor=\"end\">" +
           num(ay.lo) + "</text>\n";
    svg += "<text x=\"" + num(x0 - 4.0) + "\" y=\"" + num(y1 + 8.0) + "\" text-anchor=\"end\">" +
           num(ay.hi) + "</text>\n";
    for (const FrontMember& m : front.members) {
        const double cx = ax.place(m.objectives[fx], x0, x1);
        const double cy = ay.place(m.objectives[fy], y0, y1);
        svg += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) +
               "\" r=\"3\" fill=\"#1f6feb\" fill-opacity=\"0.85\"/>\n";
    }
    svg += "</g>\n";
}

}  // namespace

std::string front_svg(const ParetoFront& front) {
    std::string svg =
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"900\" "
        "height=\"300\" viewBox=\"0 0 900 300\">\n"
        "<rect width=\"900\" height=\"300\" fill=\"white\"/>\n";
    for (int p = 0; p < 3; ++p) panel(svg, front, p, p * 300, 0);
    svg += "</svg>\n";
    return svg;
}

}  // namespace clscnd
