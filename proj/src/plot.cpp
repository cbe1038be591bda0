#include "gzeta/plot.hpp"

#include "gzeta/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gzeta {

namespace {

constexpr double kPanelSize = 440.0;
constexpr double kMargin = 30.0;
constexpr double kTitleHeight = 28.0;

struct Bounds {
    double xmin, xmax, ymin, ymax;
};

Bounds panel_bounds(const PoleSet& set) {
    Bounds b{-0.1, 0.1, -0.1, 0.1};
    auto include = [&](double x, double y) {
        b.xmin = std::min(b.xmin, x);
        b.xmax = std::max(b.xmax, x);
        b.ymin = std::min(b.ymin, y);
        b.ymax = std::max(b.ymax, y);
    };
    for (const auto& p : set.poles) include(p.root.real, p.root.imag);
    if (set.circle) {
        include(set.circle->center - set.circle->radius, -set.circle->radius);
        include(set.circle->center + set.circle->radius, set.circle->radius);
    }
    // Square window so one unit has the same length on both axes.
    const double half = 0.55 * std::max(b.xmax - b.xmin, b.ymax - b.ymin);
    const double cx = 0.5 * (b.xmin + b.xmax);
    const double cy = 0.5 * (b.ymin + b.ymax);
    return {cx - half, cx + half, cy - half, cy + half};
}

double tick_step(double span) {
    const double raw = span / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0})
        if (raw <= m * mag) return m * mag;
    return 10.0 * mag;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << std::fixed << v;
    std::string s = os.str();
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s == "-0" ? "0" : s;
}

void render_panel(std::ostream& os, const PlotPanel& panel, double offset_x) {
    const Bounds b = panel_bounds(panel.poles);
    const double scale = kPanelSize / (b.xmax - b.xmin);
    const double top = kTitleHeight;
    auto px = [&](double x) { return offset_x + (x - b.xmin) * scale; };
    auto py = [&](double y) { return top + (b.ymax - y) * scale; };

    os << "<g class=\"panel\">\n";
    os << "<text x=\"" << fmt(offset_x + kPanelSize / 2) << "\" y=\"18\" text-anchor=\"middle\" "
       << "font-family=\"sans-serif\" font-size=\"14\">" << panel.title << "</text>\n";
    os << "<rect x=\"" << fmt(offset_x) << "\" y=\"" << fmt(top) << "\" width=\"" << fmt(kPanelSize)
       << "\" height=\"" << fmt(kPanelSize) << "\" fill=\"white\" stroke=\"#999\"/>\n";

    // Axes through the origin, clamped to the panel.
    const double ax = std::clamp(0.0, b.xmin, b.xmax);
    const double ay = std::clamp(0.0, b.ymin, b.ymax);
    os << "<line class=\"axis\" x1=\"" << fmt(px(b.xmin)) << "\" y1=\"" << fmt(py(ay)) << "\" x2=\"" << fmt(px(b.xmax))
       << "\" y2=\"" << fmt(py(ay)) << "\" stroke=\"#444\"/>\n";
    os << "<line class=\"axis\" x1=\"" << fmt(px(ax)) << "\" y1=\"" << fmt(py(b.ymin)) << "\" x2=\"" << fmt(px(ax))
       << "\" y2=\"" << fmt(py(b.ymax)) << "\" stroke=\"#444\"/>\n";

    const double step = tick_step(b.xmax - b.xmin);
    for (double t = std::ceil(b.xmin / step) * step; t <= b.xmax; t += step) {
        if (std::abs(t) < step * 1e-6) continue;
        os << "<line class=\"tick\" x1=\"" << fmt(px(t)) << "\" y1=\"" << fmt(py(ay) - 3) << "\" x2=\"" << fmt(px(t))
           << "\" y2=\"" << fmt(py(ay) + 3) << "\" stroke=\"#444\"/>";
        os << "<text x=\"" << fmt(px(t)) << "\" y=\"" << fmt(py(ay) + 14)
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"9\">" << fmt(t) << "</text>\n";
    }
    for (double t = std::ceil(b.ymin / step) * step; t <= b.ymax; t += step) {
        if (std::abs(t) < step * 1e-6) continue;
        os << "<line class=\"tick\" x1=\"" << fmt(px(ax) - 3) << "\" y1=\"" << fmt(py(t)) << "\" x2=\"" << fmt(px(ax) + 3)
           << "\" y2=\"" << fmt(py(t)) << "\" stroke=\"#444\"/>";
        os << "<text x=\"" << fmt(px(ax) + 6) << "\" y=\"" << fmt(py(t) + 3)
           << "\" font-family=\"sans-serif\" font-size=\"9\">" << fmt(t) << "</text>\n";
    }

    if (const auto& c = panel.poles.circle) {
        os << "<circle class=\"reference-circle\" cx=\"" << fmt(px(c->center)) << "\" cy=\"" << fmt(py(0.0))
           << "\" r=\"" << fmt(c->radius * scale) << "\" data-center=\"" << format_double(c->center)
           << "\" data-radius=\"" << format_double(c->radius) << "\" fill=\"none\" stroke=\"#2a6\" stroke-width=\"1.5\"/>\n";
    }

    for (const auto& p : panel.poles.poles) {
        const bool trivial = p.annotation.trivial;
        os << "<circle class=\"pole" << (trivial ? " trivial" : "") << "\" cx=\"" << fmt(px(p.root.real)) << "\" cy=\""
           << fmt(py(p.root.imag)) << "\" r=\"" << (trivial ? "5" : "3.5") << "\" data-re=\""
           << format_double(p.root.real) << "\" data-im=\"" << format_double(p.root.imag) << "\" data-multiplicity=\""
           << p.root.multiplicity << "\" fill=\"" << (trivial ? "none" : "#1f4fbf") << "\" stroke=\""
           << (trivial ? "#c22" : "#1f4fbf") << "\" stroke-width=\"1.5\"/>\n";
    }
    os << "</g>\n";
}

} // namespace

std::string render_pole_plot(const std::vector<PlotPanel>& panels) {
    nlohmann::json meta = nlohmann::json::array();
    for (const auto& panel : panels) {
        nlohmann::json m{{"title", panel.title}, {"kind", to_string(panel.poles.kind)}};
        if (panel.poles.circle)
            m["circle"] = {{"center", panel.poles.circle->center}, {"radius", panel.poles.circle->radius}};
        nlohmann::json dots = nlohmann::json::array();
        for (const auto& p : panel.poles.poles)
            dots.push_back({p.root.real, p.root.imag, p.root.multiplicity, annotation_string(p.annotation)});
        m["poles"] = dots;
        meta.push_back(m);
    }

    const double width = kMargin + static_cast<double>(panels.size()) * (kPanelSize + kMargin);
    const double height = kTitleHeight + kPanelSize + kMargin;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
       << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
    // "--" is not allowed inside XML comments; the JSON never contains it.
    os << "<!-- gzeta-plot " << meta.dump() << " -->\n";
    for (std::size_t i = 0; i < panels.size(); ++i)
        render_panel(os, panels[i], kMargin + static_cast<double>(i) * (kPanelSize + kMargin));
    os << "</svg>\n";
    return os.str();
}

} // namespace gzeta
