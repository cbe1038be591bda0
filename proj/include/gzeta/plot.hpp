#pragma once

#include "gzeta/spectra.hpp"

#include <string>
#include <vector>

namespace gzeta {

struct PlotPanel {
    std::string title;
    PoleSet poles;
};

/// Self-contained SVG with one scatter panel per entry: axes at the origin,
/// equal unit scale on both axes, the critical circle (when the pole set has
/// one) and a dot per distinct pole. Dots carry data-re, data-im and
/// data-multiplicity attributes; trivial poles get the extra class "trivial".
/// A leading comment "gzeta-plot {json}" records circles and poles.
std::string render_pole_plot(const std::vector<PlotPanel>& panels);

} // namespace gzeta
