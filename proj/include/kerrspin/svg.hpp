#pragma once

#include <string>
#include <vector>

namespace kerrspin {

/// Minimal self-contained SVG line-plot writer (no external assets).
struct SvgSeries {
    std::vector<double> x, y;
    std::string color = "#1f6fb2";
    double width = 1.2;
};

struct SvgPlot {
    std::string title, xlabel, ylabel;
    std::vector<SvgSeries> series;
    std::vector<std::string> annotations;  // rendered top-left, one per line
    bool equal_axes = false;

    void write(const std::string& path) const;
};

}  // namespace kerrspin
