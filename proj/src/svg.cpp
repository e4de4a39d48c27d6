#include "kerrspin/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "kerrspin/errors.hpp"

namespace kerrspin {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 540.0;
constexpr double kMarginL = 70.0, kMarginR = 25.0, kMarginT = 45.0, kMarginB = 55.0;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

/// "Nice" tick spacing covering [lo, hi] with ~n intervals.
double tick_step(double lo, double hi, int n) {
    const double raw = (hi - lo) / std::max(1, n);
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    double step = 10.0;
    for (double cand : {1.0, 2.0, 2.5, 5.0}) {
        if (norm <= cand) {
            step = cand;
            break;
        }
    }
    return step * mag;
}

}  // namespace

void SvgPlot::write(const std::string& path) const {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series) {
        for (double v : s.x) {
            xmin = std::min(xmin, v);
            xmax = std::max(xmax, v);
        }
        for (double v : s.y) {
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    }
    if (!(xmin <= xmax)) {
        xmin = 0.0;
        xmax = 1.0;
    }
    if (!(ymin <= ymax)) {
        ymin = 0.0;
        ymax = 1.0;
    }
    if (xmax - xmin < 1e-300) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (ymax - ymin < 1e-300) {
        ymin -= 0.5;
        ymax += 0.5;
    }
    // 4% padding
    {
        const double px = 0.04 * (xmax - xmin), py = 0.04 * (ymax - ymin);
        xmin -= px;
        xmax += px;
        ymin -= py;
        ymax += py;
    }
    const double plot_w = kWidth - kMarginL - kMarginR;
    const double plot_h = kHeight - kMarginT - kMarginB;
    if (equal_axes) {
        const double sx = plot_w / (xmax - xmin), sy = plot_h / (ymax - ymin);
        if (sx < sy) {
            const double c = 0.5 * (ymin + ymax), half = 0.5 * plot_h / sx;
            ymin = c - half;
            ymax = c + half;
        } else {
            const double c = 0.5 * (xmin + xmax), half = 0.5 * plot_w / sy;
            xmin = c - half;
            xmax = c + half;
        }
    }
    auto sx = [&](double x) { return kMarginL + (x - xmin) / (xmax - xmin) * plot_w; };
    auto sy = [&](double y) { return kHeight - kMarginB - (y - ymin) / (ymax - ymin) * plot_h; };

    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write SVG file: " + path);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Frame
    out << "<rect x=\"" << kMarginL << "\" y=\"" << kMarginT << "\" width=\"" << plot_w
        << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"#333\"/>\n";

    // Ticks and grid
    const double xstep = tick_step(xmin, xmax, 8);
    for (double x = std::ceil(xmin / xstep) * xstep; x <= xmax + 1e-12 * xstep; x += xstep) {
        const double px = sx(x);
        out << "<line x1=\"" << px << "\" y1=\"" << kMarginT << "\" x2=\"" << px << "\" y2=\""
            << kHeight - kMarginB << "\" stroke=\"#ddd\" stroke-width=\"0.5\"/>\n"
            << "<text x=\"" << px << "\" y=\"" << kHeight - kMarginB + 18
            << "\" font-size=\"11\" text-anchor=\"middle\" font-family=\"sans-serif\">" << fmt(x)
            << "</text>\n";
    }
    const double ystep = tick_step(ymin, ymax, 6);
    for (double y = std::ceil(ymin / ystep) * ystep; y <= ymax + 1e-12 * ystep; y += ystep) {
        const double py = sy(y);
        out << "<line x1=\"" << kMarginL << "\" y1=\"" << py << "\" x2=\"" << kWidth - kMarginR
            << "\" y2=\"" << py << "\" stroke=\"#ddd\" stroke-width=\"0.5\"/>\n"
            << "<text x=\"" << kMarginL - 6 << "\" y=\"" << py + 4
            << "\" font-size=\"11\" text-anchor=\"end\" font-family=\"sans-serif\">" << fmt(y)
            << "</text>\n";
    }

    for (const auto& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"" << s.width
            << "\" points=\"";
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
            out << fmt(sx(s.x[i])) << "," << fmt(sy(s.y[i])) << " ";
        }
        out << "\"/>\n";
    }

    out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kMarginT - 14
        << "\" font-size=\"16\" text-anchor=\"middle\" font-family=\"sans-serif\">" << title
        << "</text>\n";
    out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12
        << "\" font-size=\"13\" text-anchor=\"middle\" font-family=\"sans-serif\">" << xlabel
        << "</text>\n";
    out << "<text x=\"18\" y=\"" << kHeight / 2
        << "\" font-size=\"13\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "transform=\"rotate(-90 18 "
        << kHeight / 2 << ")\">" << ylabel << "</text>\n";
    double ay = kMarginT + 18;
    for (const auto& note : annotations) {
        out << "<text x=\"" << kMarginL + 8 << "\" y=\"" << ay
            << "\" font-size=\"12\" font-family=\"sans-serif\" fill=\"#444\">" << note
            << "</text>\n";
        ay += 16;
    }
    out << "</svg>\n";
}

}  // namespace kerrspin
