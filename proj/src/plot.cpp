#include "aga/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace aga {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 72.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 56.0;

std::string fixed(double v, int digits = 2) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string tick_label(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string escape_xml(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

void write_line_svg(const std::filesystem::path& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    std::span<const double> xs, std::span<const double> ys) {
    if (xs.empty() || xs.size() != ys.size())
        throw std::invalid_argument("write_line_svg: series must be non-empty and equal length");

    double x_lo = xs[0], x_hi = xs[0], y_lo = ys[0], y_hi = ys[0];
    for (double v : xs) {
        x_lo = std::min(x_lo, v);
        x_hi = std::max(x_hi, v);
    }
    for (double v : ys) {
        y_lo = std::min(y_lo, v);
        y_hi = std::max(y_hi, v);
    }
    if (x_hi == x_lo) {
        x_lo -= 1.0;
        x_hi += 1.0;
    }
    if (y_hi == y_lo) {
        y_lo -= 1.0;
        y_hi += 1.0;
    }

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
    auto py = [&](double y) { return kTop + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\""
        << " text-anchor=\"middle\">" << escape_xml(title) << "</text>\n";

    // axes
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
        << kTop + plot_h << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w
        << "\" y2=\"" << kTop + plot_h << "\" stroke=\"black\"/>\n";

    constexpr int kTicks = 5;
    for (int i = 0; i <= kTicks; ++i) {
        const double t = static_cast<double>(i) / kTicks;
        const double xv = x_lo + t * (x_hi - x_lo);
        const double yv = y_lo + t * (y_hi - y_lo);
        const double xp = px(xv);
        const double yp = py(yv);
        svg << "<line x1=\"" << fixed(xp) << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << fixed(xp)
            << "\" y2=\"" << kTop + plot_h + 5 << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fixed(xp) << "\" y=\"" << kTop + plot_h + 20
            << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
            << tick_label(xv) << "</text>\n";
        svg << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << fixed(yp) << "\" x2=\"" << kLeft
            << "\" y2=\"" << fixed(yp) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << fixed(yp + 4)
            << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">"
            << tick_label(yv) << "</text>\n";
    }

    svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 12
        << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">"
        << escape_xml(x_label) << "</text>\n";
    svg << "<text x=\"18\" y=\"" << kTop + plot_h / 2
        << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\""
        << " transform=\"rotate(-90 18 " << kTop + plot_h / 2 << ")\">" << escape_xml(y_label)
        << "</text>\n";

    svg << "<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) svg << ' ';
        svg << fixed(px(xs[i])) << ',' << fixed(py(ys[i]));
    }
    svg << "\"/>\n</svg>\n";

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << svg.str();
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace aga
