#include <algorithm>
#include <sstream>
#include <utility>

#include "subsel/errors.hpp"
#include "subsel/io.hpp"

namespace subsel::io {

namespace {

constexpr double kPanel = 360.0;
constexpr double kMargin = 40.0;

std::string escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> panels_for(std::size_t m) {
    if (m == 2) return {{0, 1}};
    if (m == 3) return {{0, 1}, {0, 2}, {1, 2}};
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i + 1 < m; ++i) out.emplace_back(i, i + 1);
    return out;
}

}  // namespace

std::string render_svg(const PointSet& points, std::span<const std::size_t> selected, const PlotOptions& options) {
    if (points.empty()) throw InvalidArgument("render_svg: no points");
    for (std::size_t i : selected)
        if (i >= points.size()) throw InvalidArgument("render_svg: selected index out of range");
    const std::size_t m = points.dim();
    std::vector<std::string> names = options.axis_names;
    for (std::size_t i = names.size(); i < m; ++i) names.push_back("f" + std::to_string(i + 1));

    const auto panels = panels_for(m);
    const double cell = kPanel + 2 * kMargin;
    const double width = cell * static_cast<double>(panels.size());
    const double height = cell + 30.0;

    std::vector<double> lo(m), hi(m);
    for (std::size_t i = 0; i < m; ++i) {
        lo[i] = hi[i] = points[0][i];
        for (std::size_t p = 1; p < points.size(); ++p) {
            lo[i] = std::min(lo[i], points[p][i]);
            hi[i] = std::max(hi[i], points[p][i]);
        }
        if (hi[i] == lo[i]) {
            lo[i] -= 0.5;
            hi[i] += 0.5;
        }
    }

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!options.title.empty())
        svg << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" "
            << "font-size=\"14\">" << escape(options.title) << "</text>\n";

    for (std::size_t k = 0; k < panels.size(); ++k) {
        const auto [ax, ay] = panels[k];
        const double x0 = cell * static_cast<double>(k) + kMargin;
        const double y0 = 30.0 + kMargin;
        auto px = [&](double v) { return x0 + (v - lo[ax]) / (hi[ax] - lo[ax]) * kPanel; };
        auto py = [&](double v) { return y0 + kPanel - (v - lo[ay]) / (hi[ay] - lo[ay]) * kPanel; };

        svg << "<g class=\"panel\">\n";
        svg << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << kPanel << "\" height=\"" << kPanel
            << "\" fill=\"none\" stroke=\"#444\"/>\n";
        svg << "<text x=\"" << x0 + kPanel / 2 << "\" y=\"" << y0 + kPanel + 28
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << escape(names[ax])
            << "</text>\n";
        svg << "<text x=\"" << x0 - 24 << "\" y=\"" << y0 + kPanel / 2 << "\" text-anchor=\"middle\" "
            << "font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 " << x0 - 24 << ' '
            << y0 + kPanel / 2 << ")\">" << escape(names[ay]) << "</text>\n";

        svg << "<g class=\"series-all\" fill=\"#1f4fd1\" fill-opacity=\"0.55\">\n";
        for (std::size_t p = 0; p < points.size(); ++p)
            svg << "<circle cx=\"" << px(points[p][ax]) << "\" cy=\"" << py(points[p][ay]) << "\" r=\"2\"/>\n";
        svg << "</g>\n";
        svg << "<g class=\"series-selected\" fill=\"#d11f1f\" stroke=\"black\" stroke-width=\"0.5\">\n";
        for (std::size_t p : selected)
            svg << "<circle cx=\"" << px(points[p][ax]) << "\" cy=\"" << py(points[p][ay]) << "\" r=\"5\"/>\n";
        svg << "</g>\n</g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace subsel::io
