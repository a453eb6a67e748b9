#pragma once

#include "riskchain/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace riskchain {

enum class ChartStyle { Svg, Ascii };

struct Series {
    std::string label;
    std::vector<double> values; // one per category, >= 0
};

struct ChartSpec {
    std::string title;
    std::vector<std::string> categories;
    std::vector<Series> series;
    ChartStyle style = ChartStyle::Svg;

    void validate() const {
        if (categories.empty()) throw DomainError("chart needs at least one category");
        for (const auto& s : series) {
            if (s.values.size() != categories.size()) {
                throw DomainError("series '" + s.label + "' has " +
                                  std::to_string(s.values.size()) + " values for " +
                                  std::to_string(categories.size()) + " categories");
            }
            for (double v : s.values) {
                if (!(v >= 0.0) || !std::isfinite(v)) {
                    throw DomainError("series '" + s.label + "' has a negative or non-finite value");
                }
            }
        }
    }
};

namespace detail {

/// Fixed-precision decimal so renders are byte-stable.
inline std::string fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

inline std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

inline double max_value(const ChartSpec& spec) {
    double m = 0.0;
    for (const auto& s : spec.series) {
        for (double v : s.values) m = std::max(m, v);
    }
    return m;
}

constexpr const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759",
                                    "#76b7b2", "#59a14f", "#edc949"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

} // namespace detail

/// Grouped bar chart as a self-contained SVG document. Output is a pure
/// function of the spec: fixed layout, fixed palette, fixed precision, no
/// timestamps.
inline std::string render_svg(const ChartSpec& spec) {
    spec.validate();

    const std::size_t ncat = spec.categories.size();
    const std::size_t nser = spec.series.size();
    const double bar_w = 18.0;
    const double group_gap = 18.0;
    const double group_w = std::max<std::size_t>(nser, 1) * bar_w + group_gap;
    const double margin_l = 56.0, margin_r = 24.0, margin_t = 48.0;
    const double plot_h = 220.0;
    const double legend_h = nser ? 22.0 + 16.0 * static_cast<double>(nser) : 0.0;
    const double margin_b = 56.0 + legend_h;
    const double width = margin_l + group_w * static_cast<double>(ncat) + margin_r;
    const double height = margin_t + plot_h + margin_b;
    const double vmax = detail::max_value(spec);
    const double scale = vmax > 0.0 ? plot_h / vmax : 0.0;
    const double base_y = margin_t + plot_h;

    using detail::fixed2;
    using detail::xml_escape;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed2(width) +
           "\" height=\"" + fixed2(height) + "\" viewBox=\"0 0 " + fixed2(width) + " " +
           fixed2(height) + "\">\n";
    out += "  <rect x=\"0\" y=\"0\" width=\"" + fixed2(width) + "\" height=\"" + fixed2(height) +
           "\" fill=\"#ffffff\"/>\n";
    out += "  <text x=\"" + fixed2(width / 2.0) +
           "\" y=\"24.00\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">" +
           xml_escape(spec.title) + "</text>\n";

    // axes
    out += "  <line x1=\"" + fixed2(margin_l) + "\" y1=\"" + fixed2(margin_t) + "\" x2=\"" +
           fixed2(margin_l) + "\" y2=\"" + fixed2(base_y) + "\" stroke=\"#333333\"/>\n";
    out += "  <line x1=\"" + fixed2(margin_l) + "\" y1=\"" + fixed2(base_y) + "\" x2=\"" +
           fixed2(width - margin_r) + "\" y2=\"" + fixed2(base_y) + "\" stroke=\"#333333\"/>\n";

    // y tick labels at 0, half, max
    for (double frac : {0.0, 0.5, 1.0}) {
        const double val = vmax * frac;
        const double y = base_y - plot_h * frac * (vmax > 0.0 ? 1.0 : 0.0);
        out += "  <text x=\"" + fixed2(margin_l - 6.0) + "\" y=\"" + fixed2(y + 4.0) +
               "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"end\">" + fixed2(val) +
               "</text>\n";
    }

    for (std::size_t ci = 0; ci < ncat; ++ci) {
        const double group_x = margin_l + group_w * static_cast<double>(ci) + group_gap / 2.0;
        for (std::size_t si = 0; si < nser; ++si) {
            const double v = spec.series[si].values[ci];
            const double h = v * scale;
            const double x = group_x + bar_w * static_cast<double>(si);
            out += "  <rect x=\"" + fixed2(x) + "\" y=\"" + fixed2(base_y - h) + "\" width=\"" +
                   fixed2(bar_w - 2.0) + "\" height=\"" + fixed2(h) + "\" fill=\"" +
                   detail::kPalette[si % detail::kPaletteSize] + "\"/>\n";
        }
        out += "  <text x=\"" + fixed2(group_x + (group_w - group_gap) / 2.0) + "\" y=\"" +
               fixed2(base_y + 16.0) +
               "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" +
               xml_escape(spec.categories[ci]) + "</text>\n";
    }

    // legend
    for (std::size_t si = 0; si < nser; ++si) {
        const double ly = base_y + 40.0 + 16.0 * static_cast<double>(si);
        out += "  <rect x=\"" + fixed2(margin_l) + "\" y=\"" + fixed2(ly - 9.0) +
               "\" width=\"12.00\" height=\"12.00\" fill=\"" +
               detail::kPalette[si % detail::kPaletteSize] + "\"/>\n";
        out += "  <text x=\"" + fixed2(margin_l + 18.0) + "\" y=\"" + fixed2(ly + 1.0) +
               "\" font-family=\"sans-serif\" font-size=\"11\">" + xml_escape(spec.series[si].label) +
               "</text>\n";
    }

    out += "</svg>\n";
    return out;
}

/// Horizontal-bar rendering for terminals. Same determinism contract as
/// the SVG output.
inline std::string render_ascii(const ChartSpec& spec) {
    spec.validate();

    constexpr std::size_t kBarWidth = 40;
    const double vmax = detail::max_value(spec);

    std::size_t label_w = 0;
    for (const auto& c : spec.categories) label_w = std::max(label_w, c.size());
    std::size_t series_w = 0;
    for (const auto& s : spec.series) series_w = std::max(series_w, s.label.size());

    std::string out = spec.title + "\n";
    out += std::string(spec.title.size(), '=') + "\n";
    for (std::size_t ci = 0; ci < spec.categories.size(); ++ci) {
        for (std::size_t si = 0; si < spec.series.size(); ++si) {
            const double v = spec.series[si].values[ci];
            const std::size_t bars =
                vmax > 0.0
                    ? static_cast<std::size_t>(std::floor(v / vmax * static_cast<double>(kBarWidth)))
                    : 0;
            const std::string cat = si == 0 ? spec.categories[ci] : std::string();
            out += cat + std::string(label_w - cat.size(), ' ');
            out += " | ";
            out += spec.series[si].label + std::string(series_w - spec.series[si].label.size(), ' ');
            out += " |" + std::string(bars, '#') + std::string(kBarWidth - bars, ' ') + "| ";
            out += detail::fixed2(v) + "\n";
        }
    }
    return out;
}

inline std::string render_chart(const ChartSpec& spec) {
    return spec.style == ChartStyle::Svg ? render_svg(spec) : render_ascii(spec);
}

} // namespace riskchain
