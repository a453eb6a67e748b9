#pragma once

#include "riskchain/allocation.hpp"
#include "riskchain/chart.hpp"
#include "riskchain/diagnostics.hpp"
#include "riskchain/metrics.hpp"

#include <string>
#include <vector>

namespace riskchain {

/// Errors-by-programmer chart: one category per author, one series per
/// error class.
inline ChartSpec error_chart(const ErrorHistogram& histogram, ChartStyle style = ChartStyle::Svg) {
    ChartSpec spec;
    spec.title = "Errors by programmer";
    spec.style = style;
    for (const auto& [author, _] : histogram) spec.categories.push_back(author);
    for (ErrorClass c : kAllErrorClasses) {
        Series s;
        s.label = std::string(error_class_name(c));
        for (const auto& [_, cells] : histogram) {
            const auto it = cells.find(c);
            s.values.push_back(it == cells.end() ? 0.0 : static_cast<double>(it->second));
        }
        spec.series.push_back(std::move(s));
    }
    return spec;
}

/// Same chart built from per-author aggregates instead of a histogram.
inline ChartSpec error_chart(const std::vector<AuthorAggregate>& aggregates,
                             ChartStyle style = ChartStyle::Svg) {
    ErrorHistogram hist;
    for (const auto& a : aggregates) hist[a.author] = a.error_counts;
    return error_chart(hist, style);
}

/// Risk-by-pairing chart: one category per matched pair, series for the
/// relation risk rank and the shared-skill count.
inline ChartSpec risk_chart(const TeamPlan& plan, ChartStyle style = ChartStyle::Svg) {
    ChartSpec spec;
    spec.title = "Risk by pairing";
    spec.style = style;
    Series risk{"risk rank", {}};
    Series shared{"shared skills", {}};
    for (const auto& p : plan.pairs) {
        spec.categories.push_back(p.pair.vsp_id.value_or("-") + "+" + p.pair.hsp_id.value_or("-"));
        risk.values.push_back(static_cast<double>(rank(p.risk)));
        shared.values.push_back(static_cast<double>(p.pair.weight));
    }
    spec.series.push_back(std::move(risk));
    spec.series.push_back(std::move(shared));
    return spec;
}

} // namespace riskchain
