#pragma once

#include "riskchain/errors.hpp"
#include "riskchain/text.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace riskchain {

/// Five-step risk scale, strictly ordered by rank.
enum class RiskLevel { VeryLow = 0, Low = 1, Medium = 2, High = 3, VeryHigh = 4 };

inline int rank(RiskLevel level) { return static_cast<int>(level); }

inline std::string_view risk_level_name(RiskLevel level) {
    switch (level) {
        case RiskLevel::VeryLow: return "VeryLow";
        case RiskLevel::Low: return "Low";
        case RiskLevel::Medium: return "Medium";
        case RiskLevel::High: return "High";
        case RiskLevel::VeryHigh: return "VeryHigh";
    }
    return "VeryHigh";
}

/// Accepts "VeryLow", "very low", "LOW", "very_high"... Source tables are
/// inconsistently cased, so parsing is forgiving.
inline RiskLevel parse_risk_level(std::string_view text) {
    std::string key;
    for (char c : normalize_key(text)) {
        if (c != ' ' && c != '_' && c != '-') key.push_back(c);
    }
    if (key == "verylow") return RiskLevel::VeryLow;
    if (key == "low") return RiskLevel::Low;
    if (key == "medium") return RiskLevel::Medium;
    if (key == "high") return RiskLevel::High;
    if (key == "veryhigh") return RiskLevel::VeryHigh;
    throw ConfigError("unknown risk level '" + std::string(text) + "'");
}

enum class RiskCategory { Error, Bugs, Faults, Failures };

constexpr std::array<RiskCategory, 4> kAllRiskCategories = {
    RiskCategory::Error, RiskCategory::Bugs, RiskCategory::Faults, RiskCategory::Failures};

inline std::string_view risk_category_name(RiskCategory c) {
    switch (c) {
        case RiskCategory::Error: return "Error";
        case RiskCategory::Bugs: return "Bugs";
        case RiskCategory::Faults: return "Faults";
        case RiskCategory::Failures: return "Failures";
    }
    return "Error";
}

inline RiskCategory parse_risk_category(std::string_view text) {
    const std::string key = normalize_key(text);
    if (key == "error" || key == "errors") return RiskCategory::Error;
    if (key == "bugs" || key == "bug") return RiskCategory::Bugs;
    if (key == "faults" || key == "fault") return RiskCategory::Faults;
    if (key == "failures" || key == "failure") return RiskCategory::Failures;
    throw ConfigError("unknown risk category '" + std::string(text) + "'");
}

struct RiskFactor {
    RiskCategory category;
    std::string name;
    RiskLevel level;
};

/// Catalog of known risk factors, keyed by (category, normalized name).
class RiskFactorCatalog {
public:
    explicit RiskFactorCatalog(std::vector<RiskFactor> entries, std::string comments = "")
        : entries_(std::move(entries)), comments_(std::move(comments)) {
        if (entries_.empty()) throw ConfigError("risk factor catalog is empty");
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            const auto key = std::make_pair(entries_[i].category, normalize_key(entries_[i].name));
            if (key.second.empty()) throw ConfigError("risk factor with empty name");
            if (!index_.emplace(key, i).second) {
                throw ConfigError("duplicate risk factor '" + entries_[i].name + "' in category " +
                                  std::string(risk_category_name(entries_[i].category)));
            }
        }
    }

    /// The bundled default transcribes the published factor table:
    /// catalog/table_2_5.json carries the same data. The table's Failures
    /// row lists one more level token ("Low") than it names factors; the
    /// orphan token is recorded in comments rather than invented a name.
    static RiskFactorCatalog bundled() {
        std::vector<RiskFactor> entries = {
            {RiskCategory::Error, "Locate error", RiskLevel::Low},
            {RiskCategory::Error, "Analyze error", RiskLevel::Low},
            {RiskCategory::Error, "Estimate error", RiskLevel::Medium},
            {RiskCategory::Bugs, "Control bugs", RiskLevel::Medium},
            {RiskCategory::Bugs, "Runtime bugs", RiskLevel::Low},
            {RiskCategory::Bugs, "Software bugs", RiskLevel::Medium},
            {RiskCategory::Bugs, "Unauthorized access", RiskLevel::High},
            {RiskCategory::Faults, "Wrong boundary value", RiskLevel::Medium},
            {RiskCategory::Faults, "Initialization problem", RiskLevel::Low},
            {RiskCategory::Faults, "Reference", RiskLevel::Low},
            {RiskCategory::Faults, "Format inconsistency", RiskLevel::Low},
            {RiskCategory::Failures, "Transient failure", RiskLevel::High},
            {RiskCategory::Failures, "Unrecoverable computing", RiskLevel::High},
        };
        return RiskFactorCatalog(
            std::move(entries),
            "Source table lists a third 'Low' level token in the Failures row with no "
            "matching factor name; it is preserved here as a note only.");
    }

    const std::vector<RiskFactor>& entries() const { return entries_; }
    const std::string& comments() const { return comments_; }

    /// Exact lookup on (category, case-insensitive whitespace-normalized
    /// name). Unknown names raise NotFoundError listing the nearest ones.
    RiskLevel lookup(RiskCategory category, std::string_view name) const {
        const auto it = index_.find(std::make_pair(category, normalize_key(name)));
        if (it == index_.end()) {
            throw NotFoundError("unknown risk factor '" + std::string(name) + "' in category " +
                                std::string(risk_category_name(category)) +
                                "; nearest: " + nearest_names(name));
        }
        return entries_[it->second].level;
    }

private:
    std::string nearest_names(std::string_view name, std::size_t limit = 3) const {
        const std::string key = normalize_key(name);
        std::vector<std::pair<std::size_t, std::string>> scored;
        scored.reserve(entries_.size());
        for (const auto& e : entries_) {
            scored.emplace_back(edit_distance(key, normalize_key(e.name)), e.name);
        }
        std::sort(scored.begin(), scored.end());
        std::string out;
        for (std::size_t i = 0; i < std::min(limit, scored.size()); ++i) {
            if (i) out += ", ";
            out += "'" + scored[i].second + "'";
        }
        return out;
    }

    std::vector<RiskFactor> entries_;
    std::string comments_;
    std::map<std::pair<RiskCategory, std::string>, std::size_t> index_;
};

/// percent of factors that produce a major effect: 100 * major / total.
inline double risk_percentage(std::size_t major_count, std::size_t total_count) {
    if (total_count == 0) {
        throw DegenerateInputError("risk percentage undefined for zero total factors");
    }
    if (major_count > total_count) {
        throw DomainError("major factor count exceeds total factor count");
    }
    return 100.0 * static_cast<double>(major_count) / static_cast<double>(total_count);
}

enum class RiskBucket { Low, Medium, High };

inline std::string_view risk_bucket_name(RiskBucket b) {
    switch (b) {
        case RiskBucket::Low: return "Low";
        case RiskBucket::Medium: return "Medium";
        case RiskBucket::High: return "High";
    }
    return "High";
}

/// Low on [0, 30], Medium on (30, 60], High on (60, 100]. The published
/// integer endpoints are preserved exactly; real values in between fall in
/// the half-open extension.
inline RiskBucket bucket_risk(double percent) {
    if (std::isnan(percent) || percent < 0.0 || percent > 100.0) {
        throw DomainError("risk percent must lie in [0, 100]");
    }
    if (percent <= 30.0) return RiskBucket::Low;
    if (percent <= 60.0) return RiskBucket::Medium;
    return RiskBucket::High;
}

struct Assessment {
    double percent = 0.0;
    RiskBucket bucket = RiskBucket::Low;
    std::size_t major_count = 0;
    std::size_t total_count = 0;
};

using ObservedFactor = std::pair<RiskCategory, std::string>;

/// Scores an incident list of observed factors against the catalog. A
/// factor is "major" when its catalog level ranks at or above
/// major_threshold. Duplicates count every occurrence.
inline Assessment assess(const std::vector<ObservedFactor>& observed,
                         const RiskFactorCatalog& catalog,
                         RiskLevel major_threshold = RiskLevel::High) {
    if (observed.empty()) {
        throw DegenerateInputError("no observed risk factors to assess");
    }
    Assessment a;
    a.total_count = observed.size();
    for (const auto& [category, name] : observed) {
        if (rank(catalog.lookup(category, name)) >= rank(major_threshold)) ++a.major_count;
    }
    a.percent = risk_percentage(a.major_count, a.total_count);
    a.bucket = bucket_risk(a.percent);
    return a;
}

} // namespace riskchain
