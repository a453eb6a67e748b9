#pragma once

#include "riskchain/allocation.hpp"
#include "riskchain/diagnostics.hpp"
#include "riskchain/errors.hpp"
#include "riskchain/metrics.hpp"
#include "riskchain/riskmodel.hpp"
#include "riskchain/skillsets.hpp"
#include "riskchain/token_profile.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace riskchain {

using json = nlohmann::json;

/// Canonical serialization used for every JSON artifact: two-space indent,
/// keys sorted (nlohmann objects are ordered maps), trailing newline.
inline std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

inline std::string read_file(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) {
        throw ConfigError("cannot open file: " + path.string());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write file: " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

inline json parse_json_file(const std::filesystem::path& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw ConfigError("invalid JSON in " + path.string() + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Token profiles

inline TokenProfile token_profile_from_json(const json& j) {
    try {
        TokenProfile p;
        p.name = j.value("name", "unnamed");
        p.operators = j.at("operators").get<std::vector<std::string>>();
        p.line_comment = j.value("line_comment", "");
        if (j.contains("block_comment") && !j.at("block_comment").is_null()) {
            const auto& bc = j.at("block_comment");
            p.block_comment = BlockCommentMarkers{bc.at("open").get<std::string>(),
                                                  bc.at("close").get<std::string>()};
        }
        for (const auto& d : j.value("string_delimiters", std::vector<std::string>{})) {
            if (d.size() != 1) throw ConfigError("string delimiter must be a single character");
            p.string_delimiters.push_back(d[0]);
        }
        p.keywords = j.value("keywords", std::vector<std::string>{});
        p.validate();
        return p;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad token profile: ") + e.what());
    }
}

inline json token_profile_to_json(const TokenProfile& p) {
    json j;
    j["name"] = p.name;
    j["operators"] = p.operators;
    j["line_comment"] = p.line_comment;
    if (p.block_comment) {
        j["block_comment"] = {{"open", p.block_comment->open}, {"close", p.block_comment->close}};
    } else {
        j["block_comment"] = nullptr;
    }
    json delims = json::array();
    for (char c : p.string_delimiters) delims.push_back(std::string(1, c));
    j["string_delimiters"] = delims;
    j["keywords"] = p.keywords;
    return j;
}

inline TokenProfile load_token_profile(const std::filesystem::path& path) {
    return token_profile_from_json(parse_json_file(path));
}

// ---------------------------------------------------------------------------
// Diagnostic format and classification rules

inline FormatRules format_rules_from_json(const json& j) {
    try {
        FormatRules fr;
        for (const auto& r : j.at("rules")) {
            std::map<std::string, int> captures;
            for (const auto& [name, idx] : r.at("captures").items()) {
                captures[name] = idx.get<int>();
            }
            fr.rules.push_back(
                detail::make_format_rule(r.at("pattern").get<std::string>(), std::move(captures)));
        }
        fr.validate();
        return fr;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad format rules: ") + e.what());
    }
}

inline FormatRules load_format_rules(const std::filesystem::path& path) {
    return format_rules_from_json(parse_json_file(path));
}

inline ClassificationRules classification_rules_from_json(const json& j) {
    try {
        ClassificationRules cr;
        for (const auto& r : j.at("rules")) {
            ErrorClass cls;
            const std::string name = r.at("class").get<std::string>();
            if (name == "Known") cls = ErrorClass::Known;
            else if (name == "Predictable") cls = ErrorClass::Predictable;
            else if (name == "Unpredictable") cls = ErrorClass::Unpredictable;
            else throw ConfigError("unknown error class '" + name + "'");
            cr.rules.push_back(detail::make_class_rule(r.at("pattern").get<std::string>(), cls));
        }
        if (j.contains("default_class")) {
            const std::string name = j.at("default_class").get<std::string>();
            if (name == "Known") cr.default_class = ErrorClass::Known;
            else if (name == "Predictable") cr.default_class = ErrorClass::Predictable;
            else if (name == "Unpredictable") cr.default_class = ErrorClass::Unpredictable;
            else throw ConfigError("unknown default error class '" + name + "'");
        }
        return cr;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad classification rules: ") + e.what());
    }
}

inline ClassificationRules load_classification_rules(const std::filesystem::path& path) {
    return classification_rules_from_json(parse_json_file(path));
}

// ---------------------------------------------------------------------------
// Risk factor catalog and observed factors

inline RiskFactorCatalog catalog_from_json(const json& j) {
    try {
        std::vector<RiskFactor> entries;
        for (const auto& f : j.at("factors")) {
            entries.push_back(RiskFactor{parse_risk_category(f.at("category").get<std::string>()),
                                         f.at("name").get<std::string>(),
                                         parse_risk_level(f.at("level").get<std::string>())});
        }
        return RiskFactorCatalog(std::move(entries), j.value("comments", ""));
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad risk factor catalog: ") + e.what());
    }
}

inline json catalog_to_json(const RiskFactorCatalog& catalog) {
    json j;
    j["comments"] = catalog.comments();
    json factors = json::array();
    for (const auto& f : catalog.entries()) {
        factors.push_back({{"category", std::string(risk_category_name(f.category))},
                           {"name", f.name},
                           {"level", std::string(risk_level_name(f.level))}});
    }
    j["factors"] = factors;
    return j;
}

inline RiskFactorCatalog load_catalog(const std::filesystem::path& path) {
    return catalog_from_json(parse_json_file(path));
}

/// Observed factors arrive either as a JSON array of {category, name}
/// objects or as CSV lines "category,name". The first non-blank character
/// decides which parser runs.
inline std::vector<ObservedFactor> parse_observed_factors(std::string_view content) {
    const std::string_view trimmed = trim(content);
    std::vector<ObservedFactor> out;
    if (!trimmed.empty() && trimmed.front() == '{') {
        throw ConfigError("observed factors must be a JSON array or CSV lines, not a JSON object");
    }
    if (!trimmed.empty() && trimmed.front() == '[') {
        json j;
        try {
            j = json::parse(trimmed);
            for (const auto& f : j) {
                out.emplace_back(parse_risk_category(f.at("category").get<std::string>()),
                                 f.at("name").get<std::string>());
            }
        } catch (const json::exception& e) {
            throw ConfigError(std::string("bad observed factors JSON: ") + e.what());
        }
        return out;
    }
    for (auto line : split_lines(content)) {
        const std::string_view t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const std::size_t comma = t.find(',');
        if (comma == std::string_view::npos) {
            throw ConfigError("bad observed factors CSV line: '" + std::string(t) +
                              "' (expected category,name)");
        }
        out.emplace_back(parse_risk_category(trim(t.substr(0, comma))),
                         std::string(trim(t.substr(comma + 1))));
    }
    return out;
}

inline std::vector<ObservedFactor> load_observed_factors(const std::filesystem::path& path) {
    return parse_observed_factors(read_file(path));
}

// ---------------------------------------------------------------------------
// Developers / skills profile

inline std::vector<Developer> developers_from_json(const json& j) {
    try {
        std::vector<Developer> out;
        std::set<std::string> seen_ids;
        for (const auto& d : j.at("developers")) {
            Developer dev;
            dev.id = d.at("id").get<std::string>();
            if (trim(dev.id).empty()) throw ConfigError("developer with empty id");
            if (!seen_ids.insert(dev.id).second) {
                throw ConfigError("duplicate developer id '" + dev.id + "'");
            }
            for (const auto& [skill, prof] : d.at("skills").items()) {
                const std::string key = normalize_key(skill);
                if (key.empty()) throw ConfigError("developer '" + dev.id + "' has an empty skill");
                dev.proficiencies[key] = parse_proficiency(prof.get<std::string>());
            }
            out.push_back(std::move(dev));
        }
        return out;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad skills profile: ") + e.what());
    }
}

inline std::vector<Developer> load_developers(const std::filesystem::path& path) {
    return developers_from_json(parse_json_file(path));
}

// ---------------------------------------------------------------------------
// Report serialization

inline json metrics_report_to_json(const MetricsReport& r) {
    json j;
    j["unit_id"] = r.unit_id;
    j["loc"] = r.loc_n;
    j["total_operators"] = r.counts.total_operators;
    j["total_operands"] = r.counts.total_operands;
    j["distinct_operators"] = r.counts.distinct_operators;
    j["distinct_operands"] = r.counts.distinct_operands;
    j["n"] = r.counts.n;
    j["volume"] = r.volume_v;
    j["level"] = std::string(program_level_name(r.level));
    return j;
}

inline json diagnostic_to_json(const Diagnostic& d, const ClassificationRules& rules) {
    json j;
    j["file"] = d.file;
    if (d.line) j["line"] = *d.line;
    else j["line"] = nullptr;
    switch (d.severity) {
        case Severity::Error: j["severity"] = "error"; break;
        case Severity::Warning: j["severity"] = "warning"; break;
        case Severity::Other: j["severity"] = "other"; break;
    }
    j["message"] = d.message;
    j["author"] = d.source_author ? json(*d.source_author) : json(nullptr);
    j["class"] = std::string(error_class_name(classify_error(d, rules)));
    return j;
}

inline json histogram_to_json(const ErrorHistogram& hist) {
    json j = json::object();
    for (const auto& [author, cells] : hist) {
        json row = json::object();
        for (ErrorClass c : kAllErrorClasses) {
            const auto it = cells.find(c);
            row[std::string(error_class_name(c))] = it == cells.end() ? 0 : it->second;
        }
        j[author] = row;
    }
    return j;
}

inline json diagnose_report_to_json(const ParseResult& parsed, const ClassificationRules& rules) {
    json j;
    json diags = json::array();
    for (const auto& d : parsed.diagnostics) diags.push_back(diagnostic_to_json(d, rules));
    j["diagnostics"] = diags;
    j["histogram"] = histogram_to_json(error_histogram(parsed.diagnostics, rules));
    j["unparsed_lines"] = parsed.unparsed_lines;
    return j;
}

inline json assessment_to_json(const Assessment& a) {
    json j;
    j["percent"] = a.percent;
    j["bucket"] = std::string(risk_bucket_name(a.bucket));
    j["major_count"] = a.major_count;
    j["total_count"] = a.total_count;
    return j;
}

/// Full team-command payload: group membership plus the plan itself.
inline json team_report_to_json(const GroupedDevelopers& groups, const TeamPlan& plan);

inline json team_plan_to_json(const TeamPlan& plan) {
    json j;
    json pairs = json::array();
    for (const auto& p : plan.pairs) {
        json pj;
        pj["vsp"] = p.pair.vsp_id ? json(*p.pair.vsp_id) : json(nullptr);
        pj["hsp"] = p.pair.hsp_id ? json(*p.pair.hsp_id) : json(nullptr);
        pj["weight"] = p.pair.weight;
        pj["relation"] = std::string(set_relation_name(p.relation));
        pj["risk"] = std::string(risk_level_name(p.risk));
        pj["union_strength"] = p.union_strength;
        pj["unpaired"] = p.pair.unpaired();
        pairs.push_back(std::move(pj));
    }
    j["pairs"] = pairs;
    j["chain_order"] = plan.chain_order;
    j["chain_score"] = plan.chain_score;
    j["heuristic"] = plan.heuristic_chain;
    j["overall_risk"] = std::string(risk_level_name(plan.overall_risk));
    return j;
}

inline json team_report_to_json(const GroupedDevelopers& groups, const TeamPlan& plan) {
    json j = team_plan_to_json(plan);
    json g;
    json vsps = json::array(), hsps = json::array(), unclassified = json::array();
    for (const auto& m : groups.vsps) vsps.push_back(m.id);
    for (const auto& m : groups.hsps) hsps.push_back(m.id);
    for (const auto& id : groups.unclassified) unclassified.push_back(id);
    g["vsps"] = vsps;
    g["hsps"] = hsps;
    g["unclassified"] = unclassified;
    j["groups"] = g;
    return j;
}

} // namespace riskchain
