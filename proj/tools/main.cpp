// riskchain: code metrics, diagnostic classification, risk scoring and
// team pairing over skill sets, from one CLI.

#include "riskchain/riskchain.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using riskchain::json;

/// Optional ./riskchain.json in the working directory. Flags beat config
/// file entries, which beat built-in defaults.
class DiscoveredConfig {
public:
    DiscoveredConfig() {
        const std::filesystem::path local = "riskchain.json";
        if (std::filesystem::exists(local)) {
            data_ = riskchain::parse_json_file(local);
            if (!data_.is_object()) {
                throw riskchain::ConfigError("riskchain.json must hold a JSON object");
            }
        } else {
            data_ = json::object();
        }
    }

    std::optional<std::string> string_key(const std::string& key) const {
        if (!data_.contains(key)) return std::nullopt;
        return data_.at(key).get<std::string>();
    }

    std::optional<double> number_key(const std::string& key) const {
        if (!data_.contains(key)) return std::nullopt;
        return data_.at(key).get<double>();
    }

private:
    json data_;
};

riskchain::TokenProfile resolve_profile(const std::string& flag, const DiscoveredConfig& config) {
    if (!flag.empty()) return riskchain::load_token_profile(flag);
    if (auto path = config.string_key("profile")) return riskchain::load_token_profile(*path);
    return riskchain::c_family_profile();
}

riskchain::FormatRules resolve_format_rules(const std::string& flag,
                                            const DiscoveredConfig& config) {
    if (!flag.empty()) return riskchain::load_format_rules(flag);
    if (auto path = config.string_key("format_rules")) return riskchain::load_format_rules(*path);
    return riskchain::FormatRules::defaults();
}

riskchain::ClassificationRules resolve_class_rules(const std::string& flag,
                                                   const DiscoveredConfig& config) {
    if (!flag.empty()) return riskchain::load_classification_rules(flag);
    if (auto path = config.string_key("class_rules")) {
        return riskchain::load_classification_rules(*path);
    }
    return riskchain::ClassificationRules::defaults();
}

riskchain::RiskFactorCatalog resolve_catalog(const std::string& flag,
                                             const DiscoveredConfig& config) {
    if (!flag.empty()) return riskchain::load_catalog(flag);
    if (auto path = config.string_key("catalog")) return riskchain::load_catalog(*path);
    return riskchain::RiskFactorCatalog::bundled();
}

riskchain::LocMode parse_loc_mode(const std::string& text) {
    if (text == "all_lines") return riskchain::LocMode::AllLines;
    if (text == "nonblank") return riskchain::LocMode::Nonblank;
    if (text == "nonblank_noncomment") return riskchain::LocMode::NonblankNoncomment;
    throw riskchain::ConfigError(
        "unknown loc mode '" + text + "' (expected all_lines|nonblank|nonblank_noncomment)");
}

void emit(const json& document, const std::string& json_out) {
    const std::string payload = riskchain::dump_json(document);
    std::cout << payload;
    if (!json_out.empty()) riskchain::write_file(json_out, payload);
}

struct MetricsArgs {
    std::vector<std::string> paths;
    std::string profile, loc_mode, json_out;
    double log_base = 0.0; // 0 = unset
    double v_low = -1.0, v_high = -1.0;
};

int run_metrics(const MetricsArgs& args) {
    const DiscoveredConfig config;
    const auto profile = resolve_profile(args.profile, config);

    riskchain::MetricsOptions opts;
    std::string mode = args.loc_mode;
    if (mode.empty()) mode = config.string_key("loc_mode").value_or("all_lines");
    opts.loc_mode = parse_loc_mode(mode);
    opts.log_base = args.log_base > 0.0 ? args.log_base : config.number_key("log_base").value_or(2.0);
    opts.thresholds.v_low = args.v_low >= 0.0 ? args.v_low : config.number_key("v_low").value_or(100.0);
    opts.thresholds.v_high =
        args.v_high >= 0.0 ? args.v_high : config.number_key("v_high").value_or(1000.0);

    std::vector<riskchain::MetricsReport> reports;
    for (const auto& path : args.paths) {
        reports.push_back(riskchain::analyze_unit(path, riskchain::read_file(path), profile, opts));
    }
    std::sort(reports.begin(), reports.end(),
              [](const auto& a, const auto& b) { return a.unit_id < b.unit_id; });

    json out = json::array();
    for (const auto& r : reports) out.push_back(riskchain::metrics_report_to_json(r));
    emit(out, args.json_out);
    return 0;
}

struct DiagnoseArgs {
    std::string log_path, format_rules, class_rules, author, json_out;
};

int run_diagnose(const DiagnoseArgs& args) {
    const DiscoveredConfig config;
    const auto format = resolve_format_rules(args.format_rules, config);
    const auto classes = resolve_class_rules(args.class_rules, config);

    riskchain::ParseResult parsed =
        riskchain::parse_diagnostics(riskchain::read_file(args.log_path), format);
    if (!args.author.empty()) {
        for (auto& d : parsed.diagnostics) {
            if (!d.source_author) d.source_author = args.author;
        }
    }
    emit(riskchain::diagnose_report_to_json(parsed, classes), args.json_out);
    return 0;
}

struct RiskArgs {
    std::string factors, catalog, major_threshold, json_out;
};

int run_risk(const RiskArgs& args) {
    const DiscoveredConfig config;
    const auto catalog = resolve_catalog(args.catalog, config);
    std::string threshold = args.major_threshold;
    if (threshold.empty()) threshold = config.string_key("major_threshold").value_or("High");

    const auto assessment = riskchain::assess(riskchain::load_observed_factors(args.factors),
                                              catalog, riskchain::parse_risk_level(threshold));
    emit(riskchain::assessment_to_json(assessment), args.json_out);
    return 0;
}

struct TeamArgs {
    std::string skills, json_out;
    bool chain = false;
};

int run_team(const TeamArgs& args) {
    const auto developers = riskchain::load_developers(args.skills);
    const auto groups = riskchain::group_developers(developers);
    if (groups.vsps.empty() || groups.hsps.empty()) {
        throw riskchain::DomainError(
            "team formation needs at least one VSP and one HSP (found " +
            std::to_string(groups.vsps.size()) + " VSPs, " + std::to_string(groups.hsps.size()) +
            " HSPs)");
    }
    const auto plan = riskchain::team_risk_report(groups.vsps, groups.hsps, args.chain);
    emit(riskchain::team_report_to_json(groups, plan), args.json_out);
    return 0;
}

struct ReportArgs {
    std::vector<std::string> from;
    std::string chart, out, style = "svg";
};

riskchain::ErrorHistogram histogram_from_json(const json& j) {
    riskchain::ErrorHistogram hist;
    for (const auto& [author, cells] : j.items()) {
        for (riskchain::ErrorClass c : riskchain::kAllErrorClasses) {
            const std::string key{riskchain::error_class_name(c)};
            hist[author][c] = cells.value(key, 0ull);
        }
    }
    return hist;
}

int run_report(const ReportArgs& args) {
    riskchain::ChartStyle style;
    if (args.style == "svg") style = riskchain::ChartStyle::Svg;
    else if (args.style == "ascii") style = riskchain::ChartStyle::Ascii;
    else throw riskchain::ConfigError("unknown chart style '" + args.style + "' (svg|ascii)");

    riskchain::ChartSpec spec;
    if (args.chart == "errors") {
        riskchain::ErrorHistogram merged;
        for (const auto& path : args.from) {
            const json doc = riskchain::parse_json_file(path);
            if (!doc.contains("histogram")) {
                throw riskchain::ConfigError(path + " is not a diagnose report (no histogram)");
            }
            for (const auto& [author, cells] : histogram_from_json(doc.at("histogram"))) {
                for (const auto& [cls, count] : cells) merged[author][cls] += count;
            }
        }
        if (merged.empty()) throw riskchain::DomainError("no histogram data to chart");
        spec = riskchain::error_chart(merged, style);
    } else if (args.chart == "risk") {
        spec.title = "Risk by pairing";
        spec.style = style;
        riskchain::Series risk{"risk rank", {}};
        riskchain::Series shared{"shared skills", {}};
        for (const auto& path : args.from) {
            const json doc = riskchain::parse_json_file(path);
            if (!doc.contains("pairs")) {
                throw riskchain::ConfigError(path + " is not a team plan (no pairs)");
            }
            for (const auto& pair : doc.at("pairs")) {
                const std::string vsp = pair.at("vsp").is_null() ? "-" : pair.at("vsp").get<std::string>();
                const std::string hsp = pair.at("hsp").is_null() ? "-" : pair.at("hsp").get<std::string>();
                spec.categories.push_back(vsp + "+" + hsp);
                risk.values.push_back(static_cast<double>(
                    rank(riskchain::parse_risk_level(pair.at("risk").get<std::string>()))));
                shared.values.push_back(pair.at("weight").get<double>());
            }
        }
        spec.series.push_back(std::move(risk));
        spec.series.push_back(std::move(shared));
    } else {
        throw riskchain::ConfigError("unknown chart kind '" + args.chart + "' (errors|risk)");
    }

    riskchain::write_file(args.out, riskchain::render_chart(spec));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"code metrics, error taxonomy, risk scoring and VSP/HSP team pairing"};
    app.require_subcommand(1);

    MetricsArgs metrics_args;
    auto* metrics = app.add_subcommand("metrics", "analyze source files (LOC, volume, level)");
    metrics->add_option("paths", metrics_args.paths, "source files to analyze")
        ->required()
        ->expected(-1);
    metrics->add_option("--profile", metrics_args.profile, "token profile JSON");
    metrics->add_option("--loc-mode", metrics_args.loc_mode,
                        "all_lines|nonblank|nonblank_noncomment");
    metrics->add_option("--log-base", metrics_args.log_base, "volume log base (default 2)")
        ->check(CLI::PositiveNumber);
    metrics->add_option("--v-low", metrics_args.v_low, "Low/Medium volume cutpoint")
        ->check(CLI::NonNegativeNumber);
    metrics->add_option("--v-high", metrics_args.v_high, "Medium/High volume cutpoint")
        ->check(CLI::NonNegativeNumber);
    metrics->add_option("--json", metrics_args.json_out, "also write the JSON report here");

    DiagnoseArgs diagnose_args;
    auto* diagnose = app.add_subcommand("diagnose", "parse and classify a compiler log");
    diagnose->add_option("log", diagnose_args.log_path, "diagnostic log file")->required();
    diagnose->add_option("--format-rules", diagnose_args.format_rules, "line format rules JSON");
    diagnose->add_option("--class-rules", diagnose_args.class_rules, "classification rules JSON");
    diagnose->add_option("--author", diagnose_args.author,
                         "author label for diagnostics that carry none");
    diagnose->add_option("--json", diagnose_args.json_out, "also write the JSON report here");

    RiskArgs risk_args;
    auto* risk = app.add_subcommand("risk", "score observed risk factors");
    risk->add_option("--factors", risk_args.factors, "observed factors (JSON list or CSV)")
        ->required();
    risk->add_option("--catalog", risk_args.catalog, "risk factor catalog JSON");
    risk->add_option("--major-threshold", risk_args.major_threshold,
                     "level that counts as a major effect (default High)");
    risk->add_option("--json", risk_args.json_out, "also write the JSON report here");

    TeamArgs team_args;
    auto* team = app.add_subcommand("team", "recommend VSP/HSP pairings");
    team->add_option("--skills", team_args.skills, "skills profile JSON")->required();
    team->add_flag("--chain", team_args.chain, "optimize the chain order");
    team->add_option("--json", team_args.json_out, "also write the JSON report here");

    ReportArgs report_args;
    auto* report = app.add_subcommand("report", "render a bar chart from JSON reports");
    report->add_option("--from", report_args.from, "input JSON report files")
        ->required()
        ->expected(-1);
    report->add_option("--chart", report_args.chart, "errors|risk")->required();
    report->add_option("--out", report_args.out, "output file")->required();
    report->add_option("--style", report_args.style, "svg|ascii");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // help on stdout, exit 0
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (metrics->parsed()) return run_metrics(metrics_args);
        if (diagnose->parsed()) return run_diagnose(diagnose_args);
        if (risk->parsed()) return run_risk(risk_args);
        if (team->parsed()) return run_team(team_args);
        if (report->parsed()) return run_report(report_args);
    } catch (const riskchain::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const riskchain::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
