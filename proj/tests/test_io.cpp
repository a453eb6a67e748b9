#include "riskchain/io.hpp"

#include "riskchain/report_builders.hpp"
#include "support/paths.hpp"
#include "support/schema_check.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

using namespace riskchain;

TEST_CASE("bundled profile file equals the built-in profile", "[io]") {
    const auto from_file = load_token_profile(testpaths::source_root() / "profiles" / "c_family.json");
    const auto builtin = c_family_profile();
    CHECK(from_file.name == builtin.name);
    CHECK(from_file.operators == builtin.operators);
    CHECK(from_file.line_comment == builtin.line_comment);
    REQUIRE(from_file.block_comment.has_value());
    CHECK(from_file.block_comment->open == builtin.block_comment->open);
    CHECK(from_file.block_comment->close == builtin.block_comment->close);
    CHECK(from_file.string_delimiters == builtin.string_delimiters);
    CHECK(from_file.keywords == builtin.keywords);
}

TEST_CASE("profile JSON round trip", "[io]") {
    const auto p = c_family_profile();
    const auto round = token_profile_from_json(token_profile_to_json(p));
    CHECK(round.operators == p.operators);
    CHECK(round.keywords == p.keywords);
}

TEST_CASE("bundled format rules file mirrors the defaults", "[io]") {
    const auto from_file = load_format_rules(testpaths::source_root() / "rules" / "format_default.json");
    const auto builtin = FormatRules::defaults();
    REQUIRE(from_file.rules.size() == builtin.rules.size());
    for (std::size_t i = 0; i < builtin.rules.size(); ++i) {
        CHECK(from_file.rules[i].pattern_text == builtin.rules[i].pattern_text);
        CHECK(from_file.rules[i].captures == builtin.rules[i].captures);
    }
}

TEST_CASE("bundled class rules file mirrors the defaults", "[io]") {
    const auto from_file =
        load_classification_rules(testpaths::source_root() / "rules" / "classes_default.json");
    const auto builtin = ClassificationRules::defaults();
    REQUIRE(from_file.rules.size() == builtin.rules.size());
    for (std::size_t i = 0; i < builtin.rules.size(); ++i) {
        CHECK(from_file.rules[i].pattern_text == builtin.rules[i].pattern_text);
        CHECK(from_file.rules[i].cls == builtin.rules[i].cls);
    }
    CHECK(from_file.default_class == builtin.default_class);
}

TEST_CASE("invalid configs throw ConfigError", "[io]") {
    CHECK_THROWS_AS(token_profile_from_json(json::parse(R"({"name":"x"})")), ConfigError);
    CHECK_THROWS_AS(token_profile_from_json(json::parse(R"({"operators":[]})")), ConfigError);
    CHECK_THROWS_AS(format_rules_from_json(json::parse(R"({"rules":[{"pattern":"(","captures":{"message":1}}]})")),
                    ConfigError);
    CHECK_THROWS_AS(classification_rules_from_json(json::parse(R"({"rules":[{"pattern":"x","class":"Bogus"}]})")),
                    ConfigError);
    CHECK_THROWS_AS(catalog_from_json(json::parse(R"({"factors":[]})")), ConfigError);
    CHECK_THROWS_AS(load_catalog("/no/such/file.json"), ConfigError);
}

TEST_CASE("observed factors accept JSON and CSV", "[io]") {
    const auto from_json = parse_observed_factors(
        R"([{"category":"Error","name":"Locate error"},{"category":"Failures","name":"Transient failure"}])");
    REQUIRE(from_json.size() == 2);
    CHECK(from_json[0].first == RiskCategory::Error);
    CHECK(from_json[1].second == "Transient failure");

    const auto from_csv = parse_observed_factors(
        "# incident list\n"
        "Error, Locate error\n"
        "Failures, Transient failure\n"
        "\n");
    REQUIRE(from_csv.size() == 2);
    CHECK(from_csv[0].second == "Locate error");

    CHECK_THROWS_AS(parse_observed_factors("not,a,category\n"), ConfigError);
    CHECK_THROWS_AS(parse_observed_factors("no comma here\n"), ConfigError);
}

TEST_CASE("skills profile loading", "[io]") {
    const auto devs = load_developers(testpaths::fixture("team6.json"));
    REQUIRE(devs.size() == 6);
    CHECK(devs[0].id == "v_ada");
    CHECK(devs[0].proficiencies.at("c") == Proficiency::Expert);
    CHECK(devs[0].proficiencies.at("sql") == Proficiency::Moderate);

    SECTION("proficiency tokens are case-insensitive") {
        const auto parsed = developers_from_json(
            json::parse(R"({"developers":[{"id":"x","skills":{"C":"Expert","SQL":"MODERATE"}}]})"));
        REQUIRE(parsed.size() == 1);
        CHECK(parsed[0].proficiencies.at("c") == Proficiency::Expert);
        CHECK(parsed[0].proficiencies.at("sql") == Proficiency::Moderate);
    }
    SECTION("bad tokens are rejected") {
        CHECK_THROWS_AS(developers_from_json(json::parse(
                            R"({"developers":[{"id":"x","skills":{"c":"guru"}}]})")),
                        ConfigError);
        CHECK_THROWS_AS(developers_from_json(json::parse(
                            R"({"developers":[{"id":" ","skills":{}}]})")),
                        ConfigError);
    }
    SECTION("duplicate ids are rejected") {
        CHECK_THROWS_AS(developers_from_json(json::parse(
                            R"({"developers":[{"id":"x","skills":{"c":"expert"}},
                                              {"id":"x","skills":{"d":"expert"}}]})")),
                        ConfigError);
    }
}

TEST_CASE("serialized outputs validate against the shipped schemas", "[io]") {
    const auto schema_dir = testpaths::source_root() / "schemas";
    const auto profile = c_family_profile();
    const auto class_rules = ClassificationRules::defaults();

    SECTION("metrics report") {
        json reports = json::array();
        reports.push_back(metrics_report_to_json(analyze_unit("a.c", "a = b + c\n", profile)));
        reports.push_back(metrics_report_to_json(analyze_unit("b.c", "", profile)));
        const auto errors =
            schemacheck::validate(reports, parse_json_file(schema_dir / "metrics_report.schema.json"));
        CHECK(errors == std::vector<std::string>{});
    }

    SECTION("diagnose report") {
        const auto parsed = parse_diagnostics(
            "main.c:12: error: expected ';'\n"
            "noise\n"
            "ld: error: undefined symbol: foo\n",
            FormatRules::defaults());
        const json report = diagnose_report_to_json(parsed, class_rules);
        const auto errors = schemacheck::validate(
            report, parse_json_file(schema_dir / "diagnose_report.schema.json"));
        CHECK(errors == std::vector<std::string>{});
    }

    SECTION("risk assessment") {
        const auto assessment = assess({{RiskCategory::Error, "Locate error"},
                                        {RiskCategory::Failures, "Transient failure"}},
                                       RiskFactorCatalog::bundled());
        const auto errors = schemacheck::validate(
            assessment_to_json(assessment),
            parse_json_file(schema_dir / "risk_assessment.schema.json"));
        CHECK(errors == std::vector<std::string>{});
    }

    SECTION("team plan") {
        const auto devs = load_developers(testpaths::fixture("team6.json"));
        const auto groups = group_developers(devs);
        const auto plan = team_risk_report(groups.vsps, groups.hsps, true);
        const auto errors = schemacheck::validate(
            team_report_to_json(groups, plan),
            parse_json_file(schema_dir / "team_plan.schema.json"));
        CHECK(errors == std::vector<std::string>{});
    }
}

TEST_CASE("dump_json is deterministic", "[io]") {
    const auto assessment = assess({{RiskCategory::Error, "Locate error"},
                                    {RiskCategory::Failures, "Transient failure"}},
                                   RiskFactorCatalog::bundled());
    const std::string a = dump_json(assessment_to_json(assessment));
    const std::string b = dump_json(assessment_to_json(assessment));
    CHECK(a == b);
    CHECK(a.back() == '\n');
    CHECK(a.find("\"percent\": 50.0") != std::string::npos);
    CHECK(a.find("\"bucket\": \"Medium\"") != std::string::npos);
}
