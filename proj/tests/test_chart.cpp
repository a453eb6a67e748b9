#include "riskchain/chart.hpp"

#include "riskchain/report_builders.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <string>

using namespace riskchain;

namespace {

ChartSpec sample_spec() {
    ChartSpec spec;
    spec.title = "Errors by programmer";
    spec.categories = {"arun", "dev", "priya"};
    spec.series = {{"Known", {1, 0, 1}}, {"Predictable", {0, 1, 0}}, {"Unpredictable", {0, 0, 0}}};
    return spec;
}

} // namespace

TEST_CASE("chart validation", "[chart]") {
    ChartSpec spec;
    spec.title = "empty";
    CHECK_THROWS_AS(render_svg(spec), DomainError);

    spec = sample_spec();
    spec.series[0].values.pop_back();
    CHECK_THROWS_AS(render_svg(spec), DomainError);

    spec = sample_spec();
    spec.series[1].values[0] = -1.0;
    CHECK_THROWS_AS(render_svg(spec), DomainError);
}

TEST_CASE("zero-height bars render fine", "[chart]") {
    ChartSpec spec;
    spec.title = "zero";
    spec.categories = {"only"};
    spec.series = {{"series", {0.0}}};
    const std::string svg = render_svg(spec);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("height=\"0.00\"") != std::string::npos);
    CHECK_FALSE(render_ascii(spec).empty());
}

TEST_CASE("rendering is byte-deterministic", "[chart]") {
    const ChartSpec spec = sample_spec();
    CHECK(render_svg(spec) == render_svg(spec));
    CHECK(render_ascii(spec) == render_ascii(spec));
}

TEST_CASE("labels are XML-escaped", "[chart]") {
    ChartSpec spec;
    spec.title = "a < b & c";
    spec.categories = {"\"q\""};
    spec.series = {{"s", {1.0}}};
    const std::string svg = render_svg(spec);
    CHECK(svg.find("a &lt; b &amp; c") != std::string::npos);
    CHECK(svg.find("&quot;q&quot;") != std::string::npos);
    CHECK(svg.find("a < b &") == std::string::npos);
}

TEST_CASE("render_chart dispatches on style", "[chart]") {
    ChartSpec spec = sample_spec();
    spec.style = ChartStyle::Svg;
    CHECK(render_chart(spec).substr(0, 4) == "<svg");
    spec.style = ChartStyle::Ascii;
    CHECK(render_chart(spec).substr(0, spec.title.size()) == spec.title);
}

TEST_CASE("error_chart builds one series per class", "[chart]") {
    ErrorHistogram hist;
    hist["ada"] = {{ErrorClass::Known, 2}, {ErrorClass::Predictable, 1},
                   {ErrorClass::Unpredictable, 0}};
    hist["bob"] = {{ErrorClass::Known, 0}, {ErrorClass::Predictable, 0},
                   {ErrorClass::Unpredictable, 3}};
    const ChartSpec spec = error_chart(hist);
    CHECK(spec.categories == std::vector<std::string>{"ada", "bob"});
    REQUIRE(spec.series.size() == 3);
    CHECK(spec.series[0].label == "Known");
    CHECK(spec.series[0].values == std::vector<double>{2, 0});
    CHECK(spec.series[2].values == std::vector<double>{0, 3});
}

TEST_CASE("error_chart accepts per-author aggregates", "[chart]") {
    std::vector<AuthorAggregate> aggregates(2);
    aggregates[0].author = "ada";
    aggregates[0].error_counts = {{ErrorClass::Known, 1},
                                  {ErrorClass::Predictable, 0},
                                  {ErrorClass::Unpredictable, 2}};
    aggregates[1].author = "bob";
    aggregates[1].error_counts = {{ErrorClass::Known, 0},
                                  {ErrorClass::Predictable, 4},
                                  {ErrorClass::Unpredictable, 0}};
    const ChartSpec spec = error_chart(aggregates, ChartStyle::Ascii);
    CHECK(spec.categories == std::vector<std::string>{"ada", "bob"});
    CHECK(spec.series[1].values == std::vector<double>{0, 4});
    CHECK(spec.style == ChartStyle::Ascii);
}

TEST_CASE("risk_chart charts pair risk ranks and weights", "[chart]") {
    const TeamPlan plan = team_risk_report({{"v1", SkillSet{"c"}}, {"v2", SkillSet{"zz"}}},
                                           {{"h1", SkillSet{"c", "sql"}}, {"h2", SkillSet{"qq"}}});
    const ChartSpec spec = risk_chart(plan);
    REQUIRE(spec.categories.size() == 2);
    CHECK(spec.categories[0] == "v1+h1");
    REQUIRE(spec.series.size() == 2);
    CHECK(spec.series[0].label == "risk rank");
    CHECK(spec.series[0].values[0] == 0.0); // ProperSubset -> VeryLow
    CHECK(spec.series[0].values[1] == 4.0); // Disjoint -> VeryHigh
    CHECK(spec.series[1].values[0] == 1.0);
}
