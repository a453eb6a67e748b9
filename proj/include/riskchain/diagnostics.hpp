#pragma once

#include "riskchain/errors.hpp"
#include "riskchain/text.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <regex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace riskchain {

enum class Severity { Error, Warning, Other };

/// One parsed toolchain message.
struct Diagnostic {
    std::string file; // path or label, may be empty
    std::optional<std::size_t> line;
    Severity severity = Severity::Other;
    std::string message;
    std::optional<std::string> source_author;
};

/// Three-way taxonomy ordered by how unknowable the fix is:
/// Known < Predictable < Unpredictable.
enum class ErrorClass { Known = 0, Predictable = 1, Unpredictable = 2 };

constexpr std::array<ErrorClass, 3> kAllErrorClasses = {
    ErrorClass::Known, ErrorClass::Predictable, ErrorClass::Unpredictable};

inline std::string_view error_class_name(ErrorClass c) {
    switch (c) {
        case ErrorClass::Known: return "Known";
        case ErrorClass::Predictable: return "Predictable";
        case ErrorClass::Unpredictable: return "Unpredictable";
    }
    return "Unpredictable";
}

/// One line pattern with capture-group indices named in the config.
/// std::regex has no named groups, so the rule file maps capture names
/// ("file", "line", "severity", "message", "author") to group numbers.
struct FormatRule {
    std::string pattern_text;
    std::regex pattern;
    std::map<std::string, int> captures;
};

struct FormatRules {
    std::vector<FormatRule> rules;

    /// At least one rule must carry the full file/line/severity/message
    /// capture set; every rule needs at least a message capture.
    void validate() const {
        if (rules.empty()) throw ConfigError("format rules: no line patterns given");
        bool any_full = false;
        for (const auto& r : rules) {
            if (!r.captures.count("message")) {
                throw ConfigError("format rules: pattern '" + r.pattern_text +
                                  "' has no 'message' capture");
            }
            any_full = r.captures.count("file") && r.captures.count("line") &&
                               r.captures.count("severity") && r.captures.count("message")
                           ? true
                           : any_full;
        }
        if (!any_full) {
            throw ConfigError(
                "format rules: need at least one pattern capturing file/line/severity/message");
        }
    }

    static FormatRules defaults();
};

namespace detail {

inline FormatRule make_format_rule(std::string pattern, std::map<std::string, int> captures) {
    FormatRule rule;
    rule.pattern_text = std::move(pattern);
    try {
        rule.pattern = std::regex(rule.pattern_text, std::regex::ECMAScript);
    } catch (const std::regex_error& e) {
        throw ConfigError("format rules: invalid pattern '" + rule.pattern_text + "': " + e.what());
    }
    rule.captures = std::move(captures);
    return rule;
}

inline Severity parse_severity(std::string_view raw) {
    const std::string s = to_lower(trim(raw));
    if (s.find("error") != std::string::npos) return Severity::Error;
    if (s.find("warning") != std::string::npos) return Severity::Warning;
    return Severity::Other;
}

} // namespace detail

/// gcc/clang style "file:line[:col]: severity: message" plus a
/// "tool: severity: message" fallback for linker-style lines.
inline FormatRules FormatRules::defaults() {
    FormatRules fr;
    fr.rules.push_back(detail::make_format_rule(
        R"(^([^:\s][^:]*):(\d+):(?:\d+:)?\s*([A-Za-z ]+):\s*(.+)$)",
        {{"file", 1}, {"line", 2}, {"severity", 3}, {"message", 4}}));
    fr.rules.push_back(detail::make_format_rule(
        R"(^([^:\s]+):\s*(error|warning|fatal error):\s*(.+)$)",
        {{"file", 1}, {"severity", 2}, {"message", 3}}));
    return fr;
}

struct ParseResult {
    std::vector<Diagnostic> diagnostics;
    std::size_t unparsed_lines = 0;
};

/// Parses a raw log. Every line matching a rule yields one Diagnostic;
/// every other line (blank lines included) bumps unparsed_lines.
inline ParseResult parse_diagnostics(std::string_view log_text, const FormatRules& rules) {
    rules.validate();
    require_utf8(log_text);

    ParseResult out;
    for (std::string_view raw_line : split_lines(log_text)) {
        // getline-style lines may keep a \r from CRLF logs
        std::string_view line = raw_line;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        bool matched = false;
        const std::string line_s(line);
        for (const auto& rule : rules.rules) {
            std::smatch m;
            if (!std::regex_match(line_s, m, rule.pattern)) continue;

            auto group = [&](const char* name) -> std::string {
                auto it = rule.captures.find(name);
                if (it == rule.captures.end()) return {};
                const int idx = it->second;
                if (idx < 0 || static_cast<std::size_t>(idx) >= m.size()) return {};
                return m[static_cast<std::size_t>(idx)].str();
            };

            Diagnostic d;
            d.message = std::string(trim(group("message")));
            if (d.message.empty()) continue; // invariant: message non-empty

            d.file = std::string(trim(group("file")));
            const std::string line_text = group("line");
            if (!line_text.empty()) {
                try {
                    const unsigned long long v = std::stoull(line_text);
                    if (v >= 1) d.line = static_cast<std::size_t>(v);
                } catch (const std::out_of_range&) {
                    // absurd line number in a noisy log; leave line unset
                }
            }
            d.severity = detail::parse_severity(group("severity"));
            const std::string author = std::string(trim(group("author")));
            if (!author.empty()) d.source_author = author;

            out.diagnostics.push_back(std::move(d));
            matched = true;
            break;
        }
        if (!matched) ++out.unparsed_lines;
    }
    return out;
}

struct ClassRule {
    std::string pattern_text;
    std::regex pattern; // searched case-insensitively within the message
    ErrorClass cls;
};

/// Ordered keyword rules; first match wins, otherwise default_class.
struct ClassificationRules {
    std::vector<ClassRule> rules;
    ErrorClass default_class = ErrorClass::Unpredictable;

    static ClassificationRules defaults();
};

namespace detail {

inline ClassRule make_class_rule(std::string pattern, ErrorClass cls) {
    ClassRule rule;
    rule.pattern_text = std::move(pattern);
    try {
        rule.pattern = std::regex(rule.pattern_text, std::regex::ECMAScript | std::regex::icase);
    } catch (const std::regex_error& e) {
        throw ConfigError("classification rules: invalid pattern '" + rule.pattern_text +
                          "': " + e.what());
    }
    rule.cls = cls;
    return rule;
}

} // namespace detail

/// Bundled taxonomy rules: compile-time syntax/semantic messages have an
/// exact fix (Known), logic and runtime conditions a guessable one
/// (Predictable), linker and unknown-symbol failures none (Unpredictable).
/// rules/classes_default.json mirrors this list.
inline ClassificationRules ClassificationRules::defaults() {
    using detail::make_class_rule;
    ClassificationRules cr;
    cr.rules = {
        make_class_rule("syntax", ErrorClass::Known),
        make_class_rule("expected", ErrorClass::Known),
        make_class_rule("undeclared", ErrorClass::Known),
        make_class_rule("unable to find symbol", ErrorClass::Known),
        make_class_rule("cannot find symbol", ErrorClass::Known),
        make_class_rule("type mismatch", ErrorClass::Known),
        make_class_rule("redefinition", ErrorClass::Known),
        make_class_rule("invalid conversion", ErrorClass::Known),
        make_class_rule("missing", ErrorClass::Known),
        make_class_rule("logic", ErrorClass::Predictable),
        make_class_rule("divi(de|sion|ded) by zero", ErrorClass::Predictable),
        make_class_rule("runtime", ErrorClass::Predictable),
        make_class_rule("overflow", ErrorClass::Predictable),
        make_class_rule("out of (range|bounds)", ErrorClass::Predictable),
        make_class_rule("null pointer", ErrorClass::Predictable),
        make_class_rule("never terminates", ErrorClass::Predictable),
        make_class_rule("undefined reference", ErrorClass::Unpredictable),
        make_class_rule("undefined symbol", ErrorClass::Unpredictable),
        make_class_rule("link", ErrorClass::Unpredictable),
        make_class_rule("ld returned", ErrorClass::Unpredictable),
        make_class_rule("internal compiler error", ErrorClass::Unpredictable),
    };
    cr.default_class = ErrorClass::Unpredictable;
    return cr;
}

/// Total: every diagnostic gets exactly one class.
inline ErrorClass classify_error(const Diagnostic& d, const ClassificationRules& rules) {
    for (const auto& rule : rules.rules) {
        if (std::regex_search(d.message, rule.pattern)) return rule.cls;
    }
    return rules.default_class;
}

/// author -> class -> count; all three classes materialized so totals and
/// serialization are stable. Unattributed diagnostics land under "unknown".
using ErrorHistogram = std::map<std::string, std::map<ErrorClass, std::size_t>>;

inline ErrorHistogram error_histogram(std::span<const Diagnostic> diagnostics,
                                      const ClassificationRules& rules) {
    ErrorHistogram hist;
    for (const auto& d : diagnostics) {
        const std::string author = d.source_author.value_or("unknown");
        auto& cells = hist[author];
        if (cells.empty()) {
            for (ErrorClass c : kAllErrorClasses) cells[c] = 0;
        }
        ++cells[classify_error(d, rules)];
    }
    return hist;
}

} // namespace riskchain
