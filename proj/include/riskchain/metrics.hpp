#pragma once

#include "riskchain/diagnostics.hpp"
#include "riskchain/errors.hpp"
#include "riskchain/lexer.hpp"
#include "riskchain/text.hpp"
#include "riskchain/token_profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace riskchain {

enum class LocMode { AllLines, Nonblank, NonblankNoncomment };

inline std::string_view loc_mode_name(LocMode m) {
    switch (m) {
        case LocMode::AllLines: return "all_lines";
        case LocMode::Nonblank: return "nonblank";
        case LocMode::NonblankNoncomment: return "nonblank_noncomment";
    }
    return "all_lines";
}

namespace detail {

/// Lenient line scanner for the noncomment mode: tracks block comments and
/// strings so comment markers inside literals don't flip the state, and
/// never throws on unterminated constructs.
inline std::size_t count_code_lines(std::string_view source, const TokenProfile& profile) {
    std::size_t count = 0;
    bool in_block = false;
    bool line_has_code = false;
    std::size_t pos = 0;
    const std::size_t n = source.size();

    auto end_line = [&] {
        if (line_has_code) ++count;
        line_has_code = false;
    };

    while (pos < n) {
        const char c = source[pos];
        if (c == '\n') {
            end_line();
            ++pos;
            continue;
        }
        if (in_block) {
            if (profile.block_comment && starts_with_at(source, pos, profile.block_comment->close)) {
                in_block = false;
                pos += profile.block_comment->close.size();
            } else {
                ++pos;
            }
            continue;
        }
        if (is_space_char(c)) {
            ++pos;
            continue;
        }
        if (starts_with_at(source, pos, profile.line_comment)) {
            while (pos < n && source[pos] != '\n') ++pos;
            continue;
        }
        if (profile.block_comment && starts_with_at(source, pos, profile.block_comment->open)) {
            in_block = true;
            pos += profile.block_comment->open.size();
            continue;
        }
        if (std::find(profile.string_delimiters.begin(), profile.string_delimiters.end(), c) !=
            profile.string_delimiters.end()) {
            line_has_code = true;
            const char delim = c;
            ++pos;
            while (pos < n && source[pos] != delim && source[pos] != '\n') {
                if (source[pos] == '\\' && pos + 1 < n) ++pos;
                ++pos;
            }
            if (pos < n && source[pos] == delim) ++pos; // at '\n' the line ends the literal
            continue;
        }
        line_has_code = true;
        ++pos;
    }
    end_line();
    return count;
}

} // namespace detail

/// Physical line count. AllLines counts every newline-delimited line plus a
/// final unterminated one; the other modes drop blank and comment-only
/// lines. Comment syntax for NonblankNoncomment comes from `profile`
/// (C-family when null).
inline std::size_t count_loc(std::string_view source, LocMode mode = LocMode::AllLines,
                             const TokenProfile* profile = nullptr) {
    require_utf8(source);
    switch (mode) {
        case LocMode::AllLines: {
            std::size_t newlines = static_cast<std::size_t>(
                std::count(source.begin(), source.end(), '\n'));
            if (!source.empty() && source.back() != '\n') ++newlines;
            return newlines;
        }
        case LocMode::Nonblank: {
            std::size_t count = 0;
            for (auto line : split_lines(source)) {
                if (!trim(line).empty()) ++count;
            }
            return count;
        }
        case LocMode::NonblankNoncomment:
            if (profile) return detail::count_code_lines(source, *profile);
            return detail::count_code_lines(source, c_family_profile());
    }
    return 0;
}

struct TokenCounts {
    std::size_t total_operators = 0;
    std::size_t total_operands = 0;
    std::size_t distinct_operators = 0;
    std::size_t distinct_operands = 0;
    std::size_t n = 0; // total_operators + total_operands

    bool operator==(const TokenCounts&) const = default;
};

/// Totals and distinct counts over Operator/Operand tokens only.
inline TokenCounts token_totals(std::span<const Token> tokens) {
    TokenCounts counts;
    std::set<std::string_view> distinct_ops, distinct_operands;
    for (const auto& t : tokens) {
        if (t.kind == TokenKind::Operator) {
            ++counts.total_operators;
            distinct_ops.insert(t.lexeme);
        } else if (t.kind == TokenKind::Operand) {
            ++counts.total_operands;
            distinct_operands.insert(t.lexeme);
        }
    }
    counts.distinct_operators = distinct_ops.size();
    counts.distinct_operands = distinct_operands.size();
    counts.n = counts.total_operators + counts.total_operands;
    return counts;
}

/// Volume = loc_n * log(n). Degenerate inputs (n <= 1 or loc_n == 0) carry
/// no volume and return 0. Base 2 by default; any base > 1 is accepted.
inline double program_volume(std::size_t loc_n, std::size_t n, double log_base = 2.0) {
    if (!(log_base > 1.0)) {
        throw ConfigError("log base must be > 1");
    }
    if (n <= 1 || loc_n == 0) return 0.0;
    const double loc = static_cast<double>(loc_n);
    if (log_base == 2.0) return loc * std::log2(static_cast<double>(n));
    return loc * (std::log(static_cast<double>(n)) / std::log(log_base));
}

enum class ProgramLevel { Low = 0, Medium = 1, High = 2 };

inline std::string_view program_level_name(ProgramLevel level) {
    switch (level) {
        case ProgramLevel::Low: return "Low";
        case ProgramLevel::Medium: return "Medium";
        case ProgramLevel::High: return "High";
    }
    return "Low";
}

struct LevelThresholds {
    double v_low = 100.0;
    double v_high = 1000.0;
};

/// Low on [0, v_low], Medium on (v_low, v_high], High above.
inline ProgramLevel classify_program_level(double volume_v, LevelThresholds t = {}) {
    if (!(t.v_low < t.v_high)) {
        throw ConfigError("program level thresholds must be strictly increasing (v_low < v_high)");
    }
    if (volume_v <= t.v_low) return ProgramLevel::Low;
    if (volume_v <= t.v_high) return ProgramLevel::Medium;
    return ProgramLevel::High;
}

struct MetricsOptions {
    LocMode loc_mode = LocMode::AllLines;
    double log_base = 2.0;
    LevelThresholds thresholds;
};

struct MetricsReport {
    std::string unit_id;
    std::size_t loc_n = 0;
    TokenCounts counts;
    double volume_v = 0.0;
    ProgramLevel level = ProgramLevel::Low;
};

/// Full per-unit pipeline: LOC, token totals, volume, level tier.
inline MetricsReport analyze_unit(std::string unit_id, std::string_view source,
                                  const TokenProfile& profile, const MetricsOptions& opts = {}) {
    MetricsReport r;
    r.unit_id = std::move(unit_id);
    r.loc_n = count_loc(source, opts.loc_mode, &profile);
    r.counts = token_totals(tokenize(source, profile));
    r.volume_v = program_volume(r.loc_n, r.counts.n, opts.log_base);
    r.level = classify_program_level(r.volume_v, opts.thresholds);
    return r;
}

/// Per-author rollup feeding the errors-by-programmer chart.
struct AuthorAggregate {
    std::string author;
    std::size_t loc = 0;
    double volume = 0.0;
    std::map<ErrorClass, std::size_t> error_counts;
    bool missing_sources = false; // diagnostics exist but no source unit does
};

/// Aggregates corpus metrics and classified diagnostics per author,
/// deterministically sorted by author label.
inline std::vector<AuthorAggregate> compare_programmers(
    const std::vector<std::pair<std::string, std::string>>& corpus,
    const std::vector<std::pair<std::string, std::vector<Diagnostic>>>& logs,
    const ClassificationRules& rules, const TokenProfile& profile,
    const MetricsOptions& opts = {}) {
    std::map<std::string, AuthorAggregate> by_author;

    auto entry = [&](const std::string& author) -> AuthorAggregate& {
        if (author.empty()) throw DomainError("author label must be non-empty");
        auto [it, inserted] = by_author.try_emplace(author);
        if (inserted) {
            it->second.author = author;
            for (ErrorClass c : kAllErrorClasses) it->second.error_counts[c] = 0;
        }
        return it->second;
    };

    std::set<std::string> with_sources;
    for (const auto& [author, source] : corpus) {
        auto& agg = entry(author);
        const MetricsReport r = analyze_unit(author, source, profile, opts);
        agg.loc += r.loc_n;
        agg.volume += r.volume_v;
        with_sources.insert(author);
    }
    for (const auto& [author, diagnostics] : logs) {
        auto& agg = entry(author);
        for (const auto& d : diagnostics) {
            ++agg.error_counts[classify_error(d, rules)];
        }
        if (!with_sources.count(author)) agg.missing_sources = true;
    }

    std::vector<AuthorAggregate> out;
    out.reserve(by_author.size());
    for (auto& [_, agg] : by_author) out.push_back(std::move(agg));
    return out;
}

} // namespace riskchain
