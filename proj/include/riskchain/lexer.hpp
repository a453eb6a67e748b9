#pragma once

#include "riskchain/errors.hpp"
#include "riskchain/text.hpp"
#include "riskchain/token_profile.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace riskchain {

enum class TokenKind { Operator, Operand, Other };

struct Token {
    std::string lexeme;
    TokenKind kind;
    std::size_t line; // 1-based
};

namespace detail {

inline bool is_ident_start(unsigned char c) {
    return std::isalpha(c) || c == '_' || c >= 0x80;
}

inline bool is_ident_char(unsigned char c) {
    return std::isalnum(c) || c == '_' || c >= 0x80;
}

inline bool starts_with_at(std::string_view text, std::size_t pos, std::string_view prefix) {
    return !prefix.empty() && text.compare(pos, prefix.size(), prefix) == 0;
}

} // namespace detail

/// Lexes source text into (lexeme, kind) tokens. Comments vanish, string
/// literals become a single Operand, identifiers and numbers are Operands,
/// profile operators are Operators, keywords and leftover punctuation are
/// Other. Unterminated block comments and strings raise LexError.
inline std::vector<Token> tokenize(std::string_view source, const TokenProfile& profile) {
    profile.validate();
    require_utf8(source);

    const std::vector<std::string> ops = profile.operators_longest_first();
    std::vector<Token> tokens;
    std::size_t pos = 0;
    std::size_t line = 1;
    const std::size_t n = source.size();

    auto advance_over = [&](std::string_view chunk) {
        line += static_cast<std::size_t>(std::count(chunk.begin(), chunk.end(), '\n'));
        pos += chunk.size();
    };

    while (pos < n) {
        const char c = source[pos];

        if (is_space_char(c)) {
            if (c == '\n') ++line;
            ++pos;
            continue;
        }

        if (detail::starts_with_at(source, pos, profile.line_comment)) {
            while (pos < n && source[pos] != '\n') ++pos;
            continue;
        }

        if (profile.block_comment && detail::starts_with_at(source, pos, profile.block_comment->open)) {
            const std::size_t open_line = line;
            const std::size_t body = pos + profile.block_comment->open.size();
            const std::size_t close = source.find(profile.block_comment->close, body);
            if (close == std::string_view::npos) {
                throw LexError("unterminated block comment", open_line);
            }
            const std::size_t end = close + profile.block_comment->close.size();
            advance_over(source.substr(pos, end - pos));
            continue;
        }

        if (std::find(profile.string_delimiters.begin(), profile.string_delimiters.end(), c) !=
            profile.string_delimiters.end()) {
            const std::size_t open_line = line;
            std::size_t i = pos + 1;
            while (i < n && source[i] != c) {
                if (source[i] == '\\' && i + 1 < n) ++i; // skip escaped char
                ++i;
            }
            if (i >= n) {
                throw LexError("unterminated string literal", open_line);
            }
            const std::size_t end = i + 1;
            std::string lexeme(source.substr(pos, end - pos));
            advance_over(source.substr(pos, end - pos));
            tokens.push_back({std::move(lexeme), TokenKind::Operand, open_line});
            continue;
        }

        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t i = pos + 1;
            while (i < n) {
                const unsigned char d = static_cast<unsigned char>(source[i]);
                if (std::isalnum(d) || d == '.') {
                    ++i;
                } else if ((d == '+' || d == '-') &&
                           (source[i - 1] == 'e' || source[i - 1] == 'E') && i + 1 < n &&
                           std::isdigit(static_cast<unsigned char>(source[i + 1]))) {
                    ++i; // exponent sign
                } else {
                    break;
                }
            }
            tokens.push_back({std::string(source.substr(pos, i - pos)), TokenKind::Operand, line});
            pos = i;
            continue;
        }

        if (detail::is_ident_start(static_cast<unsigned char>(c))) {
            std::size_t i = pos + 1;
            while (i < n && detail::is_ident_char(static_cast<unsigned char>(source[i]))) ++i;
            std::string lexeme(source.substr(pos, i - pos));
            const bool is_keyword =
                std::find(profile.keywords.begin(), profile.keywords.end(), lexeme) !=
                profile.keywords.end();
            tokens.push_back({std::move(lexeme), is_keyword ? TokenKind::Other : TokenKind::Operand, line});
            pos = i;
            continue;
        }

        bool matched = false;
        for (const auto& op : ops) {
            if (detail::starts_with_at(source, pos, op)) {
                tokens.push_back({op, TokenKind::Operator, line});
                pos += op.size();
                matched = true;
                break;
            }
        }
        if (matched) continue;

        tokens.push_back({std::string(1, c), TokenKind::Other, line});
        ++pos;
    }

    return tokens;
}

} // namespace riskchain
