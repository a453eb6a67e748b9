#pragma once

#include "riskchain/errors.hpp"

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace riskchain {

/// Returns the byte offset of the first invalid UTF-8 sequence, or nullopt
/// if the whole input decodes cleanly.
inline std::optional<std::size_t> find_invalid_utf8(std::string_view text) {
    const auto* s = reinterpret_cast<const unsigned char*>(text.data());
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const unsigned char b = s[i];
        if (b < 0x80) {
            ++i;
            continue;
        }
        std::size_t extra;
        std::uint32_t lo, hi; // valid range for the first continuation byte
        if (b >= 0xC2 && b <= 0xDF) {
            extra = 1; lo = 0x80; hi = 0xBF;
        } else if (b == 0xE0) {
            extra = 2; lo = 0xA0; hi = 0xBF;
        } else if (b >= 0xE1 && b <= 0xEC) {
            extra = 2; lo = 0x80; hi = 0xBF;
        } else if (b == 0xED) {
            extra = 2; lo = 0x80; hi = 0x9F; // exclude UTF-16 surrogates
        } else if (b >= 0xEE && b <= 0xEF) {
            extra = 2; lo = 0x80; hi = 0xBF;
        } else if (b == 0xF0) {
            extra = 3; lo = 0x90; hi = 0xBF;
        } else if (b >= 0xF1 && b <= 0xF3) {
            extra = 3; lo = 0x80; hi = 0xBF;
        } else if (b == 0xF4) {
            extra = 3; lo = 0x80; hi = 0x8F; // cap at U+10FFFF
        } else {
            return i; // 0x80..0xC1 or 0xF5..0xFF cannot start a sequence
        }
        if (i + extra >= n) return i; // truncated sequence
        if (s[i + 1] < lo || s[i + 1] > hi) return i;
        for (std::size_t k = 2; k <= extra; ++k) {
            if (s[i + k] < 0x80 || s[i + k] > 0xBF) return i;
        }
        i += extra + 1;
    }
    return std::nullopt;
}

/// Throws InputEncodingError when the text is not valid UTF-8.
inline void require_utf8(std::string_view text) {
    if (auto pos = find_invalid_utf8(text)) {
        throw InputEncodingError("input is not valid UTF-8", *pos);
    }
}

/// Splits into physical lines; terminators are not included. A trailing
/// newline does not produce an extra empty line.
inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\n') {
            lines.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    if (start < text.size()) lines.push_back(text.substr(start));
    return lines;
}

inline bool is_space_char(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

inline std::string_view trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && is_space_char(s[b])) ++b;
    while (e > b && is_space_char(s[e - 1])) --e;
    return s.substr(b, e - b);
}

inline std::string to_lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

/// Canonical key form: trimmed, lowercased, inner whitespace runs collapsed
/// to single spaces. Used for catalog names and skill identifiers.
inline std::string normalize_key(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_ws = false;
    for (char c : trim(s)) {
        if (is_space_char(c)) {
            in_ws = true;
            continue;
        }
        if (in_ws && !out.empty()) out.push_back(' ');
        in_ws = false;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

/// Levenshtein distance; used for "did you mean" suggestions.
inline std::size_t edit_distance(std::string_view a, std::string_view b) {
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t prev = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t cur = row[j];
            const std::size_t sub = prev + (a[i - 1] == b[j - 1] ? 0 : 1);
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, sub});
            prev = cur;
        }
    }
    return row[b.size()];
}

} // namespace riskchain
