#pragma once

#include "riskchain/errors.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace riskchain {

struct BlockCommentMarkers {
    std::string open;
    std::string close;
};

/// Lexing profile: which lexemes are operators, how comments and strings
/// are delimited, and which identifiers are keywords. Operators are matched
/// longest-first.
struct TokenProfile {
    std::string name;
    std::vector<std::string> operators;
    std::string line_comment;                         // empty = none
    std::optional<BlockCommentMarkers> block_comment; // open/close travel together
    std::vector<char> string_delimiters;
    std::vector<std::string> keywords;

    void validate() const {
        if (operators.empty()) {
            throw ConfigError("token profile '" + name + "': operator list is empty");
        }
        std::set<std::string> seen;
        for (const auto& op : operators) {
            if (op.empty()) {
                throw ConfigError("token profile '" + name + "': empty operator lexeme");
            }
            if (!seen.insert(op).second) {
                throw ConfigError("token profile '" + name + "': duplicate operator lexeme '" + op + "'");
            }
        }
        if (block_comment) {
            if (block_comment->open.empty() || block_comment->close.empty()) {
                throw ConfigError("token profile '" + name +
                                  "': block comment open/close must both be non-empty");
            }
        }
        std::set<char> sd(string_delimiters.begin(), string_delimiters.end());
        if (sd.size() != string_delimiters.size()) {
            throw ConfigError("token profile '" + name + "': duplicate string delimiter");
        }
    }

    /// Operators sorted longest first, for maximal-munch matching.
    std::vector<std::string> operators_longest_first() const {
        std::vector<std::string> out = operators;
        std::stable_sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
            return a.size() > b.size();
        });
        return out;
    }
};

/// Built-in profile for C-family sources (C, C++, Java and friends).
/// The bundled profiles/c_family.json mirrors this definition.
inline TokenProfile c_family_profile() {
    TokenProfile p;
    p.name = "c_family";
    p.operators = {
        "<<=", ">>=", "...",
        "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=", "-=", "*=",
        "/=", "%=", "&=", "|=", "^=", "<<", ">>", "->", "::",
        "=", "+", "-", "*", "/", "%", "<", ">", "!", "&", "|", "^", "~",
        "?", ":", ".",
    };
    p.line_comment = "//";
    p.block_comment = BlockCommentMarkers{"/*", "*/"};
    p.string_delimiters = {'"', '\''};
    p.keywords = {
        "auto", "bool", "break", "case", "catch", "char", "class", "const",
        "continue", "default", "delete", "do", "double", "else", "enum",
        "extern", "false", "final", "float", "for", "goto", "if", "import",
        "inline", "int", "interface", "long", "namespace", "new", "null",
        "nullptr", "package", "private", "protected", "public", "return",
        "short", "signed", "sizeof", "static", "string", "struct", "switch",
        "template", "this", "throw", "throws", "true", "try", "typedef",
        "union", "unsigned", "using", "virtual", "void", "volatile", "while",
    };
    return p;
}

} // namespace riskchain
