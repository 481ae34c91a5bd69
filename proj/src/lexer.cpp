#include "da/lexer.hpp"

#include <array>
#include <algorithm>
#include <cctype>

#include "da/errors.hpp"

namespace da {

namespace {

constexpr std::array<std::string_view, 50> kKeywords = {
    "abstract", "assert",       "boolean",  "break",     "byte",
    "case",     "catch",        "char",     "class",     "const",
    "continue", "default",      "do",       "double",    "else",
    "enum",     "extends",      "final",    "finally",   "float",
    "for",      "goto",         "if",       "implements", "import",
    "instanceof", "int",        "interface", "long",     "native",
    "new",      "package",      "private",  "protected", "public",
    "return",   "short",        "static",   "strictfp",  "super",
    "switch",   "synchronized", "this",     "throw",     "throws",
    "transient", "try",         "void",     "volatile",  "while",
};

constexpr std::array<std::string_view, 9> kPrimitives = {
    "boolean", "byte", "char", "double", "float", "int", "long", "short", "void",
};

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_ident_part(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

} // namespace

bool is_java_keyword(std::string_view word) {
    return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool is_primitive_or_void(std::string_view word) {
    return std::find(kPrimitives.begin(), kPrimitives.end(), word) != kPrimitives.end();
}

std::string strip_comments_and_strings(std::string_view source) {
    enum class State { Normal, LineComment, BlockComment, StringLit, CharLit };

    std::string out;
    out.reserve(source.size());
    State state = State::Normal;
    int line = 1;
    int opening_line = 0;
    std::size_t i = 0;

    while (i < source.size()) {
        const char c = source[i];
        switch (state) {
        case State::Normal:
            if (c == '/' && i + 1 < source.size() && source[i + 1] == '/') {
                state = State::LineComment;
                out += "  ";
                i += 2;
            } else if (c == '/' && i + 1 < source.size() && source[i + 1] == '*') {
                state = State::BlockComment;
                opening_line = line;
                out += "  ";
                i += 2;
            } else if (c == '"' || c == '\'') {
                state = c == '"' ? State::StringLit : State::CharLit;
                opening_line = line;
                out += c;
                ++i;
            } else {
                if (c == '\n')
                    ++line;
                out += c;
                ++i;
            }
            break;

        case State::LineComment:
            if (c == '\n') {
                out += c;
                ++line;
                state = State::Normal;
            } else {
                out += ' ';
            }
            ++i;
            break;

        case State::BlockComment:
            if (c == '*' && i + 1 < source.size() && source[i + 1] == '/') {
                out += "  ";
                i += 2;
                state = State::Normal;
            } else {
                if (c == '\n') {
                    out += c;
                    ++line;
                } else {
                    out += ' ';
                }
                ++i;
            }
            break;

        case State::StringLit:
        case State::CharLit: {
            const char close = state == State::StringLit ? '"' : '\'';
            if (c == '\\' && i + 1 < source.size() && source[i + 1] != '\n') {
                out += "  ";
                i += 2;
            } else if (c == close) {
                out += c;
                ++i;
                state = State::Normal;
            } else if (c == '\n') {
                throw LexicalError(state == State::StringLit
                                       ? "unterminated string literal"
                                       : "unterminated character literal",
                                   opening_line);
            } else {
                out += ' ';
                ++i;
            }
            break;
        }
        }
    }

    if (state == State::BlockComment)
        throw LexicalError("unterminated block comment", opening_line);
    if (state == State::StringLit)
        throw LexicalError("unterminated string literal", opening_line);
    if (state == State::CharLit)
        throw LexicalError("unterminated character literal", opening_line);
    return out;
}

std::vector<Token> tokenize(std::string_view source) {
    std::vector<Token> out;
    int line = 1;
    int column = 1;
    std::size_t i = 0;

    while (i < source.size()) {
        const char c = source[i];
        if (c == '\n') {
            ++line;
            column = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++column;
            ++i;
            continue;
        }

        Token tok;
        tok.line = line;
        tok.column = column;

        if (is_ident_start(c)) {
            std::size_t j = i;
            while (j < source.size() && is_ident_part(source[j]))
                ++j;
            tok.text = std::string(source.substr(i, j - i));
            tok.kind = is_java_keyword(tok.text) ? TokenKind::Keyword : TokenKind::Identifier;
            column += static_cast<int>(j - i);
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < source.size() &&
                   (std::isalnum(static_cast<unsigned char>(source[j])) || source[j] == '.' ||
                    source[j] == '_'))
                ++j;
            tok.text = std::string(source.substr(i, j - i));
            tok.kind = TokenKind::Literal;
            column += static_cast<int>(j - i);
            i = j;
        } else if (c == '"' || c == '\'') {
            // Contents were blanked by the strip pass; just find the closing
            // delimiter on this line.
            std::size_t j = i + 1;
            while (j < source.size() && source[j] != c && source[j] != '\n')
                ++j;
            if (j < source.size() && source[j] == c)
                ++j;
            tok.text = std::string(source.substr(i, j - i));
            tok.kind = TokenKind::Literal;
            column += static_cast<int>(j - i);
            i = j;
        } else {
            tok.text = std::string(1, c);
            tok.kind = TokenKind::Punct;
            ++column;
            ++i;
        }
        out.push_back(std::move(tok));
    }

    Token eof;
    eof.kind = TokenKind::EndOfFile;
    eof.line = line;
    eof.column = column;
    out.push_back(std::move(eof));
    return out;
}

std::string to_string(TokenKind kind) {
    switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Punct: return "punctuation";
    case TokenKind::Literal: return "literal";
    case TokenKind::EndOfFile: return "eof";
    }
    return "?";
}

} // namespace da
