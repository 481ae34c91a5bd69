#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace da {

enum class TokenKind { Identifier, Keyword, Punct, Literal, EndOfFile };

struct Token {
    TokenKind kind = TokenKind::EndOfFile;
    std::string text;
    int line = 1;   // 1-based, into the comment-stripped source
    int column = 1; // 1-based

    bool operator==(const Token&) const = default;
};

bool is_java_keyword(std::string_view word);

// true for the eight primitive type names and void
bool is_primitive_or_void(std::string_view word);

/// Blanks out // and /* */ comments and the contents of string/char literals,
/// replacing them with spaces. String delimiters stay in place so the literal
/// survives as an empty one. Line structure and total length are preserved.
/// Throws LexicalError (with the opening line) on an unterminated comment or
/// literal.
std::string strip_comments_and_strings(std::string_view source);

/// Tokenizes comment-stripped source. Never fails: unknown characters become
/// single-character punctuation tokens. The stream always ends in exactly one
/// EndOfFile token.
std::vector<Token> tokenize(std::string_view source);

std::string to_string(TokenKind kind);

} // namespace da
