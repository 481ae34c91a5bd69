#include <doctest.h>

#include "da/errors.hpp"
#include "da/lexer.hpp"

using namespace da;

TEST_CASE("strip neutralizes block comments in place") {
    const std::string expected = "class A {" + std::string(15, ' ') + "}";
    CHECK(strip_comments_and_strings("class A { /* new B() */ }") == expected);
}

TEST_CASE("strip blanks string contents but keeps delimiters") {
    const std::string out = strip_comments_and_strings("String s = \"new C()\";");
    CHECK(out == "String s = \"       \";");
    CHECK(out.size() == std::string("String s = \"new C()\";").size());
}

TEST_CASE("strip is identity on empty input") {
    CHECK(strip_comments_and_strings("") == "");
}

TEST_CASE("strip preserves line structure") {
    const std::string src = "a /* x\ny\nz */ b\n// tail\nc";
    const std::string out = strip_comments_and_strings(src);
    CHECK(std::count(out.begin(), out.end(), '\n') ==
          std::count(src.begin(), src.end(), '\n'));
    CHECK(out.size() == src.size());
    CHECK(out.find('x') == std::string::npos);
    CHECK(out.find("tail") == std::string::npos);
    CHECK(out.find('c') != std::string::npos);
}

TEST_CASE("strip handles escapes and char literals") {
    CHECK(strip_comments_and_strings(R"(char q = '\''; String t = "a\"b";)") ==
          "char q = '  '; String t = \"    \";");
}

TEST_CASE("strip keeps line comment markers inside strings") {
    const std::string out = strip_comments_and_strings("String u = \"http://x\"; int k;");
    CHECK(out.find("int k;") != std::string::npos);
}

TEST_CASE("unterminated block comment reports the opening line") {
    try {
        strip_comments_and_strings("a\nb /* never closed\nmore");
        FAIL("expected LexicalError");
    } catch (const LexicalError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("unterminated string reports the opening line") {
    try {
        strip_comments_and_strings("int a;\nString s = \"oops\nint b;");
        FAIL("expected LexicalError");
    } catch (const LexicalError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("tokenize recognizes keywords") {
    const auto toks = tokenize("class B extends A");
    REQUIRE(toks.size() == 5);
    CHECK(toks[0].kind == TokenKind::Keyword);
    CHECK(toks[0].text == "class");
    CHECK(toks[1].kind == TokenKind::Identifier);
    CHECK(toks[1].text == "B");
    CHECK(toks[2].kind == TokenKind::Keyword);
    CHECK(toks[3].text == "A");
    CHECK(toks[4].kind == TokenKind::EndOfFile);
}

TEST_CASE("tokenize splits generic punctuation") {
    const auto toks = tokenize("List<A> xs;");
    REQUIRE(toks.size() == 7);
    CHECK(toks[0].text == "List");
    CHECK(toks[1].text == "<");
    CHECK(toks[1].kind == TokenKind::Punct);
    CHECK(toks[2].text == "A");
    CHECK(toks[3].text == ">");
    CHECK(toks[4].text == "xs");
    CHECK(toks[5].text == ";");
}

TEST_CASE("tokenize counts the declaration-with-new statement") {
    const auto toks = tokenize("A a = new A();");
    CHECK(toks.size() == 9); // 8 tokens + eof
    CHECK(toks.back().kind == TokenKind::EndOfFile);
}

TEST_CASE("tokenize emits exactly one eof and nonempty texts") {
    const auto toks = tokenize("int x = 5; String s = \"\"; ?");
    int eofs = 0;
    for (const auto& t : toks) {
        if (t.kind == TokenKind::EndOfFile)
            ++eofs;
        else
            CHECK(!t.text.empty());
    }
    CHECK(eofs == 1);
    CHECK(toks.back().kind == TokenKind::EndOfFile);
}

TEST_CASE("tokenize positions are monotonic") {
    const auto toks = tokenize("class A {\n  int x;\n  A next;\n}");
    int line = 1;
    int column = 0;
    for (const auto& t : toks) {
        REQUIRE(t.line >= line);
        if (t.line > line)
            column = 0;
        REQUIRE(t.column > column);
        line = t.line;
        column = t.column;
    }
}

TEST_CASE("unknown characters become single punctuation tokens") {
    const auto toks = tokenize("a # b");
    REQUIRE(toks.size() == 4);
    CHECK(toks[1].kind == TokenKind::Punct);
    CHECK(toks[1].text == "#");
}
