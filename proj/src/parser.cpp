#include "da/parser.hpp"

#include <algorithm>
#include <span>
#include <utility>

#include "da/errors.hpp"
#include "da/lexer.hpp"

namespace da {

namespace {

bool is_ident(const Token& t) { return t.kind == TokenKind::Identifier; }

bool is_kw(const Token& t, std::string_view w) {
    return t.kind == TokenKind::Keyword && t.text == w;
}

bool is_punct(const Token& t, char c) {
    return t.kind == TokenKind::Punct && t.text.size() == 1 && t.text[0] == c;
}

void add_name(std::vector<std::string>& names, const std::string& name) {
    if (std::find(names.begin(), names.end(), name) == names.end())
        names.push_back(name);
}

struct TypeParse {
    TypeRef type;
    std::size_t next = 0;
};

std::optional<TypeParse> try_parse_type(std::span<const Token> toks, std::size_t i);

// From an opening '<': admits only type-shaped contents (names, dots,
// wildcards, bounds, nested arguments, array suffixes). Returns the index
// past the matching '>' or nullopt, so expression uses of '<' never pass.
std::optional<std::size_t> parse_type_arguments(std::span<const Token> toks, std::size_t i,
                                                std::vector<std::string>& names,
                                                std::string& raw) {
    raw += '<';
    ++i;
    if (i < toks.size() && is_punct(toks[i], '>')) { // diamond
        raw += '>';
        return i + 1;
    }
    while (i < toks.size()) {
        if (is_punct(toks[i], '?')) {
            raw += '?';
            ++i;
            if (i < toks.size() && (is_kw(toks[i], "extends") || is_kw(toks[i], "super"))) {
                raw += ' ' + toks[i].text + ' ';
                ++i;
                const auto bound = try_parse_type(toks, i);
                if (!bound)
                    return std::nullopt;
                for (const auto& n : bound->type.resolved_simple_names)
                    add_name(names, n);
                raw += bound->type.raw_text;
                i = bound->next;
            }
        } else {
            const auto arg = try_parse_type(toks, i);
            if (!arg)
                return std::nullopt;
            for (const auto& n : arg->type.resolved_simple_names)
                add_name(names, n);
            raw += arg->type.raw_text;
            i = arg->next;
        }
        if (i < toks.size() && is_punct(toks[i], ',')) {
            raw += ", ";
            ++i;
            continue;
        }
        if (i < toks.size() && is_punct(toks[i], '>')) {
            raw += '>';
            return i + 1;
        }
        return std::nullopt;
    }
    return std::nullopt;
}

// Dotted name, optional generic arguments, optional [] pairs. When the
// argument list does not look like types the base type alone is returned and
// the '<' is left in place for the caller to judge.
std::optional<TypeParse> try_parse_type(std::span<const Token> toks, std::size_t i) {
    if (i >= toks.size())
        return std::nullopt;

    TypeRef tr;
    if (toks[i].kind == TokenKind::Keyword && is_primitive_or_void(toks[i].text)) {
        tr.raw_text = toks[i].text;
        ++i;
    } else if (is_ident(toks[i])) {
        std::string raw = toks[i].text;
        std::string simple = toks[i].text;
        ++i;
        while (i + 1 < toks.size() && is_punct(toks[i], '.') && is_ident(toks[i + 1])) {
            raw += '.';
            raw += toks[i + 1].text;
            simple = toks[i + 1].text;
            i += 2;
        }
        tr.raw_text = raw;
        add_name(tr.resolved_simple_names, simple);
        if (i < toks.size() && is_punct(toks[i], '<')) {
            std::vector<std::string> arg_names;
            std::string arg_raw;
            if (const auto after = parse_type_arguments(toks, i, arg_names, arg_raw)) {
                tr.raw_text += arg_raw;
                for (const auto& n : arg_names)
                    add_name(tr.resolved_simple_names, n);
                i = *after;
            }
        }
    } else {
        return std::nullopt;
    }

    while (i + 1 < toks.size() && is_punct(toks[i], '[') && is_punct(toks[i + 1], ']')) {
        tr.raw_text += "[]";
        i += 2;
    }
    return TypeParse{std::move(tr), i};
}

bool is_modifier_kw(const Token& t) {
    if (t.kind != TokenKind::Keyword)
        return false;
    return t.text == "public" || t.text == "protected" || t.text == "private" ||
           t.text == "static" || t.text == "final" || t.text == "abstract" ||
           t.text == "native" || t.text == "synchronized" || t.text == "transient" ||
           t.text == "volatile" || t.text == "strictfp" || t.text == "default";
}

class Parser {
public:
    Parser(const std::vector<Token>& tokens, std::string file)
        : toks_(tokens), file_(std::move(file)) {}

    ParseResult run() {
        parse_unit();
        return std::move(result_);
    }

private:
    const std::vector<Token>& toks_;
    std::string file_;
    std::size_t pos_ = 0;
    std::string package_;
    ParseResult result_;

    const Token& cur() const { return toks_[pos_]; }
    const Token& peek(std::size_t k = 1) const {
        const std::size_t j = pos_ + k;
        return j < toks_.size() ? toks_[j] : toks_.back();
    }
    bool at_eof() const { return cur().kind == TokenKind::EndOfFile; }
    void advance() {
        if (!at_eof())
            ++pos_;
    }
    bool at_punct(char c) const { return is_punct(cur(), c); }
    bool at_kw(std::string_view w) const { return is_kw(cur(), w); }
    bool at_ident() const { return is_ident(cur()); }

    void diag(int line, std::string message) {
        result_.diagnostics.push_back({Severity::Warning, file_, line, std::move(message)});
    }

    void parse_unit() {
        while (!at_eof()) {
            if (at_kw("package")) {
                parse_package_decl();
            } else if (at_kw("import")) {
                skip_to_semicolon();
            } else if (at_punct('@')) {
                skip_annotation();
            } else if (is_modifier_kw(cur())) {
                advance();
            } else if (at_kw("class") || at_kw("interface")) {
                parse_type_decl(package_);
            } else if (at_kw("enum")) {
                skip_enum_decl();
            } else if (at_ident() && cur().text == "record" && is_ident(peek())) {
                skip_record_decl();
            } else if (at_ident() && (cur().text == "sealed" || cur().text == "non")) {
                advance(); // contextual modifiers; `non-sealed` arrives as 3 tokens
            } else {
                advance(); // recovery: stray token at top level
            }
        }
    }

    void parse_package_decl() {
        advance(); // package
        std::string name;
        while (at_ident()) {
            name += cur().text;
            advance();
            if (at_punct('.') && is_ident(peek())) {
                name += '.';
                advance();
            } else {
                break;
            }
        }
        package_ = name;
        skip_to_semicolon();
    }

    void skip_to_semicolon() {
        while (!at_eof() && !at_punct(';'))
            advance();
        if (at_punct(';'))
            advance();
    }

    void skip_annotation() {
        advance(); // '@'
        if (at_kw("interface")) {
            // annotation type declaration; skip whole body
            advance();
            if (at_ident())
                advance();
            while (!at_eof() && !at_punct('{') && !at_punct(';'))
                advance();
            if (at_punct('{'))
                skip_balanced_braces();
            else if (at_punct(';'))
                advance();
            return;
        }
        while (at_ident()) {
            advance();
            if (at_punct('.') && is_ident(peek()))
                advance();
            else
                break;
        }
        if (at_punct('('))
            skip_balanced('(', ')');
    }

    void skip_balanced_braces() {
        const int open_line = cur().line;
        advance(); // '{'
        int depth = 1;
        while (depth > 0) {
            if (at_eof())
                throw ParseError(file_, open_line, "unbalanced braces at end of file");
            if (at_punct('{'))
                ++depth;
            else if (at_punct('}'))
                --depth;
            advance();
        }
    }

    // For non-brace pairs; stops quietly at end of file (the enclosing brace
    // bookkeeping reports the imbalance).
    void skip_balanced(char open, char close) {
        advance(); // opening token
        int depth = 1;
        while (depth > 0 && !at_eof()) {
            if (at_punct(open))
                ++depth;
            else if (at_punct(close))
                --depth;
            advance();
        }
    }

    void skip_enum_decl() {
        advance(); // enum
        if (at_ident())
            advance();
        while (!at_eof() && !at_punct('{'))
            advance();
        if (at_punct('{'))
            skip_balanced_braces();
    }

    void skip_record_decl() {
        advance(); // record
        if (at_ident())
            advance();
        if (at_punct('<'))
            skip_balanced('<', '>');
        if (at_punct('('))
            skip_balanced('(', ')');
        while (!at_eof() && !at_punct('{') && !at_punct(';'))
            advance();
        if (at_punct('{'))
            skip_balanced_braces();
        else if (at_punct(';'))
            advance();
    }

    std::vector<std::string> parse_supertype_list() {
        std::vector<std::string> names;
        while (true) {
            const auto tp = try_parse_type(std::span(toks_), pos_);
            if (!tp || tp->type.resolved_simple_names.empty()) {
                diag(cur().line, "expected a type name in supertype list");
                break;
            }
            names.push_back(tp->type.resolved_simple_names.front());
            pos_ = tp->next;
            if (at_punct(',')) {
                advance();
                continue;
            }
            break;
        }
        return names;
    }

    void parse_type_decl(const std::string& prefix) {
        const ClassKind kind = at_kw("class") ? ClassKind::Class : ClassKind::Interface;
        const int decl_line = cur().line;
        advance();

        if (!at_ident()) {
            diag(decl_line, "expected a type name; declaration skipped");
            while (!at_eof() && !at_punct('{') && !at_punct(';'))
                advance();
            if (at_punct('{'))
                skip_balanced_braces();
            else if (at_punct(';'))
                advance();
            return;
        }

        ClassModel model;
        model.kind = kind;
        model.line = decl_line;
        model.source_file = file_;
        model.qualified_name = prefix.empty() ? cur().text : prefix + "." + cur().text;
        advance();

        if (at_punct('<'))
            skip_balanced('<', '>'); // type parameters (bounds not modeled)

        while (true) {
            if (at_kw("extends")) {
                advance();
                model.extends_names = parse_supertype_list();
            } else if (at_kw("implements")) {
                advance();
                auto list = parse_supertype_list();
                if (kind == ClassKind::Interface)
                    diag(decl_line, "interface cannot use implements; clause ignored");
                else
                    model.implements_names = std::move(list);
            } else if (at_ident() && cur().text == "permits") {
                advance();
                parse_supertype_list();
            } else {
                break;
            }
        }

        if (!at_punct('{')) {
            diag(cur().line, "expected '{' in declaration of " + model.qualified_name);
            while (!at_eof() && !at_punct('{') && !at_punct(';'))
                advance();
            if (!at_punct('{')) {
                if (at_punct(';'))
                    advance();
                result_.classes.push_back(std::move(model));
                return;
            }
        }

        // Reserve the slot now so the outer class precedes its nested ones.
        result_.classes.push_back(model);
        const std::size_t slot = result_.classes.size() - 1;

        const int open_line = cur().line;
        advance(); // '{'
        while (true) {
            if (at_punct('}')) {
                advance();
                break;
            }
            if (at_eof())
                throw ParseError(file_, open_line, "unbalanced braces at end of file");
            parse_member(model);
        }
        result_.classes[slot] = std::move(model);
    }

    std::vector<TypeRef> parse_params() {
        std::vector<TypeRef> params;
        const int open_line = cur().line;
        advance(); // '('
        while (true) {
            if (at_eof())
                throw ParseError(file_, open_line, "unbalanced parentheses at end of file");
            if (at_punct(')')) {
                advance();
                return params;
            }
            if (at_punct(',')) {
                advance();
                continue;
            }
            if (at_punct('@')) {
                skip_annotation();
                continue;
            }
            if (at_kw("final")) {
                advance();
                continue;
            }
            const auto tp = try_parse_type(std::span(toks_), pos_);
            if (!tp) {
                diag(cur().line, "unrecognized parameter; skipped");
                advance();
                continue;
            }
            pos_ = tp->next;
            while (at_punct('.'))
                advance(); // varargs dots
            if (at_kw("this")) {
                advance(); // receiver parameter; carries no new type
            } else if (at_ident()) {
                advance();
                while (at_punct('[') && is_punct(peek(), ']')) {
                    advance();
                    advance();
                }
            }
            params.push_back(tp->type);
        }
    }

    void skip_throws() {
        if (!at_kw("throws"))
            return;
        advance();
        while (!at_eof() && !at_punct('{') && !at_punct(';'))
            advance();
    }

    std::vector<Token> capture_body() {
        const int open_line = cur().line;
        advance(); // '{'
        std::vector<Token> body;
        int depth = 1;
        while (true) {
            if (at_eof())
                throw ParseError(file_, open_line, "unbalanced braces at end of file");
            if (at_punct('{')) {
                ++depth;
            } else if (at_punct('}')) {
                --depth;
                if (depth == 0) {
                    advance();
                    return body;
                }
            }
            body.push_back(cur());
            advance();
        }
    }

    // Consumes one field initializer (up to a depth-0 ',' or ';') and reports
    // the first `new <Identifier>` found in it.
    std::optional<std::string> consume_initializer() {
        std::optional<std::string> first_new;
        int paren = 0, bracket = 0, brace = 0;
        while (!at_eof()) {
            if (paren == 0 && bracket == 0 && brace == 0 &&
                (at_punct(',') || at_punct(';')))
                break;
            if (at_punct('(')) {
                ++paren;
            } else if (at_punct(')')) {
                paren = std::max(0, paren - 1);
            } else if (at_punct('[')) {
                ++bracket;
            } else if (at_punct(']')) {
                bracket = std::max(0, bracket - 1);
            } else if (at_punct('{')) {
                ++brace;
            } else if (at_punct('}')) {
                brace = std::max(0, brace - 1);
            } else if (at_punct('<')) {
                // skip generic arguments wholesale so their commas stay inert
                std::vector<std::string> ignored;
                std::string raw;
                if (const auto after =
                        parse_type_arguments(std::span(toks_), pos_, ignored, raw)) {
                    pos_ = *after;
                    continue;
                }
            } else if (at_kw("new") && is_ident(peek()) && !first_new) {
                advance();
                std::string simple = cur().text;
                advance();
                while (at_punct('.') && is_ident(peek())) {
                    advance();
                    simple = cur().text;
                    advance();
                }
                first_new = simple;
                continue;
            }
            advance();
        }
        return first_new;
    }

    void recover_member() {
        int paren = 0;
        while (!at_eof()) {
            if (at_punct('{')) {
                skip_balanced_braces();
                return;
            }
            if (at_punct('}'))
                return; // let the class-body loop consume it
            if (at_punct('('))
                ++paren;
            else if (at_punct(')'))
                paren = std::max(0, paren - 1);
            else if (at_punct(';') && paren == 0) {
                advance();
                return;
            }
            advance();
        }
    }

    void parse_member(ClassModel& model) {
        if (at_punct(';')) {
            advance();
            return;
        }
        if (at_punct('@')) {
            skip_annotation();
            return;
        }
        if (at_punct('{')) { // instance initializer: unmodeled
            skip_balanced_braces();
            return;
        }

        // Interface members default to public, class members to package.
        Visibility vis =
            model.kind == ClassKind::Interface ? Visibility::Public : Visibility::Package;
        bool is_static = false;
        bool is_final = false;

        while (is_modifier_kw(cur())) {
            const std::string& w = cur().text;
            if (w == "public")
                vis = Visibility::Public;
            else if (w == "protected")
                vis = Visibility::Protected;
            else if (w == "private")
                vis = Visibility::Private;
            else if (w == "static")
                is_static = true;
            else if (w == "final")
                is_final = true;
            advance();
            if (is_static && at_punct('{')) { // static initializer: unmodeled
                skip_balanced_braces();
                return;
            }
        }

        if (at_kw("class") || at_kw("interface")) {
            parse_type_decl(model.qualified_name);
            return;
        }
        if (at_kw("enum")) {
            skip_enum_decl();
            return;
        }
        if (at_ident() && cur().text == "record" && is_ident(peek())) {
            skip_record_decl();
            return;
        }
        if (at_punct('<'))
            skip_balanced('<', '>'); // generic method type parameters

        // Constructor: the owner's simple name followed directly by '('.
        if (at_ident() && cur().text == model.simple_name() && is_punct(peek(), '(')) {
            MethodSig m;
            m.name = cur().text;
            m.line = cur().line;
            m.visibility = vis;
            m.is_static = is_static;
            m.is_final = is_final;
            m.is_constructor = true;
            advance();
            m.params = parse_params();
            skip_throws();
            if (at_punct('{')) {
                m.body_tokens = capture_body();
                m.has_body = true;
            } else if (at_punct(';')) {
                advance();
            } else {
                diag(cur().line, "malformed constructor body; skipped");
                recover_member();
            }
            model.methods.push_back(std::move(m));
            return;
        }

        const auto tp = try_parse_type(std::span(toks_), pos_);
        if (!tp) {
            diag(cur().line, "unrecognized member; skipped");
            recover_member();
            return;
        }
        pos_ = tp->next;

        if (!at_ident()) {
            diag(cur().line, "expected a member name; skipped");
            recover_member();
            return;
        }
        std::string name = cur().text;
        int name_line = cur().line;
        advance();

        if (at_punct('(')) {
            MethodSig m;
            m.name = std::move(name);
            m.line = name_line;
            m.return_type = tp->type;
            m.visibility = vis;
            m.is_static = is_static;
            m.is_final = is_final;
            m.params = parse_params();
            while (at_punct('[') && is_punct(peek(), ']')) { // archaic suffix arrays
                advance();
                advance();
            }
            skip_throws();
            if (at_punct('{')) {
                m.body_tokens = capture_body();
                m.has_body = true;
            } else if (at_punct(';')) {
                advance();
            } else {
                diag(cur().line, "malformed method body; skipped");
                recover_member();
            }
            model.methods.push_back(std::move(m));
            return;
        }

        // Field declarator list.
        while (true) {
            MemberField f;
            f.name = name;
            f.line = name_line;
            f.type = tp->type;
            f.visibility = vis;
            f.is_static = is_static;
            while (at_punct('[') && is_punct(peek(), ']')) { // C-style suffix
                f.type.raw_text += "[]";
                advance();
                advance();
            }
            if (at_punct('=')) {
                advance();
                f.initializer_instantiates = consume_initializer();
            }
            model.fields.push_back(std::move(f));

            if (at_punct(',')) {
                advance();
                if (!at_ident()) {
                    diag(cur().line, "expected a declarator name; rest of field skipped");
                    recover_member();
                    return;
                }
                name = cur().text;
                name_line = cur().line;
                advance();
                continue;
            }
            break;
        }
        if (at_punct(';'))
            advance();
        else {
            diag(cur().line, "expected ';' after field declaration");
            recover_member();
        }
    }
};

} // namespace

ParseResult parse_compilation_unit(const std::vector<Token>& tokens,
                                   const std::string& source_file) {
    Parser parser(tokens, source_file);
    return parser.run();
}

std::vector<BodyEvidence> scan_body_evidence(const std::vector<Token>& body_tokens,
                                             const std::set<std::string>& known_simple_names) {
    std::vector<BodyEvidence> out;
    const std::span<const Token> toks(body_tokens);

    for (std::size_t i = 0; i < toks.size(); ++i) {
        const Token& t = toks[i];

        if (is_kw(t, "new") && i + 1 < toks.size() && is_ident(toks[i + 1])) {
            std::size_t j = i + 1;
            std::string simple = toks[j].text;
            while (j + 2 < toks.size() && is_punct(toks[j + 1], '.') && is_ident(toks[j + 2])) {
                simple = toks[j + 2].text;
                j += 2;
            }
            if (known_simple_names.count(simple))
                out.push_back({simple, EvidenceKind::Instantiation, toks[i + 1].line});
            i = j;
            continue;
        }

        const bool stmt_initial = i == 0 || is_punct(toks[i - 1], ';') ||
                                  is_punct(toks[i - 1], '{') || is_punct(toks[i - 1], '}');
        if (stmt_initial && is_ident(t)) {
            const auto tp = try_parse_type(toks, i);
            if (tp && tp->next + 1 < toks.size() && is_ident(toks[tp->next]) &&
                (is_punct(toks[tp->next + 1], '=') || is_punct(toks[tp->next + 1], ';'))) {
                for (const auto& n : tp->type.resolved_simple_names)
                    if (known_simple_names.count(n))
                        out.push_back({n, EvidenceKind::LocalDeclaration, t.line});
                i = tp->next; // at the variable name; the initializer is scanned next
            }
        }
    }
    return out;
}

CodebaseBuild build_codebase(std::vector<SourceFile> files) {
    std::sort(files.begin(), files.end(),
              [](const SourceFile& a, const SourceFile& b) { return a.path < b.path; });

    CodebaseBuild out;
    std::map<std::string, std::string> first_file_of;

    for (const auto& file : files) {
        std::string stripped;
        try {
            stripped = strip_comments_and_strings(file.text);
        } catch (const LexicalError& e) {
            out.diagnostics.push_back({Severity::Warning, file.path, e.line(),
                                       std::string("file skipped: ") + e.what()});
            continue;
        }

        ParseResult parsed;
        try {
            parsed = parse_compilation_unit(tokenize(stripped), file.path);
        } catch (const ParseError& e) {
            out.diagnostics.push_back({Severity::Warning, file.path, e.line(),
                                       std::string("file skipped: ") + e.what()});
            continue;
        }
        for (auto& d : parsed.diagnostics)
            out.diagnostics.push_back(std::move(d));

        for (auto& cls : parsed.classes) {
            const auto it = first_file_of.find(cls.qualified_name);
            if (it != first_file_of.end()) {
                out.diagnostics.push_back(
                    {Severity::Warning, file.path, cls.line,
                     "duplicate class " + cls.qualified_name + " dropped (first seen in " +
                         it->second + ")"});
                continue;
            }
            first_file_of.emplace(cls.qualified_name, file.path);
            out.model.classes.push_back(std::move(cls));
        }
    }

    if (out.model.classes.empty())
        throw EmptyCodebaseError("no parsable classes found");

    for (const auto& cls : out.model.classes)
        out.model.simple_name_index[cls.simple_name()].insert(cls.qualified_name);

    const auto known = out.model.known_simple_names();
    for (auto& cls : out.model.classes)
        for (auto& method : cls.methods)
            if (method.has_body)
                method.body_type_evidence = scan_body_evidence(method.body_tokens, known);

    return out;
}

} // namespace da
