#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "da/lexer.hpp"

namespace da {

// A type as written in source, plus the simple names it refers to: the base
// type's simple name followed by the simple names inside any generic
// arguments. Array suffixes are stripped; primitives and void resolve to
// nothing.
struct TypeRef {
    std::string raw_text;
    std::vector<std::string> resolved_simple_names; // ordered, deduplicated

    bool operator==(const TypeRef&) const = default;
};

enum class Visibility { Public, Protected, Package, Private };

std::string to_string(Visibility v);

struct MemberField {
    std::string name;
    TypeRef type;
    Visibility visibility = Visibility::Package;
    bool is_static = false;
    // Simple name from the first `new <Identifier>` in the initializer, if any.
    std::optional<std::string> initializer_instantiates;
    int line = 0;

    bool operator==(const MemberField&) const = default;
};

enum class EvidenceKind { LocalDeclaration, Instantiation };

struct BodyEvidence {
    std::string simple_name;
    EvidenceKind kind = EvidenceKind::LocalDeclaration;
    int line = 0;

    bool operator==(const BodyEvidence&) const = default;
};

struct MethodSig {
    std::string name;
    TypeRef return_type; // empty raw_text for constructors
    std::vector<TypeRef> params;
    Visibility visibility = Visibility::Package;
    bool is_static = false;
    bool is_final = false;
    bool is_constructor = false;
    bool has_body = false;
    // Tokens between the body braces; scanned against the user-defined name
    // set once the whole codebase is known.
    std::vector<Token> body_tokens;
    std::vector<BodyEvidence> body_type_evidence;
    int line = 0;

    bool operator==(const MethodSig&) const = default;
};

enum class ClassKind { Class, Interface };

struct ClassModel {
    std::string qualified_name; // package.Outer.Inner
    ClassKind kind = ClassKind::Class;
    std::vector<std::string> extends_names;     // simple names
    std::vector<std::string> implements_names;  // simple names; empty for interfaces
    std::vector<MemberField> fields;
    std::vector<MethodSig> methods;
    std::string source_file;
    int line = 0;

    std::string simple_name() const;

    bool operator==(const ClassModel&) const = default;
};

enum class Severity { Warning, Error };

struct Diagnostic {
    Severity severity = Severity::Warning;
    std::string file = "global";
    int line = 0; // 0 when the location is global
    std::string message;
};

std::string to_string(const Diagnostic& d);

struct CodebaseModel {
    // File-path lexicographic order, declaration order within a file.
    std::vector<ClassModel> classes;
    // simple name -> qualified names of every user-defined class carrying it
    std::map<std::string, std::set<std::string>> simple_name_index;

    const ClassModel* find(const std::string& qualified_name) const;
    const std::set<std::string>* resolve_simple(const std::string& simple_name) const;
    std::set<std::string> known_simple_names() const;
};

} // namespace da
