#pragma once

#include <set>
#include <string>
#include <vector>

#include "da/model.hpp"

namespace da {

struct ParseResult {
    std::vector<ClassModel> classes;
    std::vector<Diagnostic> diagnostics;
};

/// Error-recovering signature-level parser. Captures class headers, field
/// declarations and method signatures; method bodies are consumed with brace
/// matching and kept as token ranges. Constructs outside the modeled subset
/// (annotations, enums, records, static initializers, generic bounds) are
/// skipped via balanced-delimiter recovery. A malformed member is skipped
/// with a diagnostic. Throws ParseError only when a brace region is still
/// open at end of file.
ParseResult parse_compilation_unit(const std::vector<Token>& tokens,
                                   const std::string& source_file);

/// Best-effort scan of a balanced method body: one Instantiation evidence per
/// `new <Identifier>` naming a known class, one LocalDeclaration evidence per
/// statement-initial `<Type> <identifier> (= | ;)` whose type resolves to
/// known classes (generic arguments included).
std::vector<BodyEvidence> scan_body_evidence(const std::vector<Token>& body_tokens,
                                             const std::set<std::string>& known_simple_names);

struct SourceFile {
    std::string path;
    std::string text;
};

struct CodebaseBuild {
    CodebaseModel model;
    std::vector<Diagnostic> diagnostics;
};

/// Parses every file in lexicographic path order and merges the models.
/// Duplicate qualified names keep the first occurrence; files that fail to
/// lex or parse are dropped with a diagnostic. Method bodies are scanned
/// against the merged user-defined name set. Throws EmptyCodebaseError when
/// nothing parsable remains.
CodebaseBuild build_codebase(std::vector<SourceFile> files);

} // namespace da
