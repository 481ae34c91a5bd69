#pragma once

#include <set>
#include <string>
#include <vector>

#include "da/model.hpp"

namespace da {

enum class InteractionKind {
    ReturnType,
    Parameter,
    ObjectDeclaration,
    LocalVariable,
    Inheritance,
};

inline constexpr int kInteractionKindCount = 5;

enum class InteractionCategory {
    OperationOperation, // ReturnType, Parameter
    ClassClass,         // ObjectDeclaration, Inheritance; these form the CCIG
    DependencyOnly,     // LocalVariable; counted by the NUCD metric family only
};

InteractionCategory category_of(InteractionKind kind);
bool is_ccig_kind(InteractionKind kind);
bool is_dependency_kind(InteractionKind kind); // Parameter | ReturnType | LocalVariable

std::string to_string(InteractionKind kind);

// One evidence of dependency between two user-defined classes.
struct Interaction {
    std::string source_class; // client / container, qualified
    std::string target_class; // supplier, qualified
    InteractionKind kind = InteractionKind::ReturnType;
    std::string file;
    int line = 0;
    std::string via_member; // field/method name, or extends/implements

    bool operator==(const Interaction&) const = default;
};

std::string to_string(const Interaction& i);

struct InteractionSet {
    // Deterministic order: (file, line, kind, source, target, via).
    std::vector<Interaction> evidences;
};

// The extractors are pure over an immutable model; `ambiguous` (optional)
// collects simple names that resolved to more than one class.
std::vector<Interaction> extract_return_type(const CodebaseModel& model,
                                             std::set<std::string>* ambiguous = nullptr);
std::vector<Interaction> extract_parameters(const CodebaseModel& model,
                                            std::set<std::string>* ambiguous = nullptr);
std::vector<Interaction> extract_object_declarations(const CodebaseModel& model,
                                                     std::set<std::string>* ambiguous = nullptr);
std::vector<Interaction> extract_local_variables(const CodebaseModel& model,
                                                 std::set<std::string>* ambiguous = nullptr);
std::vector<Interaction> extract_inheritance(const CodebaseModel& model,
                                             std::set<std::string>* ambiguous = nullptr);

/// All five extractors, self-edges excluded, sorted deterministically. When
/// `diagnostics` is given, one warning per ambiguous simple name is appended.
InteractionSet extract_all(const CodebaseModel& model,
                           std::vector<Diagnostic>* diagnostics = nullptr);

} // namespace da
