#include "da/interactions.hpp"

#include <algorithm>
#include <tuple>

#include "da/errors.hpp"

namespace da {

InteractionCategory category_of(InteractionKind kind) {
    switch (kind) {
    case InteractionKind::ReturnType:
    case InteractionKind::Parameter:
        return InteractionCategory::OperationOperation;
    case InteractionKind::ObjectDeclaration:
    case InteractionKind::Inheritance:
        return InteractionCategory::ClassClass;
    case InteractionKind::LocalVariable:
        return InteractionCategory::DependencyOnly;
    }
    return InteractionCategory::DependencyOnly;
}

bool is_ccig_kind(InteractionKind kind) {
    return category_of(kind) == InteractionCategory::ClassClass;
}

bool is_dependency_kind(InteractionKind kind) {
    return kind == InteractionKind::Parameter || kind == InteractionKind::ReturnType ||
           kind == InteractionKind::LocalVariable;
}

std::string to_string(InteractionKind kind) {
    switch (kind) {
    case InteractionKind::ReturnType: return "ReturnType";
    case InteractionKind::Parameter: return "Parameter";
    case InteractionKind::ObjectDeclaration: return "ObjectDeclaration";
    case InteractionKind::LocalVariable: return "LocalVariable";
    case InteractionKind::Inheritance: return "Inheritance";
    }
    return "?";
}

std::string to_string(const Interaction& i) {
    return i.file + ":" + std::to_string(i.line) + " " + to_string(i.kind) + " " +
           i.source_class + " -> " + i.target_class + " via " + i.via_member;
}

namespace {

// Simple-name resolution against the user-defined set; the source class
// itself never counts as a target.
std::vector<std::string> resolve_targets(const CodebaseModel& model,
                                         const std::string& source_qualified,
                                         const std::string& simple,
                                         std::set<std::string>* ambiguous) {
    std::vector<std::string> out;
    const auto* matches = model.resolve_simple(simple);
    if (!matches)
        return out;
    if (matches->size() > 1 && ambiguous)
        ambiguous->insert(simple);
    for (const auto& qualified : *matches)
        if (qualified != source_qualified)
            out.push_back(qualified);
    return out;
}

bool interaction_less(const Interaction& a, const Interaction& b) {
    return std::tie(a.file, a.line) < std::tie(b.file, b.line) ||
           (std::tie(a.file, a.line) == std::tie(b.file, b.line) &&
            std::make_tuple(static_cast<int>(a.kind), std::cref(a.source_class),
                            std::cref(a.target_class), std::cref(a.via_member)) <
                std::make_tuple(static_cast<int>(b.kind), std::cref(b.source_class),
                                std::cref(b.target_class), std::cref(b.via_member)));
}

} // namespace

std::vector<Interaction> extract_return_type(const CodebaseModel& model,
                                             std::set<std::string>* ambiguous) {
    std::vector<Interaction> out;
    for (const auto& cls : model.classes) {
        for (const auto& method : cls.methods) {
            if (method.is_constructor)
                continue;
            for (const auto& simple : method.return_type.resolved_simple_names)
                for (auto& target : resolve_targets(model, cls.qualified_name, simple, ambiguous))
                    out.push_back({cls.qualified_name, std::move(target),
                                   InteractionKind::ReturnType, cls.source_file, method.line,
                                   method.name});
        }
    }
    return out;
}

std::vector<Interaction> extract_parameters(const CodebaseModel& model,
                                            std::set<std::string>* ambiguous) {
    std::vector<Interaction> out;
    for (const auto& cls : model.classes) {
        for (const auto& method : cls.methods) {
            for (const auto& param : method.params)
                for (const auto& simple : param.resolved_simple_names)
                    for (auto& target :
                         resolve_targets(model, cls.qualified_name, simple, ambiguous))
                        out.push_back({cls.qualified_name, std::move(target),
                                       InteractionKind::Parameter, cls.source_file, method.line,
                                       method.name});
        }
    }
    return out;
}

std::vector<Interaction> extract_object_declarations(const CodebaseModel& model,
                                                     std::set<std::string>* ambiguous) {
    std::vector<Interaction> out;
    for (const auto& cls : model.classes) {
        for (const auto& field : cls.fields) {
            std::set<std::string> declared_targets;
            for (const auto& simple : field.type.resolved_simple_names)
                for (auto& target :
                     resolve_targets(model, cls.qualified_name, simple, ambiguous)) {
                    declared_targets.insert(target);
                    out.push_back({cls.qualified_name, std::move(target),
                                   InteractionKind::ObjectDeclaration, cls.source_file,
                                   field.line, field.name});
                }
            if (field.initializer_instantiates) {
                // An initializer instantiating a type other than the declared
                // one (subtype behind a supertype field) is its own evidence.
                for (auto& target : resolve_targets(model, cls.qualified_name,
                                                    *field.initializer_instantiates, ambiguous))
                    if (!declared_targets.count(target))
                        out.push_back({cls.qualified_name, std::move(target),
                                       InteractionKind::ObjectDeclaration, cls.source_file,
                                       field.line, field.name});
            }
        }
    }
    return out;
}

std::vector<Interaction> extract_local_variables(const CodebaseModel& model,
                                                 std::set<std::string>* ambiguous) {
    std::vector<Interaction> out;
    for (const auto& cls : model.classes) {
        for (const auto& method : cls.methods) {
            for (const auto& evidence : method.body_type_evidence)
                for (auto& target :
                     resolve_targets(model, cls.qualified_name, evidence.simple_name, ambiguous))
                    out.push_back({cls.qualified_name, std::move(target),
                                   InteractionKind::LocalVariable, cls.source_file,
                                   evidence.line, method.name});
        }
    }
    return out;
}

std::vector<Interaction> extract_inheritance(const CodebaseModel& model,
                                             std::set<std::string>* ambiguous) {
    std::vector<Interaction> out;
    for (const auto& cls : model.classes) {
        for (const auto& simple : cls.extends_names)
            for (auto& target : resolve_targets(model, cls.qualified_name, simple, ambiguous))
                out.push_back({cls.qualified_name, std::move(target),
                               InteractionKind::Inheritance, cls.source_file, cls.line,
                               "extends"});
        for (const auto& simple : cls.implements_names)
            for (auto& target : resolve_targets(model, cls.qualified_name, simple, ambiguous))
                out.push_back({cls.qualified_name, std::move(target),
                               InteractionKind::Inheritance, cls.source_file, cls.line,
                               "implements"});
    }
    return out;
}

InteractionSet extract_all(const CodebaseModel& model, std::vector<Diagnostic>* diagnostics) {
    std::set<std::string> ambiguous;
    InteractionSet set;

    auto append = [&set](std::vector<Interaction> evidences) {
        for (auto& e : evidences)
            set.evidences.push_back(std::move(e));
    };
    append(extract_return_type(model, &ambiguous));
    append(extract_parameters(model, &ambiguous));
    append(extract_object_declarations(model, &ambiguous));
    append(extract_local_variables(model, &ambiguous));
    append(extract_inheritance(model, &ambiguous));

    std::sort(set.evidences.begin(), set.evidences.end(), interaction_less);

    if (diagnostics) {
        for (const auto& simple : ambiguous) {
            const auto* matches = model.resolve_simple(simple);
            std::string names;
            for (const auto& q : *matches) {
                if (!names.empty())
                    names += ", ";
                names += q;
            }
            diagnostics->push_back({Severity::Warning, "global", 0,
                                    "simple name '" + simple +
                                        "' is ambiguous; evidence attached to all of: " + names});
        }
    }
    return set;
}

} // namespace da
