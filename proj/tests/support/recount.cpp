#include "support/recount.hpp"

#include <set>
#include <utility>

namespace da::test {

std::map<std::string, RecountRow> recount_metrics(const CodebaseModel& model,
                                                  const InteractionSet& evidences) {
    std::map<std::string, RecountRow> rows;
    for (const auto& cls : model.classes)
        rows[cls.qualified_name];

    std::set<std::pair<std::string, std::string>> out_partners;
    std::set<std::pair<std::string, std::string>> in_partners;
    std::set<std::pair<std::string, std::string>> ccig_pairs;

    for (const auto& e : evidences.evidences) {
        const bool dependency = e.kind == InteractionKind::Parameter ||
                                e.kind == InteractionKind::ReturnType ||
                                e.kind == InteractionKind::LocalVariable;
        if (dependency) {
            rows[e.source_class].tnucd += 1;
            rows[e.target_class].tnucc += 1;
            out_partners.insert({e.source_class, e.target_class});
            in_partners.insert({e.target_class, e.source_class});
        }
        if (e.kind == InteractionKind::ObjectDeclaration ||
            e.kind == InteractionKind::Inheritance)
            ccig_pairs.insert({e.source_class, e.target_class});
    }

    for (const auto& [source, target] : out_partners)
        rows[source].nucd += 1;
    for (const auto& [target, source] : in_partners)
        rows[target].nucc += 1;
    for (const auto& [source, target] : ccig_pairs) {
        rows[source].class_coupling += 1; // client side
        rows[target].class_coupling += 1; // server side
    }

    for (const auto& cls : model.classes) {
        int visible = 0;
        for (const auto& f : cls.fields)
            if (f.visibility != Visibility::Private)
                ++visible;
        for (const auto& m : cls.methods)
            if (m.visibility != Visibility::Private)
                ++visible;
        rows[cls.qualified_name].visible_members = visible;
    }
    return rows;
}

} // namespace da::test
