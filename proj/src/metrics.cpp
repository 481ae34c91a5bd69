#include "da/metrics.hpp"

#include <algorithm>

#include "da/errors.hpp"

namespace da {

const ClassMetrics* MetricsTable::find(const std::string& class_name) const {
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const ClassMetrics& r) {
        return r.class_name == class_name;
    });
    return it == rows.end() ? nullptr : &*it;
}

Matrix MetricsTable::to_matrix() const {
    Matrix m(rows.size(), kMeasureNames.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < kMeasureNames.size(); ++j)
            m(i, j) = measure_value(rows[i], j);
    return m;
}

double measure_value(const ClassMetrics& row, std::size_t measure_index) {
    switch (measure_index) {
    case 0: return row.nucd;
    case 1: return row.tnucd;
    case 2: return row.nucc;
    case 3: return row.tnucc;
    case 4: return row.class_coupling;
    case 5: return row.visible_members;
    default: return 0.0;
    }
}

namespace {

void ensure_class(const CodebaseModel& model, const std::string& cls) {
    if (!model.find(cls))
        throw NotFoundError("unknown class: " + cls);
}

} // namespace

int nucd(const CodebaseModel& model, const InteractionSet& evidences, const std::string& cls) {
    ensure_class(model, cls);
    std::set<std::string> targets;
    for (const auto& e : evidences.evidences)
        if (e.source_class == cls && is_dependency_kind(e.kind))
            targets.insert(e.target_class);
    return static_cast<int>(targets.size());
}

int tnucd(const CodebaseModel& model, const InteractionSet& evidences, const std::string& cls) {
    ensure_class(model, cls);
    int count = 0;
    for (const auto& e : evidences.evidences)
        if (e.source_class == cls && is_dependency_kind(e.kind))
            ++count;
    return count;
}

int nucc(const CodebaseModel& model, const InteractionSet& evidences, const std::string& cls) {
    ensure_class(model, cls);
    std::set<std::string> sources;
    for (const auto& e : evidences.evidences)
        if (e.target_class == cls && is_dependency_kind(e.kind))
            sources.insert(e.source_class);
    return static_cast<int>(sources.size());
}

int tnucc(const CodebaseModel& model, const InteractionSet& evidences, const std::string& cls) {
    ensure_class(model, cls);
    int count = 0;
    for (const auto& e : evidences.evidences)
        if (e.target_class == cls && is_dependency_kind(e.kind))
            ++count;
    return count;
}

int visible_members(const CodebaseModel& model, const std::string& cls) {
    const ClassModel* c = model.find(cls);
    if (!c)
        throw NotFoundError("unknown class: " + cls);
    int count = 0;
    for (const auto& f : c->fields)
        if (f.visibility != Visibility::Private)
            ++count;
    for (const auto& m : c->methods)
        if (m.visibility != Visibility::Private)
            ++count;
    return count;
}

MetricsTable metrics_table(const CodebaseModel& model, const InteractionSet& evidences,
                           const InteractionGraph& graph) {
    const CcigView ccig = graph.ccig();
    MetricsTable table;
    table.rows.reserve(model.classes.size());
    for (const auto& cls : model.classes) {
        ClassMetrics row;
        row.class_name = cls.qualified_name;
        row.nucd = nucd(model, evidences, cls.qualified_name);
        row.tnucd = tnucd(model, evidences, cls.qualified_name);
        row.nucc = nucc(model, evidences, cls.qualified_name);
        row.tnucc = tnucc(model, evidences, cls.qualified_name);
        row.class_coupling = ccig.class_coupling(cls.qualified_name);
        row.visible_members = visible_members(model, cls.qualified_name);
        table.rows.push_back(std::move(row));
    }
    std::sort(table.rows.begin(), table.rows.end(),
              [](const ClassMetrics& a, const ClassMetrics& b) {
                  return a.class_name < b.class_name;
              });
    return table;
}

} // namespace da
