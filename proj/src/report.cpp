#include "da/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "da/version.hpp"

namespace da {

namespace {

std::string simple_of(const std::string& qualified) {
    const auto pos = qualified.rfind('.');
    return pos == std::string::npos ? qualified : qualified.substr(pos + 1);
}

const char* edge_style(InteractionKind kind) {
    switch (category_of(kind)) {
    case InteractionCategory::ClassClass: return "solid";
    case InteractionCategory::OperationOperation: return "dashed";
    case InteractionCategory::DependencyOnly: return "dotted";
    }
    return "solid";
}

// Trim serialized doubles to at most 10 significant digits so report bytes
// stay stable.
double round_significant(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", value);
    return std::strtod(buf, nullptr);
}

nlohmann::ordered_json json_numbers(const std::vector<double>& values) {
    auto arr = nlohmann::ordered_json::array();
    for (const double v : values)
        arr.push_back(round_significant(v));
    return arr;
}

nlohmann::ordered_json json_matrix_rows(const Matrix& m) {
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        arr.push_back(json_numbers(m.row(i)));
    return arr;
}

nlohmann::ordered_json json_pca(const PcaResult& pca) {
    nlohmann::ordered_json j;
    j["labels"] = pca.labels;
    j["eigenvalues"] = json_numbers(pca.eigenvalues);
    // one row per principal component
    j["components"] = json_matrix_rows(pca.eigenvectors.transposed());
    j["retained_variance"] = json_numbers(pca.retained);
    j["column_means"] = json_numbers(pca.column_means);
    j["covariance_divisor"] = "1/n";
    j["standardized"] = pca.standardized;
    return j;
}

nlohmann::ordered_json json_selection(const SelectionReport& sel) {
    nlohmann::ordered_json j;
    j["mode"] = to_string(sel.mode);
    j["chosen"] = sel.chosen_label;
    j["components_used"] = sel.component_count;
    j["fallback"] = sel.fallback;
    j["labels"] = sel.labels;
    j["loadings"] = json_matrix_rows(sel.loadings);
    auto rationale = nlohmann::ordered_json::array();
    for (const auto& entry : sel.rationale) {
        nlohmann::ordered_json e;
        e["label"] = entry.label;
        e["value"] = round_significant(entry.value);
        e["all_negative"] = entry.all_negative;
        rationale.push_back(std::move(e));
    }
    j["rationale"] = std::move(rationale);
    return j;
}

} // namespace

std::string emit_dot(const InteractionGraph& graph) {
    std::ostringstream out;
    out << "digraph design {\n";
    for (const auto& node : graph.nodes())
        out << "  \"" << node << "\" [label=\"" << simple_of(node) << "\"];\n";
    for (const auto& edge : graph.edges()) {
        out << "  \"" << edge.source << "\" -> \"" << edge.target << "\" [label=\""
            << to_string(edge.kind);
        if (edge.evidence_count > 1)
            out << " x" << edge.evidence_count;
        out << "\", style=" << edge_style(edge.kind) << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string emit_metrics_csv(const MetricsTable& table) {
    std::ostringstream out;
    out << "class,nucd,tnucd,nucc,tnucc,class_coupling,visible_members\n";
    for (const auto& row : table.rows)
        out << row.class_name << ',' << row.nucd << ',' << row.tnucd << ',' << row.nucc << ','
            << row.tnucc << ',' << row.class_coupling << ',' << row.visible_members << '\n';
    return out.str();
}

namespace {

nlohmann::ordered_json report_body(const AnalysisReport& report);

} // namespace

std::string emit_report_json(const AnalysisReport& report) {
    return report_body(report).dump(2) + "\n";
}

std::string emit_whatif_json(const AnalysisReport& before, const AnalysisReport& after,
                             const std::string& new_name,
                             const std::vector<std::string>& connected_to,
                             InteractionKind kind) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["whatif"] = {{"new", new_name}, {"connected_to", connected_to}, {"kind", to_string(kind)}};

    auto diff = nlohmann::ordered_json::array();
    for (const auto& row : after.metrics.rows) {
        const ClassMetrics* old_row = before.metrics.find(row.class_name);
        const ClassMetrics zero{row.class_name, 0, 0, 0, 0, 0, 0};
        const ClassMetrics& prev = old_row ? *old_row : zero;
        if (row == prev)
            continue;
        nlohmann::ordered_json d;
        d["class"] = row.class_name;
        d["new"] = old_row == nullptr;
        d["nucd"] = row.nucd - prev.nucd;
        d["tnucd"] = row.tnucd - prev.tnucd;
        d["nucc"] = row.nucc - prev.nucc;
        d["tnucc"] = row.tnucc - prev.tnucc;
        d["class_coupling"] = row.class_coupling - prev.class_coupling;
        d["visible_members"] = row.visible_members - prev.visible_members;
        diff.push_back(std::move(d));
    }
    j["diff"] = std::move(diff);
    j["before"] = report_body(before);
    j["after"] = report_body(after);
    j["tool"] = {{"name", std::string(kToolName)}, {"version", std::string(kToolVersion)}};
    return j.dump(2) + "\n";
}

namespace {

nlohmann::ordered_json report_body(const AnalysisReport& report) {
    nlohmann::ordered_json j;
    j["schema"] = 1;

    j["summary"] = {{"files", report.summary.file_count},
                    {"classes", report.summary.class_count}};

    nlohmann::ordered_json interactions;
    int total = 0;
    static constexpr std::array<const char*, kInteractionKindCount> kKeys = {
        "return_type", "parameter", "object_declaration", "local_variable", "inheritance"};
    for (std::size_t k = 0; k < kKeys.size(); ++k) {
        interactions[kKeys[k]] = report.interaction_totals[k];
        total += report.interaction_totals[k];
    }
    interactions["total"] = total;
    j["interactions"] = std::move(interactions);

    auto metrics = nlohmann::ordered_json::array();
    for (const auto& row : report.metrics.rows) {
        nlohmann::ordered_json r;
        r["class"] = row.class_name;
        r["nucd"] = row.nucd;
        r["tnucd"] = row.tnucd;
        r["nucc"] = row.nucc;
        r["tnucc"] = row.tnucc;
        r["class_coupling"] = row.class_coupling;
        r["visible_members"] = row.visible_members;
        metrics.push_back(std::move(r));
    }
    j["metrics"] = std::move(metrics);

    j["pca"] = report.pca ? json_pca(*report.pca) : nlohmann::ordered_json(nullptr);
    j["selection"] =
        report.selection ? json_selection(*report.selection) : nlohmann::ordered_json(nullptr);

    auto diagnostics = nlohmann::ordered_json::array();
    for (const auto& d : report.diagnostics) {
        nlohmann::ordered_json e;
        e["severity"] = d.severity == Severity::Error ? "error" : "warning";
        e["file"] = d.file;
        e["line"] = d.line;
        e["message"] = d.message;
        diagnostics.push_back(std::move(e));
    }
    j["diagnostics"] = std::move(diagnostics);

    j["tool"] = {{"name", std::string(kToolName)},
                 {"version", report.tool_version.empty() ? std::string(kToolVersion)
                                                         : report.tool_version}};

    return j;
}

} // namespace

} // namespace da
