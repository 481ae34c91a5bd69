#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "da/graph.hpp"
#include "da/interactions.hpp"
#include "da/metrics.hpp"
#include "da/model.hpp"
#include "da/pca.hpp"

namespace da {

struct ReportSummary {
    int file_count = 0;
    int class_count = 0;
};

struct AnalysisReport {
    ReportSummary summary;
    std::array<int, kInteractionKindCount> interaction_totals{}; // indexed by kind
    MetricsTable metrics;
    std::optional<PcaResult> pca;
    std::optional<SelectionReport> selection;
    std::vector<Diagnostic> diagnostics;
    std::string tool_version;
};

/// Deterministic DOT digraph: one node per class (id = qualified name, label
/// = simple name), one edge per (source, target, kind) labeled with the kind
/// and an evidence-count suffix when above 1. C-C edges solid, O-O dashed,
/// LocalVariable dotted. Nodes and edges in sorted order.
std::string emit_dot(const InteractionGraph& graph);

/// Header `class,nucd,tnucd,nucc,tnucc,class_coupling,visible_members`, one
/// row per class in sorted order, LF endings.
std::string emit_metrics_csv(const MetricsTable& table);

/// Single JSON document, stable key order, numbers held to at most 10
/// significant digits. Schema version 1.
std::string emit_report_json(const AnalysisReport& report);

/// Combined what-if document: both full reports plus a per-class delta table
/// of all six measures (changed and new rows only).
std::string emit_whatif_json(const AnalysisReport& before, const AnalysisReport& after,
                             const std::string& new_name,
                             const std::vector<std::string>& connected_to,
                             InteractionKind kind);

} // namespace da
