#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "da/graph.hpp"
#include "da/interactions.hpp"
#include "da/metrics.hpp"
#include "da/model.hpp"
#include "da/parser.hpp"
#include "da/pca.hpp"
#include "da/report.hpp"

namespace da {

/// Recursively collects .java files under each path. Directory entries are
/// stored with root-relative paths, explicit file arguments as given; the
/// result is sorted for determinism. Missing paths produce diagnostics.
std::vector<SourceFile> discover_java_files(const std::vector<std::string>& paths,
                                            std::vector<Diagnostic>& diagnostics);

struct Analysis {
    CodebaseModel model;
    InteractionSet evidences;
    InteractionGraph graph;
    MetricsTable metrics;
    std::vector<Diagnostic> diagnostics;
    int file_count = 0;
};

/// parse -> extract -> graph -> metrics. Throws EmptyCodebaseError when no
/// class parses.
Analysis run_analysis(const std::vector<SourceFile>& files);

AnalysisReport make_report(const Analysis& analysis,
                           std::optional<PcaResult> pca_result = std::nullopt,
                           std::optional<SelectionReport> selection = std::nullopt);

// Exit codes shared by the subcommands: 0 ok, 1 generic/strict failure,
// 2 no input, 3 degenerate PCA, 4 what-if validation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitNoInput = 2;
inline constexpr int kExitDegenerate = 3;
inline constexpr int kExitWhatifInvalid = 4;

struct AnalyzeArgs {
    std::vector<std::string> paths;
    std::optional<std::string> dot_file;
    std::optional<std::string> csv_file;
    std::optional<std::string> json_file;
    bool strict = false;
};

struct PcaArgs {
    std::vector<std::string> paths;
    std::string mode = "measures"; // measures | classes
    double variance_target = 0.95;
    std::optional<int> components;
    bool standardize = false;
    std::optional<std::string> json_file;
};

struct WhatifArgs {
    std::vector<std::string> paths;
    std::string new_name;
    std::vector<std::string> connect;
    InteractionKind kind = InteractionKind::ObjectDeclaration;
    std::optional<std::string> dot_before;
    std::optional<std::string> dot_after;
    std::optional<std::string> json_file;
};

struct RecommendArgs {
    std::vector<std::string> paths;
    std::optional<std::string> json_file;
};

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err);
int cmd_pca(const PcaArgs& args, std::ostream& out, std::ostream& err);
int cmd_whatif(const WhatifArgs& args, std::ostream& out, std::ostream& err);
int cmd_recommend(const RecommendArgs& args, std::ostream& out, std::ostream& err);

// Augmented pipeline state used by cmd_whatif and its tests: the base
// analysis plus a virtual member-less class wired to `connect`.
struct WhatifResult {
    Analysis before;
    Analysis after;
};

WhatifResult run_whatif(Analysis base, const std::string& new_name,
                        const std::vector<std::string>& connect, InteractionKind kind);

} // namespace da
