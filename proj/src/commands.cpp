#include "da/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include "da/errors.hpp"
#include "da/version.hpp"

namespace fs = std::filesystem;

namespace da {

namespace {

// ANSI styling only on an interactive stdout and without
// DESIGN_ANALYZER_NO_COLOR; file outputs are never styled.
bool use_color(const std::ostream& out) {
    if (&out != &std::cout)
        return false;
    if (std::getenv("DESIGN_ANALYZER_NO_COLOR"))
        return false;
    return isatty(fileno(stdout)) != 0;
}

std::string heading(const std::ostream& out, const std::string& text) {
    return use_color(out) ? "\033[1m" + text + "\033[0m" : text;
}

std::string read_text_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path);
    out << content;
    if (!out)
        throw Error("cannot write " + path);
}

std::string generic_path(const fs::path& p) {
    return p.generic_string();
}

void print_diagnostics(std::ostream& err, const std::vector<Diagnostic>& diagnostics) {
    for (const auto& d : diagnostics)
        err << to_string(d) << "\n";
}

void print_metrics(std::ostream& out, const MetricsTable& table) {
    std::size_t width = 5;
    for (const auto& row : table.rows)
        width = std::max(width, row.class_name.size());
    out << std::left << std::setw(static_cast<int>(width) + 2) << "class" << std::right
        << std::setw(6) << "nucd" << std::setw(7) << "tnucd" << std::setw(6) << "nucc"
        << std::setw(7) << "tnucc" << std::setw(10) << "coupling" << std::setw(9) << "visible"
        << "\n";
    for (const auto& row : table.rows)
        out << std::left << std::setw(static_cast<int>(width) + 2) << row.class_name
            << std::right << std::setw(6) << row.nucd << std::setw(7) << row.tnucd
            << std::setw(6) << row.nucc << std::setw(7) << row.tnucc << std::setw(10)
            << row.class_coupling << std::setw(9) << row.visible_members << "\n";
}

void print_pca_table(std::ostream& out, const PcaResult& pca) {
    out << "principal components (" << pca.labels.size() << " variables):\n";
    out << "  #   eigenvalue   cumulative   component vector\n";
    const auto old_flags = out.flags();
    const auto old_precision = out.precision();
    out << std::fixed;
    for (std::size_t k = 0; k < pca.eigenvalues.size(); ++k) {
        out << "  " << std::left << std::setw(4) << (k + 1) << std::right << std::setprecision(4)
            << std::setw(10) << pca.eigenvalues[k] << "   " << std::setprecision(2)
            << std::setw(9) << (pca.retained[k] * 100.0) << "%   (";
        const auto component = pca.component(k);
        for (std::size_t j = 0; j < component.size(); ++j) {
            if (j)
                out << ", ";
            out << std::setprecision(4) << component[j];
        }
        out << ")\n";
    }
    out.flags(old_flags);
    out.precision(old_precision);
}

void print_selection(std::ostream& out, const SelectionReport& sel) {
    if (sel.mode == SelectionMode::MostSignificantMeasure) {
        out << "most significant measure: " << sel.chosen_label << "\n";
        out << "|loading| ranking (first component):\n";
        const auto old = out.precision();
        out << std::fixed << std::setprecision(4);
        for (const auto& entry : sel.rationale)
            out << "  " << std::left << std::setw(16) << entry.label << std::right << entry.value
                << "\n";
        out << std::defaultfloat << std::setprecision(static_cast<int>(old));
        return;
    }
    out << "recommended attachment class: " << sel.chosen_label << "\n";
    out << "selection used " << sel.component_count << " component(s); "
        << (sel.fallback ? "no class loads negative on all of them - fell back to the "
                           "lowest class coupling"
                         : "candidates load negative on all of them")
        << "\n";
    out << "candidates (class coupling ascending):\n";
    for (const auto& entry : sel.rationale)
        out << "  " << std::left << std::setw(24) << entry.label << std::right
            << " coupling=" << static_cast<int>(entry.value)
            << (entry.all_negative ? "  [negative in all components]" : "") << "\n";
}

int print_error(std::ostream& err, const std::string& message, int code) {
    err << "error: " << message << "\n";
    return code;
}

struct LoadedAnalysis {
    Analysis analysis;
    int exit_code = kExitOk; // kExitOk when usable
};

LoadedAnalysis load_and_analyze(const std::vector<std::string>& paths, std::ostream& err) {
    LoadedAnalysis out;
    std::vector<Diagnostic> discovery_diags;
    auto files = discover_java_files(paths, discovery_diags);
    if (files.empty()) {
        print_diagnostics(err, discovery_diags);
        out.exit_code = print_error(err, "no .java files found", kExitNoInput);
        return out;
    }
    try {
        out.analysis = run_analysis(files);
    } catch (const EmptyCodebaseError& e) {
        print_diagnostics(err, discovery_diags);
        out.exit_code = print_error(err, e.what(), kExitNoInput);
        return out;
    }
    out.analysis.diagnostics.insert(out.analysis.diagnostics.begin(),
                                    discovery_diags.begin(), discovery_diags.end());
    return out;
}

} // namespace

std::vector<SourceFile> discover_java_files(const std::vector<std::string>& paths,
                                            std::vector<Diagnostic>& diagnostics) {
    // display path + absolute tiebreaker, so equal displays stay ordered
    std::vector<std::pair<std::string, fs::path>> found;

    for (const auto& arg : paths) {
        const fs::path p(arg);
        std::error_code ec;
        if (fs::is_directory(p, ec)) {
            for (auto it = fs::recursive_directory_iterator(p, ec);
                 it != fs::recursive_directory_iterator(); it.increment(ec)) {
                if (ec)
                    break;
                if (!it->is_regular_file() || it->path().extension() != ".java")
                    continue;
                found.emplace_back(generic_path(fs::relative(it->path(), p)), it->path());
            }
        } else if (fs::is_regular_file(p, ec) && p.extension() == ".java") {
            found.emplace_back(generic_path(p), p);
        } else {
            diagnostics.push_back({Severity::Warning, arg, 0,
                                   "path is not a .java file or directory; skipped"});
        }
    }

    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        return std::tie(a.first, a.second) < std::tie(b.first, b.second);
    });

    std::vector<SourceFile> out;
    out.reserve(found.size());
    for (const auto& [display, full] : found) {
        try {
            out.push_back({display, read_text_file(full)});
        } catch (const Error& e) {
            diagnostics.push_back({Severity::Warning, display, 0, e.what()});
        }
    }
    return out;
}

Analysis run_analysis(const std::vector<SourceFile>& files) {
    Analysis a;
    a.file_count = static_cast<int>(files.size());
    CodebaseBuild build = build_codebase(files);
    a.model = std::move(build.model);
    a.diagnostics = std::move(build.diagnostics);
    a.evidences = extract_all(a.model, &a.diagnostics);
    a.graph = build_graph(a.model, a.evidences);
    a.metrics = metrics_table(a.model, a.evidences, a.graph);
    return a;
}

AnalysisReport make_report(const Analysis& analysis, std::optional<PcaResult> pca_result,
                           std::optional<SelectionReport> selection) {
    AnalysisReport report;
    report.summary.file_count = analysis.file_count;
    report.summary.class_count = static_cast<int>(analysis.model.classes.size());
    for (const auto& e : analysis.evidences.evidences)
        ++report.interaction_totals[static_cast<std::size_t>(e.kind)];
    report.metrics = analysis.metrics;
    report.pca = std::move(pca_result);
    report.selection = std::move(selection);
    report.diagnostics = analysis.diagnostics;
    report.tool_version = std::string(kToolVersion);
    return report;
}

WhatifResult run_whatif(Analysis base, const std::string& new_name,
                        const std::vector<std::string>& connect, InteractionKind kind) {
    WhatifResult result;

    Analysis after;
    after.file_count = base.file_count;
    after.diagnostics = base.diagnostics;
    after.model = base.model;

    ClassModel virtual_class;
    virtual_class.qualified_name = new_name;
    virtual_class.kind = ClassKind::Class;
    virtual_class.source_file = "<what-if>";
    after.model.classes.push_back(virtual_class);
    after.model.simple_name_index[virtual_class.simple_name()].insert(new_name);

    after.graph = add_virtual_module(base.graph, new_name, connect, kind);

    after.evidences = base.evidences;
    std::set<std::string> distinct(connect.begin(), connect.end());
    for (const auto& target : distinct)
        after.evidences.evidences.push_back(
            {new_name, target, kind, "<what-if>", 0, new_name});
    std::stable_sort(after.evidences.evidences.begin(), after.evidences.evidences.end(),
                     [](const Interaction& a, const Interaction& b) {
                         return std::tie(a.file, a.line) < std::tie(b.file, b.line);
                     });

    after.metrics = metrics_table(after.model, after.evidences, after.graph);

    result.before = std::move(base);
    result.after = std::move(after);
    return result;
}

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
    LoadedAnalysis loaded = load_and_analyze(args.paths, err);
    if (loaded.exit_code != kExitOk)
        return loaded.exit_code;
    Analysis& a = loaded.analysis;

    if (args.strict && !a.diagnostics.empty()) {
        print_diagnostics(err, a.diagnostics);
        return print_error(err, "diagnostics present and --strict given", kExitFailure);
    }

    try {
        if (args.dot_file)
            write_text_file(*args.dot_file, emit_dot(a.graph));
        if (args.csv_file)
            write_text_file(*args.csv_file, emit_metrics_csv(a.metrics));
        if (args.json_file)
            write_text_file(*args.json_file, emit_report_json(make_report(a)));
    } catch (const Error& e) {
        return print_error(err, e.what(), kExitFailure);
    }

    out << heading(out, "codebase") << "\n";
    out << "files:   " << a.file_count << "\n";
    out << "classes: " << a.model.classes.size() << "\n";
    const auto report = make_report(a);
    out << "interaction evidences: return-type=" << report.interaction_totals[0]
        << " parameter=" << report.interaction_totals[1]
        << " object-declaration=" << report.interaction_totals[2]
        << " local-variable=" << report.interaction_totals[3]
        << " inheritance=" << report.interaction_totals[4] << "\n\n";
    out << heading(out, "coupling measures") << "\n";
    print_metrics(out, a.metrics);
    print_diagnostics(err, a.diagnostics);
    return kExitOk;
}

int cmd_pca(const PcaArgs& args, std::ostream& out, std::ostream& err) {
    if (args.mode != "measures" && args.mode != "classes")
        return print_error(err, "unknown --mode (use measures or classes)", kExitFailure);

    LoadedAnalysis loaded = load_and_analyze(args.paths, err);
    if (loaded.exit_code != kExitOk)
        return loaded.exit_code;
    Analysis& a = loaded.analysis;

    SelectionReport selection;
    try {
        if (args.mode == "measures") {
            selection = most_significant_measure(a.metrics, PcaOptions{args.standardize});
        } else {
            ClassSelectionOptions options;
            options.variance_target = args.variance_target;
            options.force_components = args.components;
            options.standardize = args.standardize;
            selection = less_responsive_class(a.metrics, options);
        }
    } catch (const InsufficientDataError& e) {
        return print_error(err, e.what(), kExitDegenerate);
    } catch (const DegenerateDataError& e) {
        return print_error(err, e.what(), kExitDegenerate);
    }

    print_pca_table(out, selection.analysis);
    out << "\n";
    print_selection(out, selection);

    if (args.json_file) {
        try {
            write_text_file(*args.json_file,
                            emit_report_json(make_report(a, selection.analysis, selection)));
        } catch (const Error& e) {
            return print_error(err, e.what(), kExitFailure);
        }
    }
    print_diagnostics(err, a.diagnostics);
    return kExitOk;
}

int cmd_whatif(const WhatifArgs& args, std::ostream& out, std::ostream& err) {
    if (args.new_name.empty())
        return print_error(err, "--new NAME is required", kExitWhatifInvalid);

    LoadedAnalysis loaded = load_and_analyze(args.paths, err);
    if (loaded.exit_code != kExitOk)
        return loaded.exit_code;

    WhatifResult result;
    try {
        result = run_whatif(std::move(loaded.analysis), args.new_name, args.connect, args.kind);
    } catch (const ValidationError& e) {
        return print_error(err, e.what(), kExitWhatifInvalid);
    }
    const Analysis& before = result.before;
    const Analysis& after = result.after;

    try {
        if (args.dot_before)
            write_text_file(*args.dot_before, emit_dot(before.graph));
        if (args.dot_after)
            write_text_file(*args.dot_after, emit_dot(after.graph));
        if (args.json_file)
            write_text_file(*args.json_file,
                            emit_whatif_json(make_report(before), make_report(after),
                                             args.new_name, args.connect, args.kind));
    } catch (const Error& e) {
        return print_error(err, e.what(), kExitFailure);
    }

    out << "what-if: add " << args.new_name << " (kind " << to_string(args.kind)
        << ") connected to";
    if (args.connect.empty())
        out << " nothing";
    for (const auto& t : args.connect)
        out << " " << t;
    out << "\n\nchanged rows (after - before):\n";

    int changed = 0;
    for (const auto& row : after.metrics.rows) {
        const ClassMetrics* old_row = before.metrics.find(row.class_name);
        const ClassMetrics zero{row.class_name, 0, 0, 0, 0, 0, 0};
        const ClassMetrics& prev = old_row ? *old_row : zero;
        if (row == prev)
            continue;
        ++changed;
        out << "  " << row.class_name << (old_row ? "" : " (new)") << ": ";
        const char* names[] = {"nucd", "tnucd", "nucc", "tnucc", "coupling", "visible"};
        bool first = true;
        for (std::size_t k = 0; k < 6; ++k) {
            const int delta = static_cast<int>(measure_value(row, k) - measure_value(prev, k));
            if (delta == 0)
                continue;
            if (!first)
                out << ", ";
            out << names[k] << (delta > 0 ? "+" : "") << delta;
            first = false;
        }
        out << "\n";
    }
    if (changed == 0)
        out << "  (none)\n";
    print_diagnostics(err, after.diagnostics);
    return kExitOk;
}

int cmd_recommend(const RecommendArgs& args, std::ostream& out, std::ostream& err) {
    LoadedAnalysis loaded = load_and_analyze(args.paths, err);
    if (loaded.exit_code != kExitOk)
        return loaded.exit_code;
    Analysis& a = loaded.analysis;

    SelectionReport selection;
    try {
        selection = less_responsive_class(a.metrics);
    } catch (const InsufficientDataError& e) {
        return print_error(err, e.what(), kExitDegenerate);
    } catch (const DegenerateDataError& e) {
        return print_error(err, e.what(), kExitDegenerate);
    }

    out << "attach new modules to: " << selection.chosen_label << "\n";
    const ClassMetrics* row = a.metrics.find(selection.chosen_label);
    if (row)
        out << "current class coupling " << row->class_coupling << ", " << row->visible_members
            << " visible member(s)\n";
    out << (selection.fallback
                ? "picked as the lowest-coupling class (no class had negative loadings on "
                  "every leading component)\n"
                : "its loadings are negative on every leading principal component\n");

    if (args.json_file) {
        try {
            write_text_file(*args.json_file,
                            emit_report_json(make_report(a, selection.analysis, selection)));
        } catch (const Error& e) {
            return print_error(err, e.what(), kExitFailure);
        }
    }
    print_diagnostics(err, a.diagnostics);
    return kExitOk;
}

} // namespace da
