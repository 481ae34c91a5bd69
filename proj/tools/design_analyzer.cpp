#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "da/commands.hpp"
#include "da/version.hpp"

namespace {

const std::map<std::string, da::InteractionKind> kKindNames = {
    {"object-declaration", da::InteractionKind::ObjectDeclaration},
    {"inheritance", da::InteractionKind::Inheritance},
    {"parameter", da::InteractionKind::Parameter},
    {"return-type", da::InteractionKind::ReturnType},
};

void add_paths_option(CLI::App* cmd, std::vector<std::string>& paths) {
    cmd->add_option("paths", paths, "source files or directories scanned for .java files")
        ->required()
        ->expected(-1);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Recovers the class-interaction structure of Java source trees, scores "
                 "coupling per class, and uses principal component analysis to rank measures "
                 "and pick low-impact attachment points."};
    app.set_version_flag("--version", std::string(da::kToolName) + " " +
                                          std::string(da::kToolVersion));
    app.require_subcommand(1);

    int rc = 0;

    da::AnalyzeArgs analyze_args;
    auto* analyze = app.add_subcommand(
        "analyze", "parse sources, emit the interaction graph and coupling metrics");
    add_paths_option(analyze, analyze_args.paths);
    std::string analyze_dot, analyze_csv, analyze_json;
    analyze->add_option("--dot", analyze_dot, "write the interaction graph as DOT");
    analyze->add_option("--csv", analyze_csv, "write the metrics table as CSV");
    analyze->add_option("--json", analyze_json, "write the full report as JSON");
    analyze->add_flag("--strict", analyze_args.strict, "fail on any parse diagnostic");
    analyze->callback([&] {
        if (!analyze_dot.empty()) analyze_args.dot_file = analyze_dot;
        if (!analyze_csv.empty()) analyze_args.csv_file = analyze_csv;
        if (!analyze_json.empty()) analyze_args.json_file = analyze_json;
        rc = da::cmd_analyze(analyze_args, std::cout, std::cerr);
    });

    da::PcaArgs pca_args;
    auto* pca = app.add_subcommand(
        "pca", "principal component analysis over the coupling measures");
    add_paths_option(pca, pca_args.paths);
    pca->add_option("--mode", pca_args.mode,
                    "measures: rank the six measures; classes: rank attachment classes")
        ->required()
        ->check(CLI::IsMember({"measures", "classes"}));
    pca->add_option("--variance-target", pca_args.variance_target,
                    "fraction of variance the kept components must reach")
        ->check(CLI::Range(0.0, 1.0));
    int pca_components = 0;
    pca->add_option("--components", pca_components,
                    "use exactly this many leading components (classes mode)");
    pca->add_flag("--standardize", pca_args.standardize,
                  "scale each column to unit variance before the analysis");
    std::string pca_json;
    pca->add_option("--json", pca_json, "write the report as JSON");
    pca->callback([&] {
        if (pca_components > 0) pca_args.components = pca_components;
        if (!pca_json.empty()) pca_args.json_file = pca_json;
        rc = da::cmd_pca(pca_args, std::cout, std::cerr);
    });

    da::WhatifArgs whatif_args;
    auto* whatif = app.add_subcommand(
        "whatif", "add a virtual module and diff the coupling metrics");
    add_paths_option(whatif, whatif_args.paths);
    whatif->add_option("--new", whatif_args.new_name, "name of the module to add")->required();
    std::vector<std::string> connect;
    whatif->add_option("--connect", connect,
                       "comma separated classes the new module interacts with")
        ->delimiter(',');
    std::string kind_name = "object-declaration";
    whatif->add_option("--kind", kind_name, "interaction kind of the new edges")
        ->check(CLI::IsMember({"object-declaration", "inheritance", "parameter", "return-type"}));
    std::string dot_before, dot_after, whatif_json;
    whatif->add_option("--dot-before", dot_before, "write the original graph as DOT");
    whatif->add_option("--dot-after", dot_after, "write the augmented graph as DOT");
    whatif->add_option("--json", whatif_json, "write before/after/diff as JSON");
    whatif->callback([&] {
        whatif_args.connect = connect;
        whatif_args.kind = kKindNames.at(kind_name);
        if (!dot_before.empty()) whatif_args.dot_before = dot_before;
        if (!dot_after.empty()) whatif_args.dot_after = dot_after;
        if (!whatif_json.empty()) whatif_args.json_file = whatif_json;
        rc = da::cmd_whatif(whatif_args, std::cout, std::cerr);
    });

    da::RecommendArgs recommend_args;
    auto* recommend = app.add_subcommand(
        "recommend", "name the lowest-impact class to attach a new module to");
    add_paths_option(recommend, recommend_args.paths);
    std::string recommend_json;
    recommend->add_option("--json", recommend_json, "write the report as JSON");
    recommend->callback([&] {
        if (!recommend_json.empty()) recommend_args.json_file = recommend_json;
        rc = da::cmd_recommend(recommend_args, std::cout, std::cerr);
    });

    CLI11_PARSE(app, argc, argv);
    return rc;
}
