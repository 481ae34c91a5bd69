#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "da/commands.hpp"

#include "support/corpus_gen.hpp"

using namespace da;
namespace fs = std::filesystem;

namespace {

struct TempTree {
    fs::path root;

    explicit TempTree(const std::string& tag) {
        root = fs::temp_directory_path() /
               ("da_test_" + tag + "_" + std::to_string(::getpid()));
        fs::remove_all(root);
        fs::create_directories(root);
    }
    ~TempTree() { fs::remove_all(root); }

    std::string file(const std::string& rel, const std::string& content) {
        const fs::path p = root / rel;
        fs::create_directories(p.parent_path());
        std::ofstream(p, std::ios::binary) << content;
        return p.string();
    }
    std::string path(const std::string& rel = "") const {
        return rel.empty() ? root.string() : (root / rel).string();
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_corpus(TempTree& tree, const std::vector<SourceFile>& files,
                  const std::string& subdir = "src") {
    for (const auto& f : files)
        tree.file(subdir + "/" + f.path, f.text);
}

} // namespace

TEST_CASE("analyze writes the requested outputs and succeeds") {
    TempTree tree("analyze");
    tree.file("src/A.java", "public class A { }\n");
    tree.file("src/B.java", "public class B extends A { public A a = new A(); }\n");

    AnalyzeArgs args;
    args.paths = {tree.path("src")};
    args.dot_file = tree.path("out.dot");
    args.csv_file = tree.path("out.csv");
    args.json_file = tree.path("out.json");

    std::ostringstream out, err;
    CHECK(cmd_analyze(args, out, err) == kExitOk);
    CHECK(out.str().find("classes: 2") != std::string::npos);

    CHECK(slurp(tree.path("out.dot")).find("digraph design") == 0);
    CHECK(slurp(tree.path("out.csv")).find("class,nucd") == 0);
    const auto j = nlohmann::json::parse(slurp(tree.path("out.json")));
    CHECK(j.at("summary").at("classes") == 2);
    CHECK(j.at("summary").at("files") == 2);
}

TEST_CASE("analyze on an empty directory exits 2") {
    TempTree tree("empty");
    fs::create_directories(tree.root / "nothing");
    AnalyzeArgs args;
    args.paths = {tree.path("nothing")};
    std::ostringstream out, err;
    CHECK(cmd_analyze(args, out, err) == kExitNoInput);
    CHECK(err.str().find("no .java files") != std::string::npos);
}

TEST_CASE("a broken file downgrades to a warning unless strict") {
    TempTree tree("broken");
    tree.file("src/A.java", "public class A { }\n");
    tree.file("src/Bad.java", "public class Bad { void m() {\n"); // unbalanced

    AnalyzeArgs args;
    args.paths = {tree.path("src")};
    args.json_file = tree.path("out.json");
    std::ostringstream out, err;
    CHECK(cmd_analyze(args, out, err) == kExitOk);
    const auto j = nlohmann::json::parse(slurp(tree.path("out.json")));
    CHECK(j.at("summary").at("classes") == 1);
    REQUIRE(j.at("diagnostics").size() == 1);
    CHECK(j.at("diagnostics").at(0).at("file") == "Bad.java");

    args.strict = true;
    std::ostringstream out2, err2;
    CHECK(cmd_analyze(args, out2, err2) == kExitFailure);
}

TEST_CASE("strict mode passes on a clean corpus") {
    TempTree tree("strictok");
    tree.file("src/A.java", "public class A { }\n");
    AnalyzeArgs args;
    args.paths = {tree.path("src")};
    args.strict = true;
    std::ostringstream out, err;
    CHECK(cmd_analyze(args, out, err) == kExitOk);
}

TEST_CASE("analyze output is byte-stable across runs") {
    TempTree tree("stable");
    write_corpus(tree, test::generate_corpus(41, 25));

    for (const char* round : {"one", "two"}) {
        AnalyzeArgs args;
        args.paths = {tree.path("src")};
        args.dot_file = tree.path(std::string("out_") + round + ".dot");
        args.csv_file = tree.path(std::string("out_") + round + ".csv");
        args.json_file = tree.path(std::string("out_") + round + ".json");
        std::ostringstream out, err;
        REQUIRE(cmd_analyze(args, out, err) == kExitOk);
    }
    CHECK(slurp(tree.path("out_one.dot")) == slurp(tree.path("out_two.dot")));
    CHECK(slurp(tree.path("out_one.csv")) == slurp(tree.path("out_two.csv")));
    CHECK(slurp(tree.path("out_one.json")) == slurp(tree.path("out_two.json")));
}

TEST_CASE("pca measures mode names a measure and writes json") {
    TempTree tree("pca");
    write_corpus(tree, test::generate_corpus(13, 16));

    PcaArgs args;
    args.paths = {tree.path("src")};
    args.mode = "measures";
    args.json_file = tree.path("pca.json");
    std::ostringstream out, err;
    REQUIRE(cmd_pca(args, out, err) == kExitOk);
    CHECK(out.str().find("most significant measure:") != std::string::npos);

    const auto j = nlohmann::json::parse(slurp(tree.path("pca.json")));
    CHECK(j.at("pca").is_object());
    CHECK(j.at("selection").at("mode") == "most-significant-measure");
}

TEST_CASE("pca classes mode recommends a class") {
    TempTree tree("pcac");
    write_corpus(tree, test::generate_corpus(19, 14));

    PcaArgs args;
    args.paths = {tree.path("src")};
    args.mode = "classes";
    std::ostringstream out, err;
    REQUIRE(cmd_pca(args, out, err) == kExitOk);
    CHECK(out.str().find("recommended attachment class:") != std::string::npos);
}

TEST_CASE("pca on a single class exits 3") {
    TempTree tree("pca1");
    tree.file("src/Only.java", "public class Only { }\n");
    PcaArgs args;
    args.paths = {tree.path("src")};
    args.mode = "measures";
    std::ostringstream out, err;
    CHECK(cmd_pca(args, out, err) == kExitDegenerate);
}

TEST_CASE("pca on metrically identical classes exits 3") {
    TempTree tree("pcaid");
    tree.file("src/A.java", "public class A { }\n");
    tree.file("src/B.java", "public class B { }\n");
    PcaArgs args;
    args.paths = {tree.path("src")};
    args.mode = "measures";
    std::ostringstream out, err;
    CHECK(cmd_pca(args, out, err) == kExitDegenerate);
    CHECK(!err.str().empty());
}

TEST_CASE("whatif diffs exactly the touched classes") {
    TempTree tree("whatif");
    tree.file("src/A.java", "public class A { }\n");
    tree.file("src/B.java", "public class B { }\n");
    tree.file("src/C.java", "public class C { }\n");

    WhatifArgs args;
    args.paths = {tree.path("src")};
    args.new_name = "StatusArea";
    args.connect = {"A"};
    args.dot_before = tree.path("before.dot");
    args.dot_after = tree.path("after.dot");
    args.json_file = tree.path("diff.json");

    std::ostringstream out, err;
    REQUIRE(cmd_whatif(args, out, err) == kExitOk);

    const auto j = nlohmann::json::parse(slurp(tree.path("diff.json")));
    REQUIRE(j.at("diff").size() == 2);
    CHECK(j.at("diff").at(0).at("class") == "A");
    CHECK(j.at("diff").at(0).at("class_coupling") == 1);
    CHECK(j.at("diff").at(0).at("nucd") == 0);
    CHECK(j.at("diff").at(1).at("class") == "StatusArea");

    const auto before = slurp(tree.path("before.dot"));
    const auto after = slurp(tree.path("after.dot"));
    CHECK(before.find("StatusArea") == std::string::npos);
    CHECK(after.find("\"StatusArea\" -> \"A\"") != std::string::npos);
}

TEST_CASE("whatif with no connections changes nothing existing") {
    TempTree tree("whatif0");
    tree.file("src/A.java", "public class A { }\n");
    tree.file("src/B.java", "public class B { }\n");

    WhatifArgs args;
    args.paths = {tree.path("src")};
    args.new_name = "Float";
    args.json_file = tree.path("diff.json");
    std::ostringstream out, err;
    REQUIRE(cmd_whatif(args, out, err) == kExitOk);
    const auto j = nlohmann::json::parse(slurp(tree.path("diff.json")));
    CHECK(j.at("diff").empty()); // the isolated new class has an all-zero row
}

TEST_CASE("whatif validation failures exit 4") {
    TempTree tree("whatif4");
    tree.file("src/A.java", "public class A { }\n");

    WhatifArgs collision;
    collision.paths = {tree.path("src")};
    collision.new_name = "A";
    std::ostringstream out, err;
    CHECK(cmd_whatif(collision, out, err) == kExitWhatifInvalid);

    WhatifArgs unknown;
    unknown.paths = {tree.path("src")};
    unknown.new_name = "Fresh";
    unknown.connect = {"Missing"};
    std::ostringstream out2, err2;
    CHECK(cmd_whatif(unknown, out2, err2) == kExitWhatifInvalid);
}

TEST_CASE("recommend prints a class and exits 0") {
    TempTree tree("rec");
    write_corpus(tree, test::generate_corpus(37, 12));
    RecommendArgs args;
    args.paths = {tree.path("src")};
    std::ostringstream out, err;
    REQUIRE(cmd_recommend(args, out, err) == kExitOk);
    CHECK(out.str().find("attach new modules to:") != std::string::npos);
}
