#include <doctest.h>

#include <algorithm>

#include "da/interactions.hpp"
#include "da/parser.hpp"

#include "support/corpus_gen.hpp"

using namespace da;

namespace {

CodebaseModel model_of(std::vector<SourceFile> files) {
    return build_codebase(std::move(files)).model;
}

int count_kind(const InteractionSet& set, InteractionKind kind) {
    return static_cast<int>(std::count_if(set.evidences.begin(), set.evidences.end(),
                                          [kind](const Interaction& e) {
                                              return e.kind == kind;
                                          }));
}

} // namespace

TEST_CASE("return types create one evidence per resolved user-defined name") {
    const auto model = model_of({
        {"A.java", "class A { }"},
        {"B.java", "class B { A getA() { return null; } void m() { } }"},
    });
    const auto out = extract_return_type(model);
    REQUIRE(out.size() == 1);
    CHECK(out[0].source_class == "B");
    CHECK(out[0].target_class == "A");
    CHECK(out[0].kind == InteractionKind::ReturnType);
    CHECK(out[0].via_member == "getA");
}

TEST_CASE("generic return counts only user-defined names") {
    const auto model = model_of({
        {"A.java", "class A { }"},
        {"B.java", "class B { List<A> all() { return null; } }"},
    });
    const auto out = extract_return_type(model);
    REQUIRE(out.size() == 1);
    CHECK(out[0].target_class == "A");
}

TEST_CASE("repeated parameter types yield repeated evidences") {
    const auto model = model_of({
        {"A.java", "class A { }"},
        {"B.java", "class B { void f(A a, A c) { } }"},
    });
    const auto out = extract_parameters(model);
    CHECK(out.size() == 2);
}

TEST_CASE("primitive parameters yield nothing") {
    const auto model = model_of({
        {"A.java", "class A { }"},
        {"B.java", "class B { void f(int x) { } }"},
    });
    CHECK(extract_parameters(model).empty());
}

TEST_CASE("constructor parameters count") {
    const auto model = model_of({
        {"A.java", "class A { }"},
        {"B.java", "class B { B(A a) { } }"},
    });
    const auto out = extract_parameters(model);
    REQUIRE(out.size() == 1);
    CHECK(out[0].via_member == "B");
}

TEST_CASE("matching declared and instantiated field type is one evidence") {
    const auto model = model_of({
        {"A.java", "class A { }"},
        {"B.java", "class B { A a = new A(); int n; }"},
    });
    const auto out = extract_object_declarations(model);
    REQUIRE(out.size() == 1);
    CHECK(out[0].kind == InteractionKind::ObjectDeclaration);
    CHECK(out[0].via_member == "a");
}

TEST_CASE("subtype initializer behind a supertype field adds an evidence") {
    const auto model = model_of({
        {"A.java", "class A { }"},
        {"SubA.java", "class SubA extends A { }"},
        {"B.java", "class B { A a = new SubA(); }"},
    });
    auto out = extract_object_declarations(model);
    REQUIRE(out.size() == 2);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return x.target_class < y.target_class;
    });
    CHECK(out[0].target_class == "A");
    CHECK(out[1].target_class == "SubA");
}

TEST_CASE("local declaration plus instantiation is two evidences") {
    const auto model = model_of({
        {"A.java", "class A { }"},
        {"B.java", "class B { void m() { A a = new A(); } }"},
    });
    const auto out = extract_local_variables(model);
    CHECK(out.size() == 2);
}

TEST_CASE("returning a fresh instance is one local evidence") {
    const auto model = model_of({
        {"C.java", "class C { C(int x) { } }"},
        {"B.java", "class B { Object m(int x) { return new C(x); } }"},
    });
    const auto out = extract_local_variables(model);
    REQUIRE(out.size() == 1);
    CHECK(out[0].target_class == "C");
}

TEST_CASE("inheritance is subtype to supertype") {
    const auto model = model_of({
        {"A.java", "class A { }"},
        {"B.java", "class B extends A { }"},
    });
    const auto out = extract_inheritance(model);
    REQUIRE(out.size() == 1);
    CHECK(out[0].source_class == "B");
    CHECK(out[0].target_class == "A");
    CHECK(out[0].via_member == "extends");
}

TEST_CASE("implementing two interfaces yields two evidences") {
    const auto model = model_of({
        {"A.java", "interface A { }"},
        {"C.java", "interface C { }"},
        {"B.java", "class B implements A, C { }"},
    });
    CHECK(extract_inheritance(model).size() == 2);
}

TEST_CASE("non-user-defined supertypes are invisible") {
    const auto model = model_of({{"B.java", "class B extends Thread { }"}});
    CHECK(extract_inheritance(model).empty());
}

TEST_CASE("an isolated class produces an empty set") {
    const auto model = model_of({{"A.java", "class A { int x; void m() { } }"}});
    CHECK(extract_all(model).evidences.empty());
}

TEST_CASE("all four declaration forms at once give four distinct kinds") {
    const auto model = model_of({
        {"A.java", "class A { }"},
        {"B.java",
         "class B extends A { A a = new A(); A make(A in) { return a; } }"},
    });
    const auto set = extract_all(model);
    CHECK(count_kind(set, InteractionKind::Inheritance) == 1);
    CHECK(count_kind(set, InteractionKind::ObjectDeclaration) == 1);
    CHECK(count_kind(set, InteractionKind::Parameter) == 1);
    CHECK(count_kind(set, InteractionKind::ReturnType) == 1);
}

TEST_CASE("self references never create evidence") {
    const auto model = model_of({
        {"B.java", "class B { B next; B self() { B b = new B(); return b; } }"},
    });
    CHECK(extract_all(model).evidences.empty());
}

TEST_CASE("extract_all is deterministic and sorted") {
    const auto model = model_of(test::generate_corpus(7, 12));
    const auto a = extract_all(model);
    const auto b = extract_all(model);
    CHECK(a.evidences == b.evidences);
    for (std::size_t i = 1; i < a.evidences.size(); ++i) {
        const auto& x = a.evidences[i - 1];
        const auto& y = a.evidences[i];
        CHECK(std::tie(x.file, x.line) <= std::tie(y.file, y.line));
    }
}

TEST_CASE("every endpoint names a class in the model") {
    const auto model = model_of(test::generate_corpus(11, 18));
    for (const auto& e : extract_all(model).evidences) {
        CHECK(model.find(e.source_class) != nullptr);
        CHECK(model.find(e.target_class) != nullptr);
        CHECK(e.source_class != e.target_class);
    }
}

TEST_CASE("adding a file only adds evidence") {
    auto files = test::generate_corpus(3, 10);
    const auto before = extract_all(model_of(files)).evidences;
    files.push_back({"ZExtra.java", "class ZExtra { Gen00 g = new Gen00(); }"});
    const auto after = extract_all(model_of(files)).evidences;
    for (const auto& e : before)
        CHECK(std::count(after.begin(), after.end(), e) >=
              std::count(before.begin(), before.end(), e));
}

TEST_CASE("ambiguous simple names attach everywhere and warn") {
    const auto model = model_of({
        {"a/X.java", "package a; class X { }"},
        {"b/X.java", "package b; class X { }"},
        {"U.java", "class U { X field; }"},
    });
    std::vector<Diagnostic> diags;
    const auto set = extract_all(model, &diags);
    CHECK(set.evidences.size() == 2);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].message.find("ambiguous") != std::string::npos);
}
