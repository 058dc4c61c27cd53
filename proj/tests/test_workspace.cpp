#include <doctest.h>

#include "sdcheck/workspace.hpp"

using namespace sdcheck;

TEST_CASE("builtin corpus loads and validates") {
    const Workspace ws = builtin_corpus();
    CHECK(ws.algebras.size() >= 14);
    CHECK(ws.find_algebra("F2"));
    CHECK(ws.find_algebra("M2(F2)"));
    CHECK(ws.find_module("reg(F2[x]/(x^2))"));
    CHECK(ws.find_module("top(F2[x,y]/(x2,xy,y2))"));
    CHECK(ws.find_bimodule("regular(F2)"));
    CHECK(ws.find_bimodule("morita(2,2)"));
    CHECK(ws.find_bimodule("dualizing(F2[x,y]/(x2,xy,y2))"));
    CHECK(ws.find_bimodule("bc(M2(F2[x]/(x^2)))"));
    for (const auto& nm : suite_bimodule_names()) CHECK(ws.find_bimodule(nm));
    // everything in the corpus validates
    for (const auto& [n, a] : ws.algebras) CHECK_FALSE(validate_algebra(*a));
    for (const auto& [n, m] : ws.modules) CHECK_FALSE(validate_module(m));
    for (const auto& [n, b] : ws.bimodules) CHECK_FALSE(validate_bimodule(b));
}

TEST_CASE("json round trip preserves every object") {
    Workspace ws;
    const auto a = truncated_poly_algebra(2, 2);
    ws.add_algebra(a->name, a);
    ws.add_module("reg", regular_module(a));
    ws.add_bimodule("C", regular_bimodule(a));
    const std::string text = workspace_to_json(ws);
    const Workspace back = parse_workspace(text);
    REQUIRE(back.find_algebra(a->name));
    CHECK(back.find_algebra(a->name)->same_as(*a));
    REQUIRE(back.find_module("reg"));
    CHECK(same_module(*back.find_module("reg"), regular_module(a)));
    REQUIRE(back.find_bimodule("C"));
    CHECK(back.find_bimodule("C")->left_action == regular_bimodule(a).left_action);
    // serialization is stable
    CHECK(workspace_to_json(back) == text);
}

TEST_CASE("validation failures carry names and witnesses") {
    // broken associativity is rejected with the algebra name and triple:
    // u*u = v, u*v = 0 but v*u = v, so (uu)u != u(uu)
    const std::string bad = R"({
      "version": 1,
      "algebras": [{"name": "broken", "p": 2, "dim": 3,
                    "one": [1, 0, 0],
                    "table": [1,0,0, 0,1,0, 0,0,1,
                              0,1,0, 0,0,1, 0,0,0,
                              0,0,1, 0,0,1, 0,0,0]}]
    })";
    try {
        parse_workspace(bad);
        FAIL("expected a validation error");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        CHECK(msg.find("broken") != std::string::npos);
        CHECK(msg.find("triple") != std::string::npos);
    }
    // dangling reference
    const std::string dangling = R"({
      "version": 1,
      "algebras": [],
      "modules": [{"name": "m", "algebra": "missing", "dim": 0, "action": []}]
    })";
    try {
        parse_workspace(dangling);
        FAIL("expected a dangling-reference error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("dangling") != std::string::npos);
    }
    // minimal valid document
    const std::string minimal = R"({
      "version": 1,
      "algebras": [{"name": "F2", "p": 2, "dim": 1, "one": [1], "table": [1]}],
      "bimodules": [{"name": "C", "left_algebra": "F2", "right_algebra": "F2",
                     "dim": 1, "left_action": [[1]], "right_action": [[1]]}]
    })";
    const Workspace ws = parse_workspace(minimal);
    CHECK(ws.find_bimodule("C"));
}

TEST_CASE("example builders") {
    for (const auto& spec : example_builders()) CHECK_FALSE(spec.name.empty());
    const Workspace m = build_example("morita", {"2", "2"});
    CHECK(m.find_bimodule("morita(2,2)"));
    const Workspace d = build_example("dualizing", {"F2[x,y]/(x2,xy,y2)"});
    CHECK(d.find_bimodule("dualizing(F2[x,y]/(x2,xy,y2))"));
    const Workspace b = build_example("base-change", {"F2[x]/(x^2)", "2"});
    CHECK(b.find_bimodule("bc(M2(F2[x]/(x^2)))"));
    const Workspace g = build_example("group-ring", {"3", "3"});
    CHECK(g.find_algebra("F3[C3]"));
    CHECK_THROWS_AS(build_example("nonsense", {}), std::invalid_argument);
    CHECK_THROWS_AS(build_example("poly", {"2"}), std::invalid_argument);
    CHECK_THROWS_AS(build_example("dualizing", {"M2(F2)"}), std::invalid_argument);
    // builder output serializes and loads back
    const Workspace back = parse_workspace(workspace_to_json(m));
    CHECK(back.find_bimodule("morita(2,2)"));
}
