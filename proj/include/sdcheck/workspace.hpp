#pragma once

#include <string>
#include <vector>

#include "sdcheck/foxby.hpp"

namespace sdcheck {

// A named collection of validated objects; the unit of file I/O.
struct Workspace {
    std::vector<std::pair<std::string, AlgebraPtr>> algebras;
    std::vector<std::pair<std::string, LeftModule>> modules;
    std::vector<std::pair<std::string, Bimodule>> bimodules;

    AlgebraPtr find_algebra(const std::string& name) const;
    const LeftModule* find_module(const std::string& name) const;
    const Bimodule* find_bimodule(const std::string& name) const;

    void add_algebra(const std::string& name, AlgebraPtr a);
    void add_module(const std::string& name, LeftModule m);
    void add_bimodule(const std::string& name, Bimodule b);
    void merge(const Workspace& other);
};

// The built-in example corpus used by the checks and the property suite.
Workspace builtin_corpus();

// Names of the corpus bimodules exercised by the property suite, and the
// subset known to be faithfully semidualizing.
std::vector<std::string> suite_bimodule_names();
std::vector<std::string> suite_faithful_bimodule_names();

struct ExampleSpec {
    std::string name;
    std::string params;  // human-readable parameter summary
    std::string what;
};
std::vector<ExampleSpec> example_builders();
// Builds a named example ("morita 2 2", "dualizing F2[x]/(x2)", ...) as a
// workspace fragment; throws std::invalid_argument on unknown names/params.
Workspace build_example(const std::string& name, const std::vector<std::string>& args);

// JSON round trip. load_workspace validates every object and rejects the
// first failure with the object name and a witness.
Workspace load_workspace(const std::string& path);
Workspace parse_workspace(const std::string& json_text);
std::string workspace_to_json(const Workspace& ws);

}  // namespace sdcheck
