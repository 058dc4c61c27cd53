#include "sdcheck/workspace.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sdcheck {

using nlohmann::json;

AlgebraPtr Workspace::find_algebra(const std::string& name) const {
    for (const auto& [n, a] : algebras)
        if (n == name) return a;
    return nullptr;
}

const LeftModule* Workspace::find_module(const std::string& name) const {
    for (const auto& [n, m] : modules)
        if (n == name) return &m;
    return nullptr;
}

const Bimodule* Workspace::find_bimodule(const std::string& name) const {
    for (const auto& [n, b] : bimodules)
        if (n == name) return &b;
    return nullptr;
}

void Workspace::add_algebra(const std::string& name, AlgebraPtr a) {
    if (find_algebra(name)) throw std::invalid_argument("duplicate algebra name: " + name);
    algebras.emplace_back(name, std::move(a));
}

void Workspace::add_module(const std::string& name, LeftModule m) {
    if (find_module(name)) throw std::invalid_argument("duplicate module name: " + name);
    modules.emplace_back(name, std::move(m));
}

void Workspace::add_bimodule(const std::string& name, Bimodule b) {
    if (find_bimodule(name)) throw std::invalid_argument("duplicate bimodule name: " + name);
    bimodules.emplace_back(name, std::move(b));
}

void Workspace::merge(const Workspace& other) {
    for (const auto& [n, a] : other.algebras)
        if (!find_algebra(n)) algebras.emplace_back(n, a);
    for (const auto& [n, m] : other.modules)
        if (!find_module(n)) modules.emplace_back(n, m);
    for (const auto& [n, b] : other.bimodules)
        if (!find_bimodule(n)) bimodules.emplace_back(n, b);
}

namespace {

LeftModule top_module(const AlgebraPtr& a) {
    return quotient_module(regular_module(a), algebra_radical(*a).basis).module;
}

LeftModule dual_of_regular(const AlgebraPtr& a) {
    // D(R) over a commutative algebra, as a left module over R itself
    std::vector<Mat> act;
    act.reserve(a->dim);
    for (std::size_t i = 0; i < a->dim; ++i) act.push_back(transpose(a->left_mats[i]));
    return LeftModule{a, a->dim, std::move(act)};
}

}  // namespace

Workspace builtin_corpus() {
    Workspace ws;
    const auto f2 = field_algebra(2);
    const auto f3 = field_algebra(3);
    const auto f5 = field_algebra(5);
    const auto f2x2 = truncated_poly_algebra(2, 2);
    const auto f2x3 = truncated_poly_algebra(2, 3);
    const auto f3x2 = truncated_poly_algebra(3, 2);
    const auto f5x2 = truncated_poly_algebra(5, 2);
    const auto plane = square_zero_plane_algebra(2);
    const auto m2f2 = matrix_ring(2, 2);
    const auto m2f3 = matrix_ring(3, 2);
    const auto t2 = triangular_ring(2, 1);
    const auto f2xf2 = triangular_ring(2, 0);
    const auto gc2 = group_ring(2, cyclic_group(2));
    const auto gc3 = group_ring(3, cyclic_group(3));
    const auto m2q = tensor_product_algebra(f2x2, matrix_ring(2, 2), "M2(F2[x]/(x^2))");
    const auto m2plane =
        tensor_product_algebra(plane, matrix_ring(2, 2), "M2(F2[x,y]/(x2,xy,y2))");

    for (const auto& a : {f2, f3, f5, f2x2, f2x3, f3x2, f5x2, plane, m2f2, m2f3, t2, f2xf2, gc2,
                          gc3, m2q, m2plane}) {
        ws.add_algebra(a->name, a);
        ws.add_module("reg(" + a->name + ")", regular_module(a));
        ws.add_module("top(" + a->name + ")", top_module(a));
        ws.add_bimodule("regular(" + a->name + ")", regular_bimodule(a));
        ws.add_bimodule("Rsquared(" + a->name + ")",
                        bimodule_direct_sum(regular_bimodule(a), regular_bimodule(a)));
    }
    ws.add_bimodule("morita(2,2)", morita_row_bimodule(2, 2));
    ws.add_bimodule("morita(3,2)", morita_row_bimodule(3, 2));
    for (const auto& a : {f2x2, f2x3, f3x2, f5x2, plane}) {
        ws.add_module("dual(" + a->name + ")", dual_of_regular(a));
        ws.add_bimodule("dualizing(" + a->name + ")", dualizing_bimodule(a));
    }
    {
        const CentralAlgebra ca = central_tensor_algebra(f2x2, matrix_ring(2, 2), m2q->name);
        ws.add_bimodule("bc(" + m2q->name + ")",
                        base_change_bimodule(dual_of_regular(f2x2), ca));
    }
    {
        const CentralAlgebra ca = central_tensor_algebra(plane, matrix_ring(2, 2), m2plane->name);
        ws.add_bimodule("bc(" + m2plane->name + ")",
                        base_change_bimodule(dual_of_regular(plane), ca));
    }
    return ws;
}

std::vector<std::string> suite_bimodule_names() {
    return {
        "regular(F2[x]/(x^2))",
        "regular(M2(F2))",
        "regular(F2[x,y]/(x2,xy,y2))",
        "morita(2,2)",
        "morita(3,2)",
        "dualizing(F2[x]/(x^2))",
        "dualizing(F5[x]/(x^2))",
        "dualizing(F2[x,y]/(x2,xy,y2))",
        "bc(M2(F2[x]/(x^2)))",
        "bc(M2(F2[x,y]/(x2,xy,y2)))",
    };
}

std::vector<std::string> suite_faithful_bimodule_names() {
    // every suite bimodule is faithfully semidualizing; the Rsquared
    // controls are deliberately not in this list
    return suite_bimodule_names();
}

std::vector<ExampleSpec> example_builders() {
    return {
        {"regular", "<algebra>", "regular bimodule of a corpus algebra"},
        {"rsquared", "<algebra>", "the non-example R+R over a corpus algebra"},
        {"morita", "<p> <n>", "row space over (F_p, M_n(F_p))"},
        {"matrix-ring", "<p> <n>", "M_n(F_p) on the matrix-unit basis"},
        {"triangular", "<p> <f>", "formal triangular ring with F = F_p^f"},
        {"group-ring", "<p> <n>", "F_p[C_n] on the group basis"},
        {"poly", "<p> <k>", "F_p[x]/(x^k)"},
        {"plane", "<p>", "F_p[x,y]/(x^2,xy,y^2)"},
        {"dualizing", "<algebra>", "D(R) over a commutative corpus algebra"},
        {"base-change", "<algebra> <n>", "D(Q) (x)_Q M_n(Q) over a commutative corpus algebra Q"},
    };
}

namespace {

std::uint64_t parse_u64(const std::string& s, const char* what) {
    try {
        return std::stoull(s);
    } catch (...) {
        throw std::invalid_argument(std::string("invalid ") + what + ": " + s);
    }
}

}  // namespace

Workspace build_example(const std::string& name, const std::vector<std::string>& args) {
    Workspace out;
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw std::invalid_argument("builder '" + name + "' takes " + std::to_string(n) +
                                        " parameter(s)");
    };
    if (name == "regular" || name == "rsquared" || name == "dualizing" || name == "base-change") {
        const Workspace corpus = builtin_corpus();
        if (args.empty()) throw std::invalid_argument("builder '" + name + "' needs an algebra");
        const AlgebraPtr a = corpus.find_algebra(args[0]);
        if (!a) throw std::invalid_argument("unknown algebra: " + args[0]);
        out.add_algebra(a->name, a);
        if (name == "regular") {
            out.add_bimodule("regular(" + a->name + ")", regular_bimodule(a));
        } else if (name == "rsquared") {
            out.add_bimodule("Rsquared(" + a->name + ")",
                             bimodule_direct_sum(regular_bimodule(a), regular_bimodule(a)));
        } else if (name == "dualizing") {
            out.add_module("dual(" + a->name + ")", dual_of_regular(a));
            out.add_bimodule("dualizing(" + a->name + ")", dualizing_bimodule(a));
        } else {
            need(2);
            const std::size_t n = parse_u64(args[1], "matrix size");
            const std::string rname = "M" + std::to_string(n) + "(" + a->name + ")";
            const CentralAlgebra ca = central_tensor_algebra(a, matrix_ring(a->field.p, n), rname);
            out.add_algebra(rname, ca.r);
            out.add_bimodule("bc(" + rname + ")", base_change_bimodule(dual_of_regular(a), ca));
        }
        return out;
    }
    if (name == "morita") {
        need(2);
        const std::uint64_t p = parse_u64(args[0], "prime");
        const std::size_t n = parse_u64(args[1], "matrix size");
        Bimodule b = morita_row_bimodule(p, n);
        out.add_algebra(b.left_alg->name, b.left_alg);
        out.add_algebra(b.right_alg->name, b.right_alg);
        out.add_bimodule("morita(" + std::to_string(p) + "," + std::to_string(n) + ")",
                         std::move(b));
        return out;
    }
    AlgebraPtr a;
    if (name == "matrix-ring") {
        need(2);
        a = matrix_ring(parse_u64(args[0], "prime"), parse_u64(args[1], "matrix size"));
    } else if (name == "triangular") {
        need(2);
        a = triangular_ring(parse_u64(args[0], "prime"), parse_u64(args[1], "bimodule dim"));
    } else if (name == "group-ring") {
        need(2);
        a = group_ring(parse_u64(args[0], "prime"), cyclic_group(parse_u64(args[1], "order")));
    } else if (name == "poly") {
        need(2);
        a = truncated_poly_algebra(parse_u64(args[0], "prime"), parse_u64(args[1], "exponent"));
    } else if (name == "plane") {
        need(1);
        a = square_zero_plane_algebra(parse_u64(args[0], "prime"));
    } else {
        throw std::invalid_argument("unknown example builder: " + name);
    }
    out.add_algebra(a->name, a);
    out.add_module("reg(" + a->name + ")", regular_module(a));
    out.add_bimodule("regular(" + a->name + ")", regular_bimodule(a));
    return out;
}

// ---- JSON ------------------------------------------------------------------

namespace {

json algebra_to_json(const std::string& name, const Algebra& a) {
    json j;
    j["name"] = name;
    j["p"] = a.field.p;
    j["dim"] = a.dim;
    j["one"] = a.one;
    j["table"] = a.table;
    return j;
}

json actions_to_json(const std::vector<Mat>& action) {
    json arr = json::array();
    for (const auto& m : action) arr.push_back(m.a);
    return arr;
}

std::vector<Mat> actions_from_json(const json& arr, std::uint64_t p, std::size_t count,
                                   std::size_t dim, const std::string& where) {
    if (!arr.is_array() || arr.size() != count)
        throw std::invalid_argument(where + ": expected " + std::to_string(count) +
                                    " action matrices");
    std::vector<Mat> out;
    out.reserve(count);
    for (const auto& e : arr) {
        std::vector<std::uint64_t> flat = e.get<std::vector<std::uint64_t>>();
        if (flat.size() != dim * dim)
            throw std::invalid_argument(where + ": action matrix has wrong size");
        out.emplace_back(p, dim, dim, std::move(flat));
    }
    return out;
}

}  // namespace

std::string workspace_to_json(const Workspace& ws) {
    json j;
    j["version"] = 1;
    j["algebras"] = json::array();
    for (const auto& [name, a] : ws.algebras) j["algebras"].push_back(algebra_to_json(name, *a));
    j["modules"] = json::array();
    for (const auto& [name, m] : ws.modules) {
        json jm;
        jm["name"] = name;
        std::string alg;
        for (const auto& [an, a] : ws.algebras)
            if (a->same_as(*m.algebra)) {
                alg = an;
                break;
            }
        jm["algebra"] = alg;
        jm["dim"] = m.dim;
        jm["action"] = actions_to_json(m.action);
        j["modules"].push_back(std::move(jm));
    }
    j["bimodules"] = json::array();
    for (const auto& [name, b] : ws.bimodules) {
        json jb;
        jb["name"] = name;
        std::string la, ra;
        for (const auto& [an, a] : ws.algebras) {
            if (la.empty() && a->same_as(*b.left_alg)) la = an;
            if (ra.empty() && a->same_as(*b.right_alg)) ra = an;
        }
        jb["left_algebra"] = la;
        jb["right_algebra"] = ra;
        jb["dim"] = b.dim;
        jb["left_action"] = actions_to_json(b.left_action);
        jb["right_action"] = actions_to_json(b.right_action);
        j["bimodules"].push_back(std::move(jb));
    }
    return j.dump(2);
}

Workspace parse_workspace(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("workspace parse error: ") + e.what());
    }
    Workspace ws;
    for (const auto& ja : j.value("algebras", json::array())) {
        const std::string name = ja.at("name").get<std::string>();
        AlgebraPtr a = make_algebra(ja.at("p").get<std::uint64_t>(),
                                    ja.at("dim").get<std::size_t>(),
                                    ja.at("table").get<std::vector<std::uint64_t>>(),
                                    ja.at("one").get<std::vector<std::uint64_t>>(), name);
        if (auto err = validate_algebra(*a))
            throw std::invalid_argument("algebra '" + name + "': " + *err);
        ws.add_algebra(name, std::move(a));
    }
    for (const auto& jm : j.value("modules", json::array())) {
        const std::string name = jm.at("name").get<std::string>();
        const std::string alg = jm.at("algebra").get<std::string>();
        AlgebraPtr a = ws.find_algebra(alg);
        if (!a)
            throw std::invalid_argument("module '" + name + "': dangling algebra reference '" +
                                        alg + "'");
        const std::size_t dim = jm.at("dim").get<std::size_t>();
        LeftModule m{a, dim, actions_from_json(jm.at("action"), a->field.p, a->dim, dim,
                                               "module '" + name + "'")};
        if (auto err = validate_module(m))
            throw std::invalid_argument("module '" + name + "': " + *err);
        ws.add_module(name, std::move(m));
    }
    for (const auto& jb : j.value("bimodules", json::array())) {
        const std::string name = jb.at("name").get<std::string>();
        const std::string la = jb.at("left_algebra").get<std::string>();
        const std::string ra = jb.at("right_algebra").get<std::string>();
        AlgebraPtr s = ws.find_algebra(la);
        AlgebraPtr r = ws.find_algebra(ra);
        if (!s || !r)
            throw std::invalid_argument("bimodule '" + name + "': dangling algebra reference");
        const std::size_t dim = jb.at("dim").get<std::size_t>();
        Bimodule b = make_bimodule(
            s, r,
            actions_from_json(jb.at("left_action"), s->field.p, s->dim, dim,
                              "bimodule '" + name + "'"),
            actions_from_json(jb.at("right_action"), r->field.p, r->dim, dim,
                              "bimodule '" + name + "'"));
        if (auto err = validate_bimodule(b))
            throw std::invalid_argument("bimodule '" + name + "': " + *err);
        ws.add_bimodule(name, std::move(b));
    }
    return ws;
}

Workspace load_workspace(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open workspace file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_workspace(ss.str());
}

}  // namespace sdcheck
