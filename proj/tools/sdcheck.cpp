// sdcheck: exact checks for semidualizing bimodules, Auslander/Bass classes,
// and Foxby equivalence over finite-dimensional algebras on prime fields.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdcheck/suite.hpp"

using namespace sdcheck;
using nlohmann::json;

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;
constexpr int kExitBounded = 3;

const char* cond_str(CondStatus s) {
    switch (s) {
        case CondStatus::PassCertified: return "pass (certified)";
        case CondStatus::PassBounded: return "pass (up to bound)";
        default: return "FAIL";
    }
}

json conditions_json(const std::vector<Condition>& cs) {
    json arr = json::array();
    for (const auto& c : cs) {
        json jc;
        jc["label"] = c.label;
        jc["status"] = c.status == CondStatus::Fail
                           ? "fail"
                           : (c.status == CondStatus::PassCertified ? "certified" : "bounded");
        jc["detail"] = c.detail;
        if (c.witness_degree) jc["witness_degree"] = *c.witness_degree;
        arr.push_back(std::move(jc));
    }
    return arr;
}

void emit(const std::string& text, const json& j, bool as_json, const std::string& out_path) {
    const std::string payload = as_json ? j.dump(2) + "\n" : text;
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path);
        out << payload;
    }
}

struct CheckArgs {
    std::string workspace_path;
    std::string bimodule;
    std::string module;
    std::string cls = "PC";
    std::string side;
    std::size_t bound = 8;
    std::size_t length = 6;
    std::string format = "text";
    std::string out_path;
};

Workspace load_or_builtin(const std::string& path) {
    Workspace ws = builtin_corpus();
    if (!path.empty()) {
        Workspace user = load_workspace(path);
        user.merge(ws);
        return user;
    }
    return ws;
}

int run_check(const std::string& kind, const CheckArgs& a) {
    const Workspace ws = load_or_builtin(a.workspace_path);
    const Bimodule* bim = ws.find_bimodule(a.bimodule);
    if (!bim) {
        std::cerr << "unknown bimodule: " << a.bimodule << "\n";
        return kExitUsage;
    }
    FoxbyCtx ctx = make_context(*bim);
    const bool as_json = a.format == "json";
    json j;
    j["report_version"] = 1;
    j["kind"] = kind;
    j["bimodule"] = a.bimodule;
    j["bound"] = a.bound;

    auto module_arg = [&]() -> const LeftModule* {
        const LeftModule* m = ws.find_module(a.module);
        if (!m) std::cerr << "unknown module: " << a.module << "\n";
        return m;
    };
    auto side_of = [&](const LeftModule& m) -> char {
        // which side of the bimodule the module lives on; --side disambiguates
        const bool over_r = m.algebra->same_as(*ctx->c.right_alg);
        const bool over_s = m.algebra->same_as(*ctx->c.left_alg);
        if (over_r && over_s) return a.side == "B" ? 'B' : 'A';
        if (over_r) return 'A';
        if (over_s) return 'B';
        return '?';
    };

    if (kind == "semidualizing") {
        const auto rep = check_semidualizing(*ctx, a.bound);
        std::ostringstream os;
        os << "check semidualizing: " << a.bimodule << " (bound " << a.bound << ")\n";
        for (const auto& c : rep.conditions)
            os << "  (" << c.label << ") " << cond_str(c.status) << "  " << c.detail << "\n";
        os << "overall: "
           << (rep.overall == Overall::Yes
                   ? "yes"
                   : rep.overall == Overall::YesUpToBound ? "yes (up to bound)" : "no")
           << (rep.witness.empty() ? "" : "  witness: " + rep.witness) << "\n";
        j["conditions"] = conditions_json(rep.conditions);
        j["overall"] = rep.overall == Overall::Yes
                           ? "yes"
                           : rep.overall == Overall::YesUpToBound ? "yes-up-to-bound" : "no";
        j["witness"] = rep.witness;
        j["end_dim_hom_s"] = rep.end_s_dim;
        j["end_dim_hom_rop"] = rep.end_rop_dim;
        emit(os.str(), j, as_json, a.out_path);
        return rep.overall == Overall::Yes
                   ? kExitVerified
                   : rep.overall == Overall::YesUpToBound ? kExitBounded : kExitFailure;
    }
    if (kind == "faithful") {
        const auto sdr = check_semidualizing(*ctx, a.bound);
        const auto rep = check_faithful(*ctx);
        std::ostringstream os;
        os << "check faithful: " << a.bimodule << "\n";
        if (sdr.overall == Overall::No)
            os << "  note: bimodule is not semidualizing (witness " << sdr.witness << ")\n";
        os << "  faithful: " << (rep.faithful ? "yes" : "no")
           << (rep.witness.empty() ? "" : "  witness: " + rep.witness) << "\n";
        j["faithful"] = rep.faithful;
        j["witness"] = rep.witness;
        j["semidualizing"] = sdr.overall != Overall::No;
        emit(os.str(), j, as_json, a.out_path);
        if (!rep.faithful || sdr.overall == Overall::No) return kExitFailure;
        return sdr.overall == Overall::Yes ? kExitVerified : kExitBounded;
    }
    if (kind == "auslander" || kind == "bass") {
        const LeftModule* m = module_arg();
        if (!m) return kExitUsage;
        const MembershipReport rep = kind == "auslander"
                                         ? auslander_membership(*ctx, *m, a.bound)
                                         : bass_membership(*ctx, *m, a.bound);
        std::ostringstream os;
        os << "check " << kind << ": module " << a.module << " against " << a.bimodule
           << " (bound " << a.bound << ")\n";
        for (const auto& c : rep.conditions)
            os << "  (" << c.label << ") " << cond_str(c.status) << "  " << c.detail << "\n";
        os << "member: " << (rep.member ? (rep.certified ? "yes (certified)" : "yes (up to bound)")
                                        : "no")
           << (rep.witness.empty() ? "" : "  witness: " + rep.witness) << "\n";
        j["module"] = a.module;
        j["class"] = rep.class_name;
        j["conditions"] = conditions_json(rep.conditions);
        j["member"] = rep.member;
        j["certified"] = rep.certified;
        j["witness"] = rep.witness;
        emit(os.str(), j, as_json, a.out_path);
        return rep.member ? (rep.certified ? kExitVerified : kExitBounded) : kExitFailure;
    }
    if (kind == "cclass") {
        const LeftModule* m = module_arg();
        if (!m) return kExitUsage;
        CClass cls = CClass::PC;
        if (a.cls == "FC") cls = CClass::FC;
        else if (a.cls == "IC") cls = CClass::IC;
        else if (a.cls != "PC") {
            std::cerr << "unknown class: " << a.cls << " (expected FC, PC or IC)\n";
            return kExitUsage;
        }
        const auto rep = cclass_membership(*ctx, *m, cls, a.bound);
        std::ostringstream os;
        os << "check cclass " << a.cls << ": module " << a.module << " against " << a.bimodule
           << "\n  base class (" << rep.base.class_name
           << "): " << (rep.base.member ? "member" : "non-member") << "\n  companion: "
           << (rep.companion_ok ? "ok" : "FAIL") << "  (" << rep.note << ")\n  member: "
           << (rep.member ? "yes" : "no") << "\n";
        j["module"] = a.module;
        j["cclass"] = a.cls;
        j["member"] = rep.member;
        j["base_member"] = rep.base.member;
        j["companion_ok"] = rep.companion_ok;
        j["note"] = rep.note;
        emit(os.str(), j, as_json, a.out_path);
        if (!rep.member) return kExitFailure;
        return rep.base.certified ? kExitVerified : kExitBounded;
    }
    if (kind == "foxby-roundtrip") {
        const LeftModule* m = module_arg();
        if (!m) return kExitUsage;
        const char side = side_of(*m);
        if (side == '?') {
            std::cerr << "module is over neither side of the bimodule\n";
            return kExitUsage;
        }
        const RoundTripReport rep =
            side == 'A' ? foxby_roundtrip_r(*ctx, *m) : foxby_roundtrip_s(*ctx, *m);
        std::ostringstream os;
        os << "check foxby-roundtrip (" << (side == 'A' ? "C(x)- then Hom" : "Hom then C(x)-")
           << "): module " << a.module << " against " << a.bimodule << "\n  " << rep.note
           << "\n  witness invertible: " << (rep.invertible ? "yes" : "no") << "\n";
        j["module"] = a.module;
        j["side"] = side == 'A' ? "A" : "B";
        j["invertible"] = rep.invertible;
        j["note"] = rep.note;
        emit(os.str(), j, as_json, a.out_path);
        return rep.invertible ? kExitVerified : kExitFailure;
    }
    if (kind == "theorem-complex") {
        const LeftModule* m = module_arg();
        if (!m) return kExitUsage;
        const char side = side_of(*m);
        if (side == '?') {
            std::cerr << "module is over neither side of the bimodule\n";
            return kExitUsage;
        }
        const CharComplexReport rep = side == 'A' ? auslander_char_complex(*ctx, *m, a.length)
                                                  : bass_char_complex(*ctx, *m, a.length);
        std::ostringstream os;
        os << "check theorem-complex (" << (side == 'A' ? "Auslander" : "Bass")
           << " characterization, length " << a.length << "): module " << a.module << " against "
           << a.bimodule << "\n";
        os << "  (a) complex exact:          " << (rep.a_exact ? "yes" : "NO") << "\n";
        os << "  (b) " << (side == 'A' ? "projective terms:       " : "injective terms:        ")
           << (rep.b_terms ? "yes" : "NO") << "\n";
        os << "  (c) " << (side == 'A' ? "C-injective terms:      " : "C-projective terms:     ")
           << (rep.c_terms ? "yes" : "NO") << "\n";
        os << "  (d) module recovered:       " << (rep.d_iso ? "yes" : "NO") << "\n";
        os << "  (e) " << (side == 'A' ? "C(x)X exact:            " : "Hom_S(C,Y) exact:       ")
           << (rep.e_exact ? "yes" : "NO") << "\n";
        os << "all five: " << (rep.all() ? "yes" : "no")
           << (rep.failing.empty() ? "" : "  first failing: (" + rep.failing + ")") << "\n";
        j["module"] = a.module;
        j["side"] = side == 'A' ? "A" : "B";
        j["a_exact"] = rep.a_exact;
        j["b_terms"] = rep.b_terms;
        j["c_terms"] = rep.c_terms;
        j["d_iso"] = rep.d_iso;
        j["e_exact"] = rep.e_exact;
        j["all"] = rep.all();
        j["failing"] = rep.failing;
        emit(os.str(), j, as_json, a.out_path);
        return rep.all() ? kExitVerified : kExitFailure;
    }
    std::cerr << "unknown check kind: " << kind << "\n";
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact semidualizing-bimodule and Foxby-equivalence checks over F_p"};
    app.require_subcommand(1);

    // validate
    auto* validate = app.add_subcommand("validate", "load and validate a workspace file");
    std::string v_path, v_object;
    validate->add_option("workspace", v_path, "workspace JSON file")->required();
    validate->add_option("--object", v_object, "only report on one named object");

    // check
    auto* check = app.add_subcommand("check", "run a verification");
    std::string c_kind;
    CheckArgs ca;
    check
        ->add_option("kind", c_kind,
                     "semidualizing|faithful|auslander|bass|cclass|foxby-roundtrip|theorem-complex")
        ->required();
    check->add_option("--workspace", ca.workspace_path, "extra workspace JSON file");
    check->add_option("--bimodule", ca.bimodule, "bimodule name")->required();
    check->add_option("--module", ca.module, "module name (membership checks)");
    check->add_option("--class", ca.cls, "C-class for cclass: FC, PC or IC");
    check->add_option("--side", ca.side, "A or B when the sides coincide");
    check->add_option("--bound", ca.bound, "Ext/Tor vanishing bound (default 8)");
    check->add_option("--length", ca.length, "window length for theorem-complex (default 6)");
    check->add_option("--format", ca.format, "text or json (default text)");
    check->add_option("-o,--output", ca.out_path, "write the report to a file");

    // examples
    auto* examples = app.add_subcommand("examples", "list or build example objects");
    auto* ex_list = examples->add_subcommand("list", "list the available builders");
    auto* ex_build = examples->add_subcommand("build", "emit a workspace fragment");
    std::string b_name, b_out;
    std::vector<std::string> b_args;
    ex_build->add_option("name", b_name, "builder name")->required();
    ex_build->add_option("params", b_args, "builder parameters");
    ex_build->add_option("-o,--output", b_out, "write the fragment to a file");

    // suite
    auto* suite = app.add_subcommand("suite", "run the randomized property suite");
    SuiteParams sp;
    bool seed_given = false;
    std::string s_format = "text", s_out;
    suite->add_option("--seed", sp.seed, "suite seed (default: SDCHECK_SEED or 0)")
        ->each([&](const std::string&) { seed_given = true; });
    suite->add_option("--bound", sp.bound, "Ext/Tor bound (default 8)");
    suite->add_option("--trials", sp.trials, "random trials per family (default 20)");
    suite->add_option("--max-dim", sp.max_dim, "largest random module dimension (default 6)");
    suite->add_flag("--progress", sp.progress, "report per-property progress on stderr");
    suite->add_option("--format", s_format, "text or json");
    suite->add_option("-o,--output", s_out, "write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (validate->parsed()) {
            const Workspace ws = load_workspace(v_path);
            if (!v_object.empty() && !ws.find_algebra(v_object) && !ws.find_module(v_object) &&
                !ws.find_bimodule(v_object)) {
                std::cerr << "object not found: " << v_object << "\n";
                return kExitFailure;
            }
            std::cout << "workspace ok: " << ws.algebras.size() << " algebra(s), "
                      << ws.modules.size() << " module(s), " << ws.bimodules.size()
                      << " bimodule(s)\n";
            return kExitVerified;
        }
        if (check->parsed()) return run_check(c_kind, ca);
        if (examples->parsed()) {
            if (ex_list->parsed() || !ex_build->parsed()) {
                for (const auto& b : example_builders())
                    std::cout << b.name << " " << b.params << "\n    " << b.what << "\n";
                return kExitVerified;
            }
            const Workspace ws = build_example(b_name, b_args);
            const std::string text = workspace_to_json(ws) + "\n";
            if (b_out.empty())
                std::cout << text;
            else {
                std::ofstream out(b_out);
                out << text;
            }
            return kExitVerified;
        }
        if (suite->parsed()) {
            if (!seed_given) {
                if (const char* env = std::getenv("SDCHECK_SEED")) sp.seed = std::strtoull(env, nullptr, 10);
            }
            const SuiteReport rep = run_suite(sp);
            const std::string payload =
                s_format == "json" ? rep.to_json() + "\n" : rep.to_text();
            if (s_out.empty())
                std::cout << payload;
            else {
                std::ofstream out(s_out);
                out << payload;
            }
            return rep.all_pass() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
