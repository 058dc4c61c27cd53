// Acceptance battery: every criterion prints one PASS/FAIL line; the process
// exits nonzero if any criterion fails. Parameters are pinned: seed 0,
// bound 8, 20 trials, module dimensions at most 6, exact arithmetic with
// zero tolerance throughout.

#include <chrono>
#include <cstdio>

#include "sdcheck/suite.hpp"

using namespace sdcheck;

namespace {

int g_failures = 0;

void line(int number, const char* title, bool pass, const std::string& detail) {
    std::printf("[%2d] %s  %-18s %s\n", number, pass ? "PASS" : "FAIL", title, detail.c_str());
    if (!pass) ++g_failures;
}

std::string stats(const PropertyResult* p) {
    if (!p) return "(missing)";
    std::string s = std::to_string(p->checked - p->failures) + "/" + std::to_string(p->checked) +
                    " checks";
    if (!p->witnesses.empty()) s += "; first witness: " + p->witnesses.front();
    return s;
}

bool gate(const PropertyResult* p) { return p && p->pass() && p->checked > 0; }

}  // namespace

int main() {
    SuiteParams params;  // seed 0, bound 8, trials 20, max_dim 6
    const auto t0 = std::chrono::steady_clock::now();
    std::printf("acceptance battery: seed=%llu bound=%zu trials=%zu max-dim=%zu\n",
                static_cast<unsigned long long>(params.seed), params.bound, params.trials,
                params.max_dim);
    const SuiteReport rep = run_suite(params);

    struct Row {
        int number;
        const char* title;
        const char* id;
    };
    const Row rows[] = {
        {1, "rank-one", "C01-rank-one"},
        {2, "morita", "C02-morita"},
        {3, "negative-control", "C03-negative-control"},
        {4, "dualizing", "C04-dualizing"},
        {5, "flat-lemma", "C05-flat-lemma"},
        {6, "left-right-inverses", "C06-identities"},
        {7, "two-of-three", "C07-two-of-three"},
        {8, "char-complexes", "C08-char-complexes"},
        {9, "hha", "C09-hha"},
        {10, "eval-lemmas", "C10-eval-lemmas"},
        {11, "precovers", "C11-precovers"},
        {12, "faithful-oracle", "C12-faithful-oracle"},
        {13, "balance-oracle", "C13-balance"},
        {14, "radical-oracle", "C14-radical-oracle"},
    };
    for (const auto& r : rows) {
        const PropertyResult* p = rep.find(r.id);
        line(r.number, r.title, gate(p), stats(p));
    }

    // criterion 15: determinism; a second run with the same parameters must
    // reproduce the witness sets byte for byte
    const SuiteReport rep2 = run_suite(params);
    line(15, "determinism", rep.witness_digest() == rep2.witness_digest(),
         "two runs compared on the canonical digest");

    // supplementary invariants also gate the build
    for (const auto& p : rep.properties)
        if (p.id[0] == 'I')
            line(0, p.id.c_str(), gate(&p), stats(&p));

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s (%d failure%s, %.1f s total)\n", g_failures == 0 ? "ACCEPTED" : "REJECTED",
                g_failures, g_failures == 1 ? "" : "s", secs);
    return g_failures == 0 ? 0 : 1;
}
