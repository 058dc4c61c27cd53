#pragma once

#include <string>
#include <vector>

#include "sdcheck/workspace.hpp"

namespace sdcheck {

struct SuiteParams {
    std::uint64_t seed = 0;
    std::size_t bound = 8;
    std::size_t trials = 20;
    std::size_t max_dim = 6;
    bool progress = false;  // per-property progress on stderr
};

struct PropertyResult {
    std::string id;
    std::string description;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::vector<std::string> witnesses;  // first few failure descriptions
    double elapsed_ms = 0;               // timing only; not part of the digest
    bool pass() const { return failures == 0; }

    void ok() { ++checked; }
    void fail(const std::string& w) {
        ++checked;
        ++failures;
        if (witnesses.size() < 8) witnesses.push_back(w);
    }
    void require(bool cond, const std::string& w) { cond ? ok() : fail(w); }
};

struct SuiteReport {
    SuiteParams params;
    std::vector<std::string> corpus;
    std::vector<PropertyResult> properties;
    double elapsed_ms = 0;

    bool all_pass() const {
        for (const auto& p : properties)
            if (!p.pass()) return false;
        return true;
    }
    const PropertyResult* find(const std::string& id) const;
    // Canonical content digest: everything except timing. Two runs with the
    // same parameters must produce identical digests.
    std::string witness_digest() const;
    std::string to_json() const;
    std::string to_text() const;
};

SuiteReport run_suite(const SuiteParams& params);

}  // namespace sdcheck
