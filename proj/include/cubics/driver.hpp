#pragma once

#include "cubics/catalog.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cubics {

extern const char* kEngineVersion;

struct RunOptions {
    std::map<std::string, std::string> params;  // case-parameter overrides
    std::optional<unsigned> dihedral_n;         // override for dihedral checks
    std::optional<unsigned> max_conductor;      // skip cases needing more
    std::set<std::string> kind_filter;          // empty = run everything
    bool timings = false;
    bool stop_on_fail = false;
};

struct CheckResult {
    std::string name;
    std::string kind;
    std::string status;  // pass | fail | skipped | unresolved
    std::string witness;
    long elapsed_ms = 0;
};

struct VerificationReport {
    std::string engine;
    std::string case_id;
    std::string claimed_group;
    std::string verdict_status;
    bool case_skipped = false;
    std::string skip_reason;
    std::vector<CheckResult> entries;
    size_t passed = 0, failed = 0, skipped = 0, unresolved = 0;

    Json to_json(bool timings) const;
    std::string to_text(bool timings) const;
    bool all_green() const { return failed == 0 && unresolved == 0; }
};

/// Execute the record's checks in declared order; failures never abort the
/// remaining checks, and resource-cap hits report as "unresolved".
VerificationReport run_case(const CaseRecord& rec, const RunOptions& opts = {});

std::vector<VerificationReport> run_all(const RunOptions& opts = {});

/// 0 all pass, 1 any fail, 3 any unresolved.
int aggregate_exit_code(const std::vector<VerificationReport>& reports);

}  // namespace cubics
