#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dng/catalog.hpp"
#include "dng/solver.hpp"

namespace dng {

// One audited claim on one instance. `computed` always comes from the exact
// solver or a verified construction; `claimed` restates the published value
// or relation. The two are never conflated: a refuted record shows both.
struct AuditRecord {
    std::string claim_id; // e.g. "Thm2.4", "Cor3.6"
    std::string instance; // e.g. "S3-natural:An"
    nlohmann::ordered_json computed;
    nlohmann::ordered_json claimed;
    std::string verdict; // "confirmed" | "refuted" | "not-applicable"
    std::string witness; // labeling evidence, "" when none applies
    std::string notes;
    double elapsed_ms = 0.0;
};

struct AuditOptions {
    bool slow = false;                     // include the Mathieu entries
    std::vector<std::string> entry_filter; // empty = every entry
    SolveOptions solve;
    std::uint64_t subgroup_cap = kDefaultSubgroupCap;
};

// Runs every applicable claim against every selected entry and returns the
// records sorted by (instance, claim id). Individual claim failures become
// refuted records; they never abort the run.
std::vector<AuditRecord> run_audit(const std::vector<CatalogEntry>& entries,
                                   const AuditOptions& opts = {});

// Claim ids guaranteed at least one record in a default (non-filtered,
// non-slow) run.
const std::vector<std::string>& default_claim_ids();

// Serializes records to the report schema. Timing is normalized to null
// unless include_timing is set, so identical runs produce identical bytes.
nlohmann::ordered_json audit_report_json(const std::vector<AuditRecord>& records,
                                         bool include_timing = false);

} // namespace dng
