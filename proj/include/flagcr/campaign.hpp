#pragma once

#include <json.hpp>

#include "flagcr/cache.hpp"
#include "flagcr/catalog.hpp"
#include "flagcr/group.hpp"
#include "flagcr/subspace.hpp"

namespace flagcr {

struct CampaignConfig {
    uint64_t closure_cap = kClosureCap;
    uint64_t scan_cap = kAmbientScanCap;
    uint64_t point_cap = kSubspacePointCap;
    uint64_t seed = 0;       // echoed into the header
    int workers = 1;
    double entry_budget_seconds = 120.0;
    CacheConfig cache;
};

// Result of verifying one catalog.  `records`, `pair_records` and `summary`
// together form the verdict section and are byte-stable across reruns of the
// same catalog and config; `header` carries a timestamp and `timings`
// wall-clock data, both excluded from determinism guarantees.
struct CampaignReport {
    nlohmann::json header;        // object
    nlohmann::json records;       // array, sorted by entry name
    nlohmann::json pair_records;  // array, catalog order
    nlohmann::json summary;       // object
    nlohmann::json timings;       // object

    nlohmann::json full() const;
    // Deterministic serialization of records + pair_records + summary.
    std::string verdict_dump() const;
    // No failures, no oracle disagreements, no entry errors.
    bool clean() const;
};

// Per-entry checks (each emitted exactly once per entry):
//   convexity          the fixed complex passes the pairwise-stabilizer test
//   serre-dichotomy    cr verdict matches the homology oracle
//   gcr-three-way      building, homology and lattice verdicts agree
//   centre             centre construction steps all hold (non-cr entries)
//   loewy              socle/radical flags proper and stable under N(H)
//   fixed-point-form   X^(pointwise stabilizer of X^H) returns X^H
//   unipotent-demo     unipotent-tagged entries pass the never-cr demo
//   expected           recorded verdicts match the entry's expectations
// Outcomes: "pass", "fail", "disagreement", or "skip:<reason>".
CampaignReport run_campaign(const Catalog& catalog, const CampaignConfig& config);

}  // namespace flagcr
