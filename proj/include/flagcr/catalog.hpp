#pragma once

#include <filesystem>
#include <json.hpp>
#include <string>
#include <vector>

#include "flagcr/group.hpp"

namespace flagcr {

// One subgroup to verify: generators as integer row matrices plus optional
// tags ("unipotent" enables the unipotent demo) and expected verdicts
// (currently "g_cr" and "g_ir") that the campaign cross-checks.
struct CatalogEntry {
    std::string name;
    int q = 0;
    int n = 0;
    std::vector<std::vector<std::vector<int>>> generators;
    std::vector<std::string> tags;
    nlohmann::json expected;  // object, possibly empty

    GroupSpec to_spec() const;
    bool has_tag(const std::string& t) const;
    nlohmann::json to_json() const;
};

// A (normal, over) pair for the inheritance check, by entry name.
struct CatalogPair {
    std::string normal;
    std::string over;
};

struct Catalog {
    std::vector<CatalogEntry> entries;
    std::vector<CatalogPair> pairs;

    nlohmann::json to_json() const;
};

// Reads a catalog from disk.  Accepts either a bare JSON array of entries or
// an object {"entries": [...], "pairs": [...]}.  Malformed input raises
// input_error naming the offending entry and field.
Catalog ingest_catalog(const std::filesystem::path& path);
Catalog parse_catalog(const nlohmann::json& doc, const std::string& origin);

// Deterministic catalog generators.
//
//  all-cyclic          every cyclic subgroup <g>, g in GL_n(F_q) scan order,
//                      deduplicated by element set; seed/count unused
//  random-k-generated  `count` subgroups with k generators drawn from a
//                      seeded mt19937_64
//  named-standard      scalars, diagonal, monomial, borel, unipotent-full,
//                      jordan-full, jordan-2, plus inheritance pairs
Catalog generate_catalog(const Field& f, int n, const std::string& mode, uint64_t seed = 0,
                         size_t count = 0, int k = 2, uint64_t scan_cap = kAmbientScanCap);

}  // namespace flagcr
