#include "flagcr/campaign.hpp"

#include <atomic>
#include <chrono>
#include <ctime>
#include <map>
#include <mutex>
#include <thread>

#include "flagcr/errors.hpp"
#include "flagcr/serialize.hpp"
#include "flagcr/theorems.hpp"

namespace flagcr {

using nlohmann::json;
using clock_type = std::chrono::steady_clock;

namespace {

struct AmbientCtx {
    const Field* field = nullptr;
    int n = 0;
    std::optional<SubspaceAction> action;  // nullopt when over the scan cap
    std::string action_skip_reason;
};

const char* kCheckSlots[] = {"convexity",        "serre-dichotomy", "gcr-three-way",
                             "centre",           "loewy",           "fixed-point-form",
                             "unipotent-demo"};

struct CheckSheet {
    // slot -> (outcome, detail)
    std::map<std::string, std::pair<std::string, std::string>> slots;

    void set(const std::string& check, std::string outcome, std::string detail = "") {
        slots[check] = {std::move(outcome), std::move(detail)};
    }
    bool done(const std::string& check) const { return slots.count(check) != 0; }
    void fill_missing(const std::string& outcome) {
        for (const char* slot : kCheckSlots)
            if (!slots.count(slot)) slots[slot] = {outcome, ""};
    }
    json to_json() const {
        json arr = json::array();
        for (const char* slot : kCheckSlots) {
            const auto it = slots.find(slot);
            json c{{"check", slot}, {"outcome", it->second.first}};
            if (!it->second.second.empty()) c["detail"] = it->second.second;
            arr.push_back(std::move(c));
        }
        for (const auto& [name, oc] : slots) {
            bool fixed = false;
            for (const char* slot : kCheckSlots)
                if (name == slot) { fixed = true; break; }
            if (fixed) continue;
            json c{{"check", name}, {"outcome", oc.first}};
            if (!oc.second.empty()) c["detail"] = oc.second;
            arr.push_back(std::move(c));
        }
        return arr;
    }
};

std::string cache_key_for(const CatalogEntry& e, const CampaignConfig& cfg) {
    json desc{{"schema", 1},
              {"name", e.name},
              {"q", e.q},
              {"n", e.n},
              {"generators", e.generators},
              {"tags", e.tags},
              {"expected", e.expected},
              {"closure_cap", cfg.closure_cap},
              {"scan_cap", cfg.scan_cap},
              {"point_cap", cfg.point_cap}};
    return fnv1a_hex(desc.dump());
}

// Normalizer of H inside the ambient group, via the precomputed action.
GroupClosure normalizer_of(const GroupClosure& h, const std::vector<Mat>& h_gens,
                           const SubspaceAction& act) {
    std::vector<Mat> kept;
    const auto& elems = act.group().elements;
    for (size_t gi = 0; gi < elems.size(); ++gi) {
        const Mat& g = elems[gi];
        const Mat& ginv = elems[act.inverse_index(gi)];
        bool ok = true;
        for (const Mat& s : h_gens)
            if (!h.contains(g * s * ginv)) { ok = false; break; }
        if (ok) kept.push_back(g);
    }
    return GroupClosure::from_elements(std::move(kept));
}

json run_entry(const CatalogEntry& entry, const AmbientCtx& ctx, const CampaignConfig& cfg) {
    json rec{{"name", entry.name}, {"q", entry.q}, {"n", entry.n}, {"tags", entry.tags},
             {"error", ""}};
    CheckSheet checks;
    const auto t0 = clock_type::now();
    auto over_budget = [&] {
        return std::chrono::duration<double>(clock_type::now() - t0).count() >
               cfg.entry_budget_seconds;
    };
    try {
        const GroupSpec spec = entry.to_spec();
        const GroupClosure group = closure(spec, cfg.closure_cap);
        rec["order"] = group.order;
        rec["closure_complete"] = group.complete;
        const InvLattice lat = invariant_lattice(spec, cfg.point_cap);
        rec["lattice_nodes"] = lat.nodes.size();
        const SubComplex y = fixed_point_subcomplex(lat);
        rec["fixed_complex"] = complex_summary_json(y);
        const CrVerdict cr = x_cr(y);
        std::optional<HomologyReport> hom;
        if (!y.empty()) hom = reduced_homology(y);
        const bool semisimple = lattice_semisimple(lat);

        const bool building_cr = y.empty() || cr.is_cr;
        const bool homology_cr = y.empty() ? true : !hom->acyclic();
        const bool lattice_cr = semisimple;
        json verdicts{{"building_cr", building_cr},
                      {"homology_cr", homology_cr},
                      {"lattice_cr", lattice_cr},
                      {"g_ir", lat.nodes.size() == 2},
                      {"cr_is_cr", cr.is_cr}};
        if (hom) {
            verdicts["reduced_betti"] = hom->reduced_betti;
            verdicts["acyclic"] = hom->acyclic();
            verdicts["euler_characteristic"] = hom->euler_characteristic;
            bool torsion_free = true;
            for (const auto& t : hom->torsion)
                if (!t.empty()) torsion_free = false;
            verdicts["torsion_free"] = torsion_free;
        }
        const bool agreed = (building_cr == homology_cr) && (building_cr == lattice_cr);
        if (agreed) verdicts["g_cr"] = building_cr;
        rec["verdicts"] = std::move(verdicts);

        // serre-dichotomy: building vs homology on the fixed complex
        if (y.empty())
            checks.set("serre-dichotomy", "pass", "empty complex: cr and not contractible");
        else if (cr.is_cr == !hom->acyclic())
            checks.set("serre-dichotomy", "pass");
        else
            checks.set("serre-dichotomy", "disagreement",
                       std::string("cr=") + (cr.is_cr ? "true" : "false") + " acyclic=" +
                           (hom->acyclic() ? "true" : "false"));

        // gcr-three-way
        if (agreed)
            checks.set("gcr-three-way", "pass");
        else
            checks.set("gcr-three-way", "disagreement",
                       std::string("building=") + (building_cr ? "cr" : "not-cr") +
                           " homology=" + (homology_cr ? "cr" : "not-cr") + " lattice=" +
                           (lattice_cr ? "cr" : "not-cr"));

        // convexity
        if (!ctx.action)
            checks.set("convexity", "skip:ambient-cap", ctx.action_skip_reason);
        else if (over_budget())
            checks.set("convexity", "skip:budget");
        else {
            const ConvexityResult cv = check_convex(y, *ctx.action);
            if (cv.convex)
                checks.set("convexity", "pass");
            else {
                checks.set("convexity", "fail", "missing flag of type " +
                                                    type_key(cv.counterexample->missing.type()));
                rec["convexity_counterexample"] = to_json(cv);
            }
        }

        // centre
        if (agreed && building_cr)
            checks.set("centre", "skip:g-cr");
        else if (!ctx.action)
            checks.set("centre", "skip:ambient-cap", ctx.action_skip_reason);
        else if (!group.complete)
            checks.set("centre", "skip:closure-cap");
        else if (over_budget())
            checks.set("centre", "skip:budget");
        else {
            try {
                const CentreReport crep =
                    find_centre(spec, &*ctx.action, cfg.closure_cap, cfg.scan_cap, cfg.point_cap);
                rec["centre"] = to_json(crep);
                checks.set("centre", "pass");
            } catch (const verification_error& e) {
                checks.set("centre", "fail", e.what());
            }
        }

        // loewy
        if (semisimple)
            checks.set("loewy", "skip:semisimple");
        else if (!ctx.action)
            checks.set("loewy", "skip:ambient-cap", ctx.action_skip_reason);
        else if (!group.complete)
            checks.set("loewy", "skip:closure-cap");
        else if (over_budget())
            checks.set("loewy", "skip:budget");
        else {
            const GroupClosure norm = normalizer_of(group, spec.generators, *ctx.action);
            const GroupSpec kspec =
                GroupSpec::make(*spec.field, spec.n, small_generating_set(norm), "N(H)");
            try {
                const LoewyCentres lc = loewy_centres(spec, kspec, cfg.closure_cap, cfg.point_cap);
                json lj = to_json(lc);
                lj["normalizer_order"] = norm.order;
                rec["loewy"] = std::move(lj);
                bool proper = !lc.socle_flag.members.empty() && !lc.radical_flag.members.empty();
                if (proper && lc.k_stable)
                    checks.set("loewy", "pass");
                else
                    checks.set("loewy", "fail",
                               lc.k_stable ? "empty Loewy flag" : "flag not stable under N(H)");
            } catch (const verification_error& e) {
                checks.set("loewy", "fail", e.what());
            }
        }

        // fixed-point-form
        if (!ctx.action)
            checks.set("fixed-point-form", "skip:ambient-cap", ctx.action_skip_reason);
        else if (over_budget())
            checks.set("fixed-point-form", "skip:budget");
        else {
            const FixedPointVerdict fp = check_fixed_point_form(y, *ctx.action);
            rec["fixed_point_form"] = to_json(fp);
            checks.set("fixed-point-form", fp.is_fixed_point_form ? "pass" : "fail");
        }

        // unipotent-demo
        if (!entry.has_tag("unipotent"))
            checks.set("unipotent-demo", "skip:not-tagged");
        else if (!ctx.action)
            checks.set("unipotent-demo", "skip:ambient-cap", ctx.action_skip_reason);
        else if (!group.complete)
            checks.set("unipotent-demo", "skip:closure-cap");
        else if (over_budget())
            checks.set("unipotent-demo", "skip:budget");
        else {
            try {
                const UnipotentReport ur =
                    borel_tits_demo(spec, &*ctx.action, cfg.closure_cap, cfg.scan_cap,
                                    cfg.point_cap);
                rec["unipotent_demo"] = to_json(ur);
                checks.set("unipotent-demo", "pass");
            } catch (const verification_error& e) {
                checks.set("unipotent-demo", "fail", e.what());
            } catch (const input_error& e) {
                // tagged but trivial or not actually unipotent
                checks.set("unipotent-demo", std::string("skip:not-applicable"), e.what());
            }
        }

        // expected verdicts
        if (!entry.expected.empty()) {
            std::string mismatch;
            for (const auto& [key, want] : entry.expected.items()) {
                if (!rec["verdicts"].contains(key)) {
                    mismatch = "no verdict named '" + key + "'";
                    break;
                }
                if (rec["verdicts"][key] != want) {
                    mismatch = key + ": expected " + want.dump() + ", got " +
                               rec["verdicts"][key].dump();
                    break;
                }
            }
            checks.set("expected", mismatch.empty() ? "pass" : "fail", mismatch);
        }
    } catch (const cap_error& e) {
        rec["error"] = std::string("cap: ") + e.what();
        checks.fill_missing("skip:error");
    } catch (const verification_error& e) {
        rec["error"] = std::string("verification: ") + e.what();
        checks.fill_missing("skip:error");
    } catch (const input_error& e) {
        rec["error"] = std::string("input: ") + e.what();
        checks.fill_missing("skip:error");
    }
    checks.fill_missing(over_budget() ? "skip:budget" : "skip:error");
    rec["checks"] = checks.to_json();
    return rec;
}

json run_pair(const CatalogPair& pair, const std::map<std::string, const CatalogEntry*>& by_name,
              const CampaignConfig& cfg) {
    json rec{{"normal", pair.normal}, {"over", pair.over}, {"check", "normal-inheritance"}};
    const auto ni = by_name.find(pair.normal);
    const auto oi = by_name.find(pair.over);
    if (ni == by_name.end() || oi == by_name.end()) {
        rec["outcome"] = "skip:unknown-entry";
        rec["detail"] = "pair references an entry that is not in the catalog";
        return rec;
    }
    const CatalogEntry* ne = ni->second;
    const CatalogEntry* oe = oi->second;
    try {
        const InheritanceVerdict v = verify_normal_inheritance(ne->to_spec(), oe->to_spec(),
                                                               cfg.closure_cap, cfg.point_cap);
        rec["over_gcr"] = v.over_gcr;
        rec["normal_gcr"] = v.normal_gcr;
        rec["outcome"] = v.holds ? "pass" : "fail";
    } catch (const input_error& e) {
        rec["outcome"] = "skip:precondition";
        rec["detail"] = e.what();
    } catch (const verification_error& e) {
        rec["outcome"] = "disagreement";
        rec["detail"] = e.what();
    } catch (const cap_error& e) {
        rec["outcome"] = "skip:cap";
        rec["detail"] = e.what();
    }
    return rec;
}

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void classify(const std::string& outcome, json& bucket) {
    if (outcome == "pass")
        bucket["passes"] = bucket["passes"].get<uint64_t>() + 1;
    else if (outcome == "fail")
        bucket["failures"] = bucket["failures"].get<uint64_t>() + 1;
    else if (outcome == "disagreement")
        bucket["disagreements"] = bucket["disagreements"].get<uint64_t>() + 1;
    else
        bucket["skips"] = bucket["skips"].get<uint64_t>() + 1;
}

}  // namespace

json CampaignReport::full() const {
    return json{{"schema", 1},      {"header", header},   {"records", records},
                {"pair_records", pair_records}, {"summary", summary}, {"timings", timings}};
}

std::string CampaignReport::verdict_dump() const {
    return json{{"records", records}, {"pair_records", pair_records}, {"summary", summary}}
        .dump(2);
}

bool CampaignReport::clean() const {
    return summary.at("failures").get<uint64_t>() == 0 &&
           summary.at("disagreements").get<uint64_t>() == 0 &&
           summary.at("entry_errors").get<uint64_t>() == 0;
}

CampaignReport run_campaign(const Catalog& catalog, const CampaignConfig& config) {
    const auto t_start = clock_type::now();
    CampaignReport rep;
    rep.header = json{{"tool", "flagcr"},
                      {"schema", 1},
                      {"generated_at", iso_timestamp()},
                      {"seed", config.seed},
                      {"config",
                       json{{"closure_cap", config.closure_cap},
                            {"scan_cap", config.scan_cap},
                            {"point_cap", config.point_cap},
                            {"workers", config.workers},
                            {"cache", config.cache.enabled}}},
                      {"field_polynomials",
                       json{{"4", "t^2+t+1"}, {"8", "t^3+t+1"}, {"9", "t^2+1"}}}};

    // ambient contexts, one per (q, n)
    std::map<std::pair<int, int>, AmbientCtx> ambients;
    for (const CatalogEntry& e : catalog.entries) {
        const auto key = std::make_pair(e.q, e.n);
        if (ambients.count(key)) continue;
        AmbientCtx ctx;
        ctx.n = e.n;
        try {
            ctx.field = &Field::get(e.q);
            GroupClosure gl = enumerate_gl(*ctx.field, e.n, config.scan_cap);
            ctx.action.emplace(*ctx.field, e.n, std::move(gl), config.point_cap);
        } catch (const cap_error& err) {
            ctx.action_skip_reason = err.what();
        } catch (const input_error&) {
            // bad field order or dimension: the entry itself will error out
        }
        ambients.emplace(key, std::move(ctx));
    }

    // entries, optionally across workers
    std::vector<json> records(catalog.entries.size());
    std::vector<double> entry_ms(catalog.entries.size(), 0.0);
    std::vector<char> entry_cached(catalog.entries.size(), 0);
    std::atomic<size_t> cursor{0};
    std::mutex cache_mu;
    auto worker = [&] {
        while (true) {
            const size_t i = cursor.fetch_add(1);
            if (i >= catalog.entries.size()) break;
            const CatalogEntry& e = catalog.entries[i];
            const auto te = clock_type::now();
            std::string key;
            if (config.cache.enabled) {
                key = cache_key_for(e, config);
                std::optional<json> hit;
                {
                    std::lock_guard<std::mutex> lk(cache_mu);
                    hit = cache_load(config.cache, key);
                }
                if (hit && hit->is_object() && hit->contains("name") &&
                    (*hit)["name"] == e.name && hit->contains("checks")) {
                    records[i] = std::move(*hit);
                    entry_cached[i] = 1;
                    entry_ms[i] =
                        std::chrono::duration<double, std::milli>(clock_type::now() - te).count();
                    continue;
                }
            }
            const auto it = ambients.find(std::make_pair(e.q, e.n));
            records[i] = run_entry(e, it->second, config);
            if (config.cache.enabled) {
                std::lock_guard<std::mutex> lk(cache_mu);
                cache_store(config.cache, key, records[i]);
            }
            entry_ms[i] =
                std::chrono::duration<double, std::milli>(clock_type::now() - te).count();
        }
    };
    const int workers = std::max(1, config.workers);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // records sorted by name for deterministic output
    std::vector<size_t> order(records.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return records[a]["name"].get<std::string>() < records[b]["name"].get<std::string>();
    });
    rep.records = json::array();
    for (size_t i : order) rep.records.push_back(std::move(records[i]));

    // pairs, sequential
    std::map<std::string, const CatalogEntry*> by_name;
    for (const CatalogEntry& e : catalog.entries) by_name[e.name] = &e;
    rep.pair_records = json::array();
    for (const CatalogPair& p : catalog.pairs)
        rep.pair_records.push_back(run_pair(p, by_name, config));

    // summary
    json summary{{"entries", catalog.entries.size()},
                 {"pairs", catalog.pairs.size()},
                 {"checks_total", 0},
                 {"passes", uint64_t(0)},
                 {"failures", uint64_t(0)},
                 {"disagreements", uint64_t(0)},
                 {"skips", uint64_t(0)},
                 {"entry_errors", uint64_t(0)},
                 {"by_check", json::object()}};
    uint64_t total = 0;
    for (const json& r : rep.records) {
        if (!r["error"].get<std::string>().empty())
            summary["entry_errors"] = summary["entry_errors"].get<uint64_t>() + 1;
        for (const json& c : r["checks"]) {
            ++total;
            classify(c["outcome"].get<std::string>(), summary);
            json& bc = summary["by_check"][c["check"].get<std::string>()];
            if (bc.is_null())
                bc = json{{"passes", uint64_t(0)},
                          {"failures", uint64_t(0)},
                          {"disagreements", uint64_t(0)},
                          {"skips", uint64_t(0)}};
            classify(c["outcome"].get<std::string>(), bc);
        }
    }
    for (const json& pr : rep.pair_records) {
        ++total;
        classify(pr["outcome"].get<std::string>(), summary);
        json& bc = summary["by_check"]["normal-inheritance"];
        if (bc.is_null())
            bc = json{{"passes", uint64_t(0)},
                      {"failures", uint64_t(0)},
                      {"disagreements", uint64_t(0)},
                      {"skips", uint64_t(0)}};
        classify(pr["outcome"].get<std::string>(), bc);
    }
    summary["checks_total"] = total;
    // g-cr tallies over entries with agreeing verdicts
    uint64_t cr_count = 0, non_cr = 0, undetermined = 0;
    for (const json& r : rep.records) {
        if (r.contains("verdicts") && r["verdicts"].contains("g_cr")) {
            if (r["verdicts"]["g_cr"].get<bool>())
                ++cr_count;
            else
                ++non_cr;
        } else {
            ++undetermined;
        }
    }
    summary["gcr_counts"] =
        json{{"g_cr", cr_count}, {"not_g_cr", non_cr}, {"undetermined", undetermined}};
    rep.summary = std::move(summary);

    json timing_entries = json::object();
    for (size_t i = 0; i < catalog.entries.size(); ++i) {
        timing_entries[catalog.entries[i].name] =
            json{{"ms", entry_ms[i]}, {"cached", entry_cached[i] != 0}};
    }
    rep.timings = json{
        {"total_ms",
         std::chrono::duration<double, std::milli>(clock_type::now() - t_start).count()},
        {"entries", std::move(timing_entries)}};
    return rep;
}

}  // namespace flagcr
