// flagcr: flag complexes, fixed-point subcomplexes and complete
// reducibility for subgroups of GL_n(F_q), with campaign-style verification.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "flagcr/campaign.hpp"
#include "flagcr/errors.hpp"
#include "flagcr/serialize.hpp"
#include "flagcr/theorems.hpp"

using nlohmann::json;
using namespace flagcr;

namespace {

struct Common {
    int q = 2;
    int n = 2;
    std::vector<std::string> gens;
    std::string gens_file;
    uint64_t cap_closure = kClosureCap;
    uint64_t cap_ambient = kAmbientScanCap;
    uint64_t seed = 0;
    int workers = 1;
    bool json_out = false;
    std::string out_file;
};

void add_common(CLI::App* cmd, Common& c, bool needs_ambient = true) {
    cmd->add_option("--q", c.q, "field order (2,3,4,5,7,8,9)")->required();
    cmd->add_option("--n", c.n, "ambient dimension")->required();
    cmd->add_option("--gens", c.gens,
                    "generator matrix, rows separated by ';', entries by ',' (repeatable)");
    cmd->add_option("--gens-file", c.gens_file, "JSON file with an array of generator matrices");
    cmd->add_option("--cap-closure", c.cap_closure, "max elements in a subgroup closure");
    if (needs_ambient)
        cmd->add_option("--cap-ambient", c.cap_ambient, "max matrices scanned for GL_n(F_q)");
    cmd->add_option("--seed", c.seed, "random seed");
    cmd->add_option("--workers", c.workers, "worker threads");
    cmd->add_flag("--json", c.json_out, "emit JSON instead of text");
    cmd->add_option("--out", c.out_file, "write output to this file instead of stdout");
}

std::vector<std::vector<int>> parse_matrix_text(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::stringstream body(text);
    std::string row;
    while (std::getline(body, row, ';')) {
        std::vector<int> r;
        std::stringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            try {
                size_t used = 0;
                const int v = std::stoi(cell, &used);
                while (used < cell.size() && std::isspace((unsigned char)cell[used])) ++used;
                if (used != cell.size()) throw std::invalid_argument(cell);
                r.push_back(v);
            } catch (const std::exception&) {
                throw input_error("cannot parse matrix entry '" + cell + "' in '" + text + "'");
            }
        }
        if (r.empty()) throw input_error("empty row in matrix '" + text + "'");
        rows.push_back(std::move(r));
    }
    if (rows.empty()) throw input_error("empty matrix spec");
    return rows;
}

std::vector<Mat> collect_generators(const Common& c) {
    const Field& f = Field::get(c.q);
    std::vector<Mat> gens;
    for (const std::string& g : c.gens) gens.push_back(Mat::from_rows(f, parse_matrix_text(g)));
    if (!c.gens_file.empty()) {
        std::ifstream in(c.gens_file);
        if (!in) throw input_error("cannot open generator file: " + c.gens_file);
        json doc;
        try {
            in >> doc;
        } catch (const json::exception& e) {
            throw input_error("generator file is not valid JSON: " + std::string(e.what()));
        }
        if (!doc.is_array()) throw input_error("generator file must hold a JSON array of matrices");
        for (const json& jm : doc) {
            try {
                gens.push_back(Mat::from_rows(f, jm.get<std::vector<std::vector<int>>>()));
            } catch (const json::exception&) {
                throw input_error("generator file entries must be integer matrices");
            }
        }
    }
    return gens;
}

GroupSpec require_spec(const Common& c, const char* cmd) {
    std::vector<Mat> gens = collect_generators(c);
    if (gens.empty())
        throw input_error(std::string(cmd) + " needs generators (--gens or --gens-file)");
    for (const Mat& g : gens)
        if (g.n() != c.n)
            throw input_error("generator size " + std::to_string(g.n()) +
                              " does not match --n " + std::to_string(c.n));
    return GroupSpec::make(Field::get(c.q), c.n, std::move(gens), "cli");
}

void emit(const Common& c, const json& j, const std::string& text) {
    std::string payload = c.json_out ? j.dump(2) + "\n" : text;
    if (!c.out_file.empty()) {
        std::ofstream out(c.out_file);
        if (!out) throw input_error("cannot write output file: " + c.out_file);
        out << payload;
        std::cout << "wrote " << c.out_file << "\n";
    } else {
        std::cout << payload;
    }
}

std::string flag_text(const Flag& fl) {
    std::ostringstream os;
    for (size_t i = 0; i < fl.members.size(); ++i) {
        if (i) os << " < ";
        os << "[";
        const Subspace& w = fl.members[i];
        for (int r = 0; r < w.dim(); ++r) {
            if (r) os << " ";
            for (int j = 0; j < w.ambient(); ++j) os << int(w.basis_at(r, j));
        }
        os << "]";
    }
    return os.str();
}

SubComplex vertices_complex(const Field& f, int n, const std::string& text) {
    std::vector<Flag> flags;
    std::stringstream body(text);
    std::string vec;
    while (std::getline(body, vec, '|')) {
        std::vector<int> entries;
        std::stringstream cells(vec);
        std::string cell;
        while (std::getline(cells, cell, ',')) entries.push_back(std::stoi(cell));
        Subspace line = Subspace::span(f, n, {entries});
        if (line.dim() != 1) throw input_error("vertex vector '" + vec + "' does not span a line");
        flags.push_back(Flag::make({std::move(line)}));
    }
    if (flags.empty()) throw input_error("no vertices given");
    return SubComplex::from_flags(f, n, std::move(flags));
}

// ---- subcommand bodies ----

int cmd_complex(const Common& c) {
    const Field& f = Field::get(c.q);
    std::vector<Mat> gens = collect_generators(c);
    SubComplex y(f, c.n);
    std::string label;
    if (gens.empty()) {
        y = full_building(f, c.n);
        label = "full building";
    } else {
        GroupSpec spec = GroupSpec::make(f, c.n, std::move(gens), "cli");
        y = fixed_point_subcomplex(invariant_lattice(spec));
        label = "fixed-point complex";
    }
    const auto degrees = panel_degrees(y);
    json j{{"ambient", {{"q", c.q}, {"n", c.n}}},
           {"kind", label},
           {"complex", complex_summary_json(y)},
           {"face_closed", y.is_face_closed()},
           {"thick", is_thick(y)}};
    j["panel_degrees"] = degrees;
    std::ostringstream os;
    os << label << " in GL_" << c.n << "(F_" << c.q << "): " << y.size() << " flags\n";
    for (const auto& [t, cnt] : y.type_counts())
        os << "  type (" << type_key(t) << "): " << cnt << "\n";
    if (!degrees.empty())
        os << "  panels: " << degrees.size() << ", degree min " << degrees.front() << " max "
           << degrees.back() << (is_thick(y) ? " (thick)" : "") << "\n";
    emit(c, j, os.str());
    return 0;
}

int cmd_crcheck(const Common& c) {
    const GroupSpec spec = require_spec(c, "crcheck");
    const SubgroupAnalysis an = analyze_subgroup(spec, c.cap_closure);
    json j{{"order", an.group.order},
           {"closure_complete", an.group.complete},
           {"lattice_nodes", an.lattice.nodes.size()},
           {"fixed_complex", complex_summary_json(an.fixed_complex)},
           {"building_cr", an.building_verdict()},
           {"homology_cr", an.homology_verdict()},
           {"lattice_cr", an.lattice_verdict()},
           {"agree", an.verdicts_agree()},
           {"g_ir", an.fixed_complex.empty()}};
    if (an.homology) j["homology"] = to_json(*an.homology);
    std::ostringstream os;
    os << "subgroup order " << an.group.order << (an.group.complete ? "" : " (cap hit)") << "\n"
       << "invariant lattice: " << an.lattice.nodes.size() << " nodes; fixed complex: "
       << an.fixed_complex.size() << " flags\n"
       << "verdicts: building=" << (an.building_verdict() ? "cr" : "not-cr")
       << " homology=" << (an.homology_verdict() ? "cr" : "not-cr")
       << " lattice=" << (an.lattice_verdict() ? "cr" : "not-cr") << "\n";
    if (!an.verdicts_agree()) {
        os << "DISAGREEMENT between the three verdicts\n";
        emit(c, j, os.str());
        return 1;
    }
    os << (an.building_verdict() ? "completely reducible" : "not completely reducible")
       << (an.fixed_complex.empty() ? " (irreducible)" : "") << "\n";
    emit(c, j, os.str());
    return 0;
}

int cmd_centre(const Common& c) {
    const GroupSpec spec = require_spec(c, "centre");
    const CentreReport rep = find_centre(spec, nullptr, c.cap_closure, c.cap_ambient);
    std::ostringstream os;
    os << "Y = X^H has " << rep.fixed_complex.size() << " flags; pointwise stabilizer order "
       << rep.pointwise.order << ", setwise order " << rep.setwise.order << "\n"
       << "X^K: " << rep.k_fixed.size() << " flags inside Y\n"
       << "centre flag (type " << type_key(rep.centre.type()) << "): " << flag_text(rep.centre)
       << "\n";
    emit(c, to_json(rep), os.str());
    return 0;
}

int cmd_homology(const Common& c) {
    const Field& f = Field::get(c.q);
    std::vector<Mat> gens = collect_generators(c);
    SubComplex y(f, c.n);
    if (gens.empty()) {
        y = full_building(f, c.n);
    } else {
        y = fixed_point_subcomplex(invariant_lattice(GroupSpec::make(f, c.n, std::move(gens))));
    }
    if (y.empty()) {
        emit(c, json{{"empty", true}}, "fixed complex is empty; no homology to report\n");
        return 0;
    }
    const HomologyReport rep = reduced_homology(y);
    std::ostringstream os;
    os << "complex with " << y.size() << " flags, euler characteristic "
       << rep.euler_characteristic << "\n";
    for (size_t d = 0; d < rep.reduced_betti.size(); ++d) {
        os << "  reduced betti_" << d << " = " << rep.reduced_betti[d];
        if (!rep.torsion[d].empty()) {
            os << "  torsion:";
            for (long long t : rep.torsion[d]) os << " Z/" << t;
        }
        os << "\n";
    }
    os << (rep.acyclic() ? "acyclic\n" : "not acyclic\n");
    json j = to_json(rep);
    j["flags"] = y.size();
    emit(c, j, os.str());
    return 0;
}

int cmd_convex(const Common& c, const std::string& vertices) {
    const Field& f = Field::get(c.q);
    SubComplex y(f, c.n);
    if (!vertices.empty()) {
        y = vertices_complex(f, c.n, vertices);
    } else {
        const GroupSpec spec = require_spec(c, "convex");
        y = fixed_point_subcomplex(invariant_lattice(spec));
    }
    const GroupClosure gl = enumerate_gl(f, c.n, c.cap_ambient);
    const SubspaceAction action(f, c.n, gl);
    const ConvexityResult res = check_convex(y, action);
    std::ostringstream os;
    os << "complex with " << y.size() << " flags: "
       << (res.convex ? "convex" : "NOT convex") << "\n";
    if (res.counterexample)
        os << "  witness pair " << flag_text(res.counterexample->a) << " , "
           << flag_text(res.counterexample->b) << " forces missing flag "
           << flag_text(res.counterexample->missing) << "\n";
    emit(c, to_json(res), os.str());
    return res.convex ? 0 : 1;
}

int cmd_loewy(const Common& c, const std::vector<std::string>& kgens) {
    const GroupSpec spec = require_spec(c, "loewy");
    const Field& f = Field::get(c.q);
    GroupSpec kspec = spec;
    if (!kgens.empty()) {
        std::vector<Mat> km;
        for (const std::string& g : kgens) km.push_back(Mat::from_rows(f, parse_matrix_text(g)));
        kspec = GroupSpec::make(f, c.n, std::move(km), "K");
    } else {
        // default K: the full normalizer of H in GL_n(F_q)
        const GroupClosure h = closure(spec, c.cap_closure);
        if (!h.complete) throw cap_error("closure cap exceeded while closing the subgroup");
        const GroupClosure gl = enumerate_gl(f, c.n, c.cap_ambient);
        std::vector<Mat> kept;
        for (const Mat& g : gl.elements) {
            const Mat gi = g.inverse();
            bool ok = true;
            for (const Mat& s : spec.generators)
                if (!h.contains(g * s * gi)) { ok = false; break; }
            if (ok) kept.push_back(g);
        }
        kspec = GroupSpec::make(f, c.n,
                                small_generating_set(GroupClosure::from_elements(std::move(kept))),
                                "N(H)");
    }
    const LoewyCentres lc = loewy_centres(spec, kspec, c.cap_closure);
    std::ostringstream os;
    os << "socle flag   (type " << type_key(lc.socle_flag.type()) << "): "
       << flag_text(lc.socle_flag) << "\n"
       << "radical flag (type " << type_key(lc.radical_flag.type()) << "): "
       << flag_text(lc.radical_flag) << "\n"
       << "stable under K generators: " << (lc.k_stable ? "yes" : "NO") << "\n";
    emit(c, to_json(lc), os.str());
    return lc.k_stable ? 0 : 1;
}

int cmd_fixedform(const Common& c, const std::string& vertices) {
    const Field& f = Field::get(c.q);
    SubComplex y(f, c.n);
    if (!vertices.empty()) {
        y = vertices_complex(f, c.n, vertices);
    } else {
        const GroupSpec spec = require_spec(c, "fixedform");
        y = fixed_point_subcomplex(invariant_lattice(spec));
    }
    const GroupClosure gl = enumerate_gl(f, c.n, c.cap_ambient);
    const SubspaceAction action(f, c.n, gl);
    const FixedPointVerdict v = check_fixed_point_form(y, action);
    std::ostringstream os;
    os << "complex with " << y.size() << " flags; pointwise stabilizer order "
       << v.pointwise.order << "\n"
       << (v.is_fixed_point_form ? "complex is the fixed complex of its pointwise stabilizer\n"
                                 : "complex is NOT of fixed-point form\n");
    if (v.counterexample)
        os << "  missing flag: " << flag_text(*v.counterexample) << "\n";
    emit(c, to_json(v), os.str());
    return 0;
}

int cmd_boreltits(const Common& c) {
    const GroupSpec spec = require_spec(c, "boreltits");
    const UnipotentReport rep = borel_tits_demo(spec, nullptr, c.cap_closure, c.cap_ambient);
    std::ostringstream os;
    os << "unipotent subgroup of order " << rep.unipotent.order << ": not completely reducible\n"
       << "fixed complex contractible: yes\n"
       << "normalizer order " << rep.normalizer.order << " fixes flag (type "
       << type_key(rep.fixed_flag.type()) << "): " << flag_text(rep.fixed_flag) << "\n"
       << "normalizer inside N(X^U): " << (rep.normalizer_inside_setwise ? "yes" : "NO") << "\n";
    emit(c, to_json(rep), os.str());
    return 0;
}

struct CampaignOpts {
    std::string catalog_file;
    std::string generate_mode;
    size_t count = 0;
    int k = 2;
    std::string emit_catalog;
    std::string cache_dir;
    double budget = 120.0;
};

int cmd_campaign(const Common& c, const CampaignOpts& opts) {
    Catalog cat;
    if (!opts.catalog_file.empty()) {
        cat = ingest_catalog(opts.catalog_file);
    } else if (!opts.generate_mode.empty()) {
        cat = generate_catalog(Field::get(c.q), c.n, opts.generate_mode, c.seed, opts.count,
                               opts.k, c.cap_ambient);
    } else {
        throw input_error("campaign needs --catalog FILE or --generate MODE");
    }
    if (!opts.emit_catalog.empty()) {
        std::ofstream out(opts.emit_catalog);
        if (!out) throw input_error("cannot write catalog file: " + opts.emit_catalog);
        out << cat.to_json().dump(2) << "\n";
    }
    CampaignConfig cfg;
    cfg.closure_cap = c.cap_closure;
    cfg.scan_cap = c.cap_ambient;
    cfg.seed = c.seed;
    cfg.workers = c.workers;
    cfg.entry_budget_seconds = opts.budget;
    if (!opts.cache_dir.empty()) {
        cfg.cache.enabled = true;
        cfg.cache.dir = opts.cache_dir;
    }
    const CampaignReport rep = run_campaign(cat, cfg);
    const json& s = rep.summary;
    std::ostringstream os;
    os << "campaign: " << s["entries"] << " entries, " << s["pairs"] << " pairs, "
       << s["checks_total"] << " checks\n"
       << "  passes " << s["passes"] << ", failures " << s["failures"] << ", disagreements "
       << s["disagreements"] << ", skips " << s["skips"] << ", entry errors "
       << s["entry_errors"] << "\n"
       << (rep.clean() ? "CLEAN" : "NOT CLEAN") << "\n";
    emit(c, rep.full(), os.str());
    return rep.clean() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flag complexes and complete reducibility over small finite fields"};
    app.require_subcommand(1);

    Common c_complex, c_crcheck, c_centre, c_homology, c_convex, c_loewy, c_fixedform,
        c_boreltits, c_campaign;
    std::string convex_vertices, fixedform_vertices;
    std::vector<std::string> loewy_kgens;
    CampaignOpts camp;

    CLI::App* s_complex = app.add_subcommand("complex", "flag complex or fixed-point subcomplex");
    add_common(s_complex, c_complex);
    CLI::App* s_crcheck = app.add_subcommand("crcheck", "three-way complete-reducibility verdict");
    add_common(s_crcheck, c_crcheck);
    CLI::App* s_centre = app.add_subcommand("centre", "centre flag of a contractible X^H");
    add_common(s_centre, c_centre);
    CLI::App* s_homology = app.add_subcommand("homology", "reduced integer homology");
    add_common(s_homology, c_homology);
    CLI::App* s_convex = app.add_subcommand("convex", "pairwise-stabilizer convexity check");
    add_common(s_convex, c_convex);
    s_convex->add_option("--vertices", convex_vertices,
                         "vertex complex: vectors separated by '|', entries by ','");
    CLI::App* s_loewy = app.add_subcommand("loewy", "socle and radical flags");
    add_common(s_loewy, c_loewy);
    s_loewy->add_option("--k-gens", loewy_kgens, "generators of the normalizing group K");
    CLI::App* s_fixedform = app.add_subcommand("fixedform", "fixed-point-form check");
    add_common(s_fixedform, c_fixedform);
    s_fixedform->add_option("--vertices", fixedform_vertices,
                            "vertex complex: vectors separated by '|', entries by ','");
    CLI::App* s_boreltits = app.add_subcommand("boreltits", "unipotent never-cr demo");
    add_common(s_boreltits, c_boreltits);
    CLI::App* s_campaign = app.add_subcommand("campaign", "run a verification campaign");
    add_common(s_campaign, c_campaign);
    s_campaign->add_option("--catalog", camp.catalog_file, "catalog JSON file");
    s_campaign->add_option("--generate", camp.generate_mode,
                           "generate a catalog: all-cyclic, random-k-generated, named-standard");
    s_campaign->add_option("--count", camp.count, "entry count for random catalogs");
    s_campaign->add_option("--k", camp.k, "generators per random entry");
    s_campaign->add_option("--emit-catalog", camp.emit_catalog, "also write the catalog here");
    s_campaign->add_option("--cache-dir", camp.cache_dir, "enable the artifact cache");
    s_campaign->add_option("--budget", camp.budget, "per-entry time budget in seconds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (s_complex->parsed()) return cmd_complex(c_complex);
        if (s_crcheck->parsed()) return cmd_crcheck(c_crcheck);
        if (s_centre->parsed()) return cmd_centre(c_centre);
        if (s_homology->parsed()) return cmd_homology(c_homology);
        if (s_convex->parsed()) return cmd_convex(c_convex, convex_vertices);
        if (s_loewy->parsed()) return cmd_loewy(c_loewy, loewy_kgens);
        if (s_fixedform->parsed()) return cmd_fixedform(c_fixedform, fixedform_vertices);
        if (s_boreltits->parsed()) return cmd_boreltits(c_boreltits);
        if (s_campaign->parsed()) return cmd_campaign(c_campaign, camp);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const cap_error& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 2;
    } catch (const verification_error& e) {
        std::cerr << "VERIFICATION FAILURE: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
