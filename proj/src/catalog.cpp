#include "flagcr/catalog.hpp"

#include <fstream>
#include <map>
#include <random>
#include <set>

#include "flagcr/errors.hpp"
#include "flagcr/matrix.hpp"

namespace flagcr {

using nlohmann::json;

GroupSpec CatalogEntry::to_spec() const {
    const Field& f = Field::get(q);
    std::vector<Mat> gens;
    gens.reserve(generators.size());
    for (size_t i = 0; i < generators.size(); ++i) {
        try {
            Mat m = Mat::from_rows(f, generators[i]);
            if (m.n() != n)
                throw input_error("generator has size " + std::to_string(m.n()) +
                                  ", expected " + std::to_string(n));
            gens.push_back(std::move(m));
        } catch (const input_error& e) {
            throw input_error("entry '" + name + "': generator " + std::to_string(i) + ": " +
                              e.what());
        }
    }
    try {
        return GroupSpec::make(f, n, std::move(gens), name);
    } catch (const input_error& e) {
        throw input_error("entry '" + name + "': " + e.what());
    }
}

bool CatalogEntry::has_tag(const std::string& t) const {
    for (const auto& tag : tags)
        if (tag == t) return true;
    return false;
}

json CatalogEntry::to_json() const {
    json j;
    j["name"] = name;
    j["q"] = q;
    j["n"] = n;
    j["generators"] = generators;
    if (!tags.empty()) j["tags"] = tags;
    if (!expected.empty()) j["expected"] = expected;
    return j;
}

json Catalog::to_json() const {
    json j;
    j["entries"] = json::array();
    for (const auto& e : entries) j["entries"].push_back(e.to_json());
    j["pairs"] = json::array();
    for (const auto& p : pairs) j["pairs"].push_back({{"normal", p.normal}, {"over", p.over}});
    return j;
}

namespace {

CatalogEntry parse_entry(const json& je, size_t index, const std::string& origin) {
    const std::string where = origin + ": entry " + std::to_string(index);
    if (!je.is_object()) throw input_error(where + " is not an object");
    CatalogEntry e;
    try {
        e.name = je.at("name").get<std::string>();
    } catch (const json::exception&) {
        throw input_error(where + ": missing or invalid 'name'");
    }
    auto intfield = [&](const char* key) {
        try {
            return je.at(key).get<int>();
        } catch (const json::exception&) {
            throw input_error(where + " ('" + e.name + "'): missing or invalid '" + key + "'");
        }
    };
    e.q = intfield("q");
    e.n = intfield("n");
    try {
        e.generators = je.at("generators").get<std::vector<std::vector<std::vector<int>>>>();
    } catch (const json::exception&) {
        throw input_error(where + " ('" + e.name +
                          "'): 'generators' must be an array of integer matrices");
    }
    if (je.contains("tags")) {
        try {
            e.tags = je.at("tags").get<std::vector<std::string>>();
        } catch (const json::exception&) {
            throw input_error(where + " ('" + e.name + "'): 'tags' must be an array of strings");
        }
    }
    if (je.contains("expected")) {
        if (!je.at("expected").is_object())
            throw input_error(where + " ('" + e.name + "'): 'expected' must be an object");
        e.expected = je.at("expected");
    }
    return e;
}

}  // namespace

Catalog parse_catalog(const json& doc, const std::string& origin) {
    Catalog cat;
    const json* entries = nullptr;
    if (doc.is_array()) {
        entries = &doc;
    } else if (doc.is_object()) {
        if (!doc.contains("entries") || !doc.at("entries").is_array())
            throw input_error(origin + ": catalog object needs an 'entries' array");
        entries = &doc.at("entries");
        if (doc.contains("pairs")) {
            if (!doc.at("pairs").is_array())
                throw input_error(origin + ": 'pairs' must be an array");
            for (size_t i = 0; i < doc.at("pairs").size(); ++i) {
                const json& jp = doc.at("pairs")[i];
                try {
                    cat.pairs.push_back(CatalogPair{jp.at("normal").get<std::string>(),
                                                    jp.at("over").get<std::string>()});
                } catch (const json::exception&) {
                    throw input_error(origin + ": pair " + std::to_string(i) +
                                      " needs string fields 'normal' and 'over'");
                }
            }
        }
    } else {
        throw input_error(origin + ": catalog must be a JSON array or object");
    }
    std::set<std::string> names;
    for (size_t i = 0; i < entries->size(); ++i) {
        CatalogEntry e = parse_entry((*entries)[i], i, origin);
        if (!names.insert(e.name).second)
            throw input_error(origin + ": duplicate entry name '" + e.name + "'");
        cat.entries.push_back(std::move(e));
    }
    for (const auto& p : cat.pairs) {
        if (!names.count(p.normal) || !names.count(p.over))
            throw input_error(origin + ": pair (" + p.normal + ", " + p.over +
                              ") references an unknown entry");
    }
    return cat;
}

Catalog ingest_catalog(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open catalog file: " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw input_error("catalog file " + path.string() + " is not valid JSON: " + e.what());
    }
    return parse_catalog(doc, path.filename().string());
}

namespace {

std::string zero_pad(size_t v, int width) {
    std::string s = std::to_string(v);
    while (int(s.size()) < width) s.insert(s.begin(), '0');
    return s;
}

std::vector<std::vector<int>> rows_of(const Mat& m) { return m.to_rows(); }

// smallest generator of the multiplicative group, as an element code
uint8_t primitive_element(const Field& f) {
    for (int c = 1; c < f.q(); ++c) {
        uint8_t x = uint8_t(c);
        int ord = 1;
        while (x != 1) {
            x = f.mul(x, uint8_t(c));
            ++ord;
        }
        if (ord == f.q() - 1) return uint8_t(c);
    }
    return 1;  // F_2
}

Catalog named_standard(const Field& f, int n) {
    if (n < 2) throw input_error("named-standard catalog needs n >= 2");
    Catalog cat;
    const uint8_t w = primitive_element(f);
    auto add = [&](std::string name, std::vector<Mat> gens, std::vector<std::string> tags) {
        CatalogEntry e;
        e.name = std::move(name);
        e.q = f.q();
        e.n = n;
        for (const Mat& g : gens) e.generators.push_back(rows_of(g));
        e.tags = std::move(tags);
        cat.entries.push_back(std::move(e));
    };
    // scalars
    Mat scal = Mat::identity(f, n);
    for (int i = 0; i < n; ++i) scal.set(i, i, w);
    add("scalars", {scal}, {});
    // diagonal torus
    std::vector<Mat> diag;
    for (int i = 0; i < n; ++i) {
        Mat d = Mat::identity(f, n);
        d.set(i, i, w);
        diag.push_back(std::move(d));
    }
    add("diagonal", diag, {});
    // monomial: torus plus coordinate permutations
    std::vector<Mat> mono = diag;
    {
        Mat swap01(f, n);
        for (int i = 2; i < n; ++i) swap01.set(i, i, 1);
        swap01.set(0, 1, 1);
        swap01.set(1, 0, 1);
        mono.push_back(std::move(swap01));
        if (n > 2) {
            Mat cyc(f, n);
            for (int i = 0; i < n; ++i) cyc.set((i + 1) % n, i, 1);
            mono.push_back(std::move(cyc));
        }
    }
    add("monomial", mono, {});
    // borel: torus plus simple-root elementaries
    std::vector<Mat> borel = diag;
    for (int i = 0; i + 1 < n; ++i) {
        Mat el = Mat::identity(f, n);
        el.set(i, i + 1, 1);
        borel.push_back(std::move(el));
    }
    add("borel", borel, {});
    // full unipotent upper-triangular group
    std::vector<Mat> uni;
    for (int i = 0; i + 1 < n; ++i)
        for (int c = 1; c < f.q(); ++c) {
            Mat el = Mat::identity(f, n);
            el.set(i, i + 1, uint8_t(c));
            uni.push_back(std::move(el));
        }
    add("unipotent-full", uni, {"unipotent"});
    // single full Jordan block
    Mat jn = Mat::identity(f, n);
    for (int i = 0; i + 1 < n; ++i) jn.set(i, i + 1, 1);
    add("jordan-full", {jn}, {"unipotent"});
    if (n > 2) {
        Mat j2 = Mat::identity(f, n);
        j2.set(0, 1, 1);
        add("jordan-2", {j2}, {"unipotent"});
    }
    cat.pairs.push_back({"scalars", "diagonal"});
    cat.pairs.push_back({"scalars", "monomial"});
    cat.pairs.push_back({"diagonal", "monomial"});
    cat.pairs.push_back({"unipotent-full", "borel"});
    return cat;
}

Catalog all_cyclic(const Field& f, int n, uint64_t scan_cap) {
    Catalog cat;
    const GroupClosure gl = enumerate_gl(f, n, scan_cap);
    std::set<std::string> seen;  // canonical key: sorted element keys
    size_t index = 0;
    for (const Mat& g : gl.elements) {
        std::vector<std::string> elem_keys;
        Mat x = Mat::identity(f, n);
        do {
            elem_keys.push_back(x.key());
            x = x * g;
        } while (elem_keys.size() <= gl.order && x != Mat::identity(f, n));
        std::sort(elem_keys.begin(), elem_keys.end());
        std::string subgroup_key;
        for (const auto& k : elem_keys) subgroup_key += k;
        if (!seen.insert(std::move(subgroup_key)).second) continue;
        CatalogEntry e;
        e.name = "cyclic-" + zero_pad(index++, 4);
        e.q = f.q();
        e.n = n;
        e.generators.push_back(rows_of(g));
        e.tags.push_back("cyclic");
        if (is_unipotent(g) && elem_keys.size() > 1) e.tags.push_back("unipotent");
        cat.entries.push_back(std::move(e));
    }
    return cat;
}

Catalog random_k_generated(const Field& f, int n, uint64_t seed, size_t count, int k) {
    if (count == 0) throw input_error("random catalog needs a positive count");
    if (k <= 0) throw input_error("random catalog needs a positive generator count");
    Catalog cat;
    std::mt19937_64 rng(seed);
    for (size_t i = 0; i < count; ++i) {
        CatalogEntry e;
        e.name = "rand-" + zero_pad(i, 4);
        e.q = f.q();
        e.n = n;
        e.tags.push_back("random");
        for (int gi = 0; gi < k; ++gi) {
            // rejection-sample an invertible matrix
            while (true) {
                Mat m(f, n);
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c) m.set(r, c, uint8_t(rng() % uint64_t(f.q())));
                if (m.invertible()) {
                    e.generators.push_back(rows_of(m));
                    break;
                }
            }
        }
        cat.entries.push_back(std::move(e));
    }
    return cat;
}

}  // namespace

Catalog generate_catalog(const Field& f, int n, const std::string& mode, uint64_t seed,
                         size_t count, int k, uint64_t scan_cap) {
    if (n <= 0) throw input_error("ambient dimension must be positive");
    if (mode == "all-cyclic") return all_cyclic(f, n, scan_cap);
    if (mode == "random-k-generated") return random_k_generated(f, n, seed, count, k);
    if (mode == "named-standard") return named_standard(f, n);
    throw input_error("unknown catalog mode '" + mode +
                      "' (expected all-cyclic, random-k-generated or named-standard)");
}

}  // namespace flagcr
