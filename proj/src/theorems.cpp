#include "flagcr/theorems.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "flagcr/errors.hpp"

namespace flagcr {

namespace {

std::string flag_text(const Flag& fl) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < fl.members.size(); ++i) {
        if (i) os << " < ";
        os << "dim" << fl.members[i].dim();
    }
    os << ")";
    return os.str();
}

}  // namespace

CrVerdict x_cr(const SubComplex& y) {
    CrVerdict v;
    v.is_cr = true;
    for (const Flag& fl : y.flags()) {
        bool found = false;
        for (const Flag& cand : y.flags()) {
            if (are_opposite(fl, cand)) {
                v.witnesses.emplace_back(fl, cand);
                found = true;
                break;
            }
        }
        if (!found) {
            v.is_cr = false;
            v.failure = fl;
            v.witnesses.clear();
            break;
        }
    }
    return v;
}

ConvexityResult check_convex(const SubComplex& y, const SubspaceAction& action) {
    ConvexityResult res;
    if (y.empty()) return res;
    if (&y.field() != &action.field() || y.ambient() != action.n())
        throw input_error("complex does not live in the action's ambient space");
    // The full building is trivially convex: there is nothing outside it.
    if (uint64_t(y.size()) == action.full_flag_count()) return res;

    const auto& flags = y.flags();
    const size_t nf = flags.size();
    // member indices and pointwise-stabilizer bits per flag
    std::vector<std::vector<uint32_t>> fidx(nf);
    std::vector<ElementBits> fbits(nf);
    for (size_t i = 0; i < nf; ++i) {
        ElementBits bits = action.all_bits();
        for (const Subspace& w : flags[i].members) {
            const long long wi = action.space_index(w);
            if (wi < 0) throw input_error("flag member missing from the subspace enumeration");
            fidx[i].push_back(uint32_t(wi));
            bits &= action.stabilizer_bits(size_t(wi));
        }
        std::sort(fidx[i].begin(), fidx[i].end());
        fbits[i] = std::move(bits);
    }
    std::vector<std::vector<uint32_t>> sorted_fidx = fidx;
    std::sort(sorted_fidx.begin(), sorted_fidx.end());
    auto in_y = [&](const std::vector<uint32_t>& chain) {
        return std::binary_search(sorted_fidx.begin(), sorted_fidx.end(), chain);
    };

    // Chains over the fixed spaces of S, in canonical order; the first one
    // missing from Y is the counterexample.  Memoized per stabilizer.
    std::map<ElementBits, std::optional<std::vector<uint32_t>>> memo;
    auto first_missing = [&](const ElementBits& s) -> std::optional<std::vector<uint32_t>> {
        auto it = memo.find(s);
        if (it != memo.end()) return it->second;
        std::vector<uint32_t> nodes;
        for (uint32_t wi : action.fixed_space_indices(s)) {
            const Subspace& w = action.spaces()[wi];
            if (!w.is_zero() && !w.is_full()) nodes.push_back(wi);
        }
        // nodes are in canonical subspace order; DFS generates chains in
        // canonical flag order per starting node
        std::vector<std::vector<uint32_t>> succ(nodes.size());
        for (size_t a = 0; a < nodes.size(); ++a)
            for (size_t b = a + 1; b < nodes.size(); ++b) {
                const Subspace& wa = action.spaces()[nodes[a]];
                const Subspace& wb = action.spaces()[nodes[b]];
                if (wb.dim() > wa.dim() && wb.contains(wa)) succ[a].push_back(uint32_t(b));
            }
        std::optional<std::vector<uint32_t>> missing;
        std::vector<uint32_t> chain;
        auto dfs = [&](auto&& self, size_t at) -> bool {  // true = keep going
            chain.push_back(nodes[at]);
            if (!in_y(chain)) {
                missing = chain;
                chain.pop_back();
                return false;
            }
            for (uint32_t nx : succ[at])
                if (!self(self, nx)) { chain.pop_back(); return false; }
            chain.pop_back();
            return true;
        };
        for (size_t a = 0; a < nodes.size(); ++a)
            if (!dfs(dfs, a)) break;
        memo.emplace(s, missing);
        return missing;
    };

    for (size_t i = 0; i < nf && res.convex; ++i) {
        for (size_t j = i; j < nf; ++j) {
            ElementBits s = fbits[i];
            s &= fbits[j];
            const auto missing = first_missing(s);
            if (missing) {
                std::vector<Subspace> members;
                for (uint32_t wi : *missing) members.push_back(action.spaces()[wi]);
                res.convex = false;
                res.counterexample =
                    ConvexityResult::Counterexample{flags[i], flags[j], Flag::make(members)};
                break;
            }
        }
    }
    return res;
}

ConvexityResult check_convex(const SubComplex& y, const GroupClosure& ambient) {
    if (y.empty()) return ConvexityResult{};
    SubspaceAction action(y.field(), y.ambient(), ambient);
    return check_convex(y, action);
}

bool is_contractible(const SubComplex& y) {
    if (y.empty()) return false;  // convention: the empty complex is not contractible
    const bool verdict = !x_cr(y).is_cr;
    const HomologyReport rep = reduced_homology(y);
    if (verdict && !rep.acyclic())
        throw verification_error("dichotomy violation: no flag lacks an opposite is false, "
                                 "yet reduced homology is nontrivial");
    if (!verdict && rep.acyclic())
        throw verification_error("dichotomy violation: complex is cr but reduced homology vanishes");
    return verdict;
}

bool SubgroupAnalysis::homology_verdict() const {
    if (fixed_complex.empty()) return true;  // empty complex is not contractible
    return !homology->acyclic();
}

bool SubgroupAnalysis::verdicts_agree() const {
    const bool a = building_verdict();
    return a == homology_verdict() && a == lattice_verdict();
}

SubgroupAnalysis analyze_subgroup(const GroupSpec& spec, uint64_t closure_cap,
                                  uint64_t point_cap) {
    GroupClosure g = closure(spec, closure_cap);
    InvLattice lat = invariant_lattice(spec, point_cap);
    SubComplex y = fixed_point_subcomplex(lat);
    SubgroupAnalysis an(spec, std::move(g), std::move(lat), std::move(y));
    an.cr = x_cr(an.fixed_complex);
    if (!an.fixed_complex.empty()) an.homology = reduced_homology(an.fixed_complex);
    an.semisimple = lattice_semisimple(an.lattice);
    return an;
}

namespace {

[[noreturn]] void throw_disagreement(const SubgroupAnalysis& an) {
    std::ostringstream os;
    os << "complete-reducibility verdicts disagree for '" << an.spec.name << "': building="
       << (an.building_verdict() ? "cr" : "not-cr")
       << " homology=" << (an.homology_verdict() ? "cr" : "not-cr")
       << " lattice=" << (an.lattice_verdict() ? "cr" : "not-cr");
    throw verification_error(os.str());
}

}  // namespace

bool is_g_cr(const GroupSpec& spec, uint64_t closure_cap, uint64_t point_cap) {
    const SubgroupAnalysis an = analyze_subgroup(spec, closure_cap, point_cap);
    if (!an.verdicts_agree()) throw_disagreement(an);
    return an.building_verdict();
}

bool is_g_ir(const GroupSpec& spec, uint64_t closure_cap, uint64_t point_cap) {
    return invariant_lattice(spec, point_cap).nodes.size() == 2;
}

namespace {

// complex from fixed-space indices of a bitset, via the action
SubComplex complex_from_bits(const SubspaceAction& action, const ElementBits& bits) {
    std::vector<Subspace> proper;
    for (uint32_t wi : action.fixed_space_indices(bits)) {
        const Subspace& w = action.spaces()[wi];
        if (!w.is_zero() && !w.is_full()) proper.push_back(w);
    }
    return SubComplex::from_flags(action.field(), action.n(), all_chains(proper));
}

Flag first_maximal_flag(const SubComplex& y) {
    // maximal = member set not strictly contained in another flag's members
    const auto& flags = y.flags();
    std::vector<std::vector<std::string>> member_keys(flags.size());
    for (size_t i = 0; i < flags.size(); ++i) {
        for (const Subspace& w : flags[i].members) member_keys[i].push_back(w.key());
        std::sort(member_keys[i].begin(), member_keys[i].end());
    }
    for (size_t i = 0; i < flags.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < flags.size() && maximal; ++j) {
            if (i == j || member_keys[j].size() <= member_keys[i].size()) continue;
            if (std::includes(member_keys[j].begin(), member_keys[j].end(),
                              member_keys[i].begin(), member_keys[i].end()))
                maximal = false;
        }
        if (maximal) return flags[i];
    }
    throw verification_error("nonempty complex has no maximal flag");
}

}  // namespace

CentreReport find_centre(const GroupSpec& spec, const SubspaceAction* ambient,
                         uint64_t closure_cap, uint64_t scan_cap, uint64_t point_cap) {
    GroupClosure h = closure(spec, closure_cap);
    if (!h.complete) throw cap_error("closure cap exceeded while closing the subgroup");
    const InvLattice lat = invariant_lattice(spec, point_cap);
    SubComplex y = fixed_point_subcomplex(lat);
    if (y.empty() || x_cr(y).is_cr)
        throw input_error("Y is cr; no centre needed");

    std::optional<SubspaceAction> local;
    if (ambient == nullptr) {
        local.emplace(*spec.field, spec.n, enumerate_gl(*spec.field, spec.n, scan_cap), point_cap);
        ambient = &*local;
    }
    const SubspaceAction& act = *ambient;

    CentreReport rep{spec, y, GroupClosure{}, GroupClosure{}, SubComplex(*spec.field, spec.n),
                     Flag{}, false, false, false, false, false, false};

    // M: pointwise stabilizer of Y
    GroupClosure m = stabilizer_pointwise(y, act);
    const ElementBits mbits = act.bits_of(m);
    // H <= M by construction of Y; verify anyway
    rep.sandwich_ok = true;
    for (const Mat& e : h.elements)
        if (!m.contains(e)) { rep.sandwich_ok = false; break; }
    if (!rep.sandwich_ok)
        throw verification_error("subgroup does not sit inside the pointwise stabilizer of its "
                                 "fixed complex");

    // X^M must equal Y
    const SubComplex xm = complex_from_bits(act, mbits);
    rep.xm_equals_y = (xm == y);
    if (!rep.xm_equals_y)
        throw verification_error("fixed complex of the pointwise stabilizer differs from Y");

    // K = N(Y), with M <= K and M normal in K
    GroupClosure k = stabilizer_setwise(y, act);
    const ElementBits kbits = act.bits_of(k);
    for (const Mat& e : m.elements)
        if (!k.contains(e)) {
            rep.sandwich_ok = false;
            throw verification_error("pointwise stabilizer is not inside the setwise stabilizer");
        }
    rep.m_normal_in_k = is_normal_in(m, k);
    if (!rep.m_normal_in_k)
        throw verification_error("pointwise stabilizer is not normal in the setwise stabilizer");

    // X^K: nonempty, inside Y, and its flags are fixed by K
    SubComplex xk = complex_from_bits(act, kbits);
    rep.xk_nonempty = !xk.empty();
    if (!rep.xk_nonempty)
        throw verification_error("setwise stabilizer fixes no flag of Y");
    rep.xk_inside_y = true;
    for (const Flag& fl : xk.flags())
        if (!y.contains(fl)) { rep.xk_inside_y = false; break; }
    if (!rep.xk_inside_y)
        throw verification_error("fixed complex of the setwise stabilizer leaves Y");

    rep.centre = first_maximal_flag(xk);
    rep.k_fixes_centre = true;
    for (const Subspace& w : rep.centre.members) {
        const long long wi = act.space_index(w);
        if (!kbits.is_subset_of(act.stabilizer_bits(size_t(wi)))) {
            rep.k_fixes_centre = false;
            break;
        }
    }
    if (!rep.k_fixes_centre)
        throw verification_error("centre flag " + flag_text(rep.centre) +
                                 " is not fixed by the full setwise stabilizer");

    rep.pointwise = std::move(m);
    rep.setwise = std::move(k);
    rep.k_fixed = std::move(xk);
    return rep;
}

LoewyCentres loewy_centres(const GroupSpec& h, const GroupSpec& k, uint64_t closure_cap,
                           uint64_t point_cap) {
    if (h.field != k.field || h.n != k.n)
        throw input_error("subgroup and normalizer live in different ambient spaces");
    const InvLattice lat = invariant_lattice(h, point_cap);
    if (lattice_semisimple(lat))
        throw input_error("Loewy flags improper: the subgroup is semisimple");
    GroupClosure hc = closure(h, closure_cap);
    GroupClosure kc = closure(k, closure_cap);
    if (!hc.complete || !kc.complete)
        throw cap_error("closure cap exceeded while closing the subgroup or its normalizer");
    for (const Mat& e : hc.elements)
        if (!kc.contains(e))
            throw input_error("designated normalizer does not contain the subgroup");
    if (!is_normal_in(hc, kc))
        throw input_error("designated group does not normalize the subgroup");

    const auto soc = socle_series(lat);
    const auto rad = radical_series(lat);
    if (soc.size() != rad.size())
        throw verification_error("socle and radical series lengths differ");

    auto strip = [](std::vector<Subspace> series) {
        std::vector<Subspace> members;
        for (Subspace& w : series)
            if (!w.is_zero() && !w.is_full()) members.push_back(std::move(w));
        if (members.empty())
            throw verification_error("Loewy series has no proper terms");
        return Flag::make(std::move(members));
    };
    LoewyCentres out;
    out.socle_flag = strip(soc);
    // radical series descends; flags want ascending members
    std::vector<Subspace> rad_asc(rad.rbegin(), rad.rend());
    out.radical_flag = strip(std::move(rad_asc));

    out.k_stable = true;
    for (const Mat& g : k.generators) {
        for (const Subspace& w : out.socle_flag.members)
            if (image(g, w) != w) { out.k_stable = false; break; }
        for (const Subspace& w : out.radical_flag.members)
            if (image(g, w) != w) { out.k_stable = false; break; }
        if (!out.k_stable) break;
    }
    return out;
}

FixedPointVerdict check_fixed_point_form(const SubComplex& y, const SubspaceAction& action) {
    FixedPointVerdict out{false, stabilizer_pointwise(y, action), std::nullopt};
    const SubComplex xh = complex_from_bits(action, action.bits_of(out.pointwise));
    out.is_fixed_point_form = (xh == y);
    if (!out.is_fixed_point_form) {
        for (const Flag& fl : xh.flags())
            if (!y.contains(fl)) { out.counterexample = fl; break; }
        if (!out.counterexample)
            throw verification_error("complex differs from the fixed complex of its pointwise "
                                     "stabilizer, yet no flag is missing");
    }
    return out;
}

FixedPointVerdict check_fixed_point_form(const SubComplex& y, const GroupClosure& ambient) {
    SubspaceAction action(y.field(), y.ambient(), ambient);
    return check_fixed_point_form(y, action);
}

InheritanceVerdict verify_normal_inheritance(const GroupSpec& normal_sub, const GroupSpec& over,
                                             uint64_t closure_cap, uint64_t point_cap) {
    if (normal_sub.field != over.field || normal_sub.n != over.n)
        throw input_error("subgroup pair lives in different ambient spaces");
    GroupClosure nc = closure(normal_sub, closure_cap);
    GroupClosure oc = closure(over, closure_cap);
    if (!nc.complete || !oc.complete)
        throw cap_error("closure cap exceeded while closing the subgroup pair");
    for (const Mat& e : nc.elements)
        if (!oc.contains(e))
            throw input_error("designated normal subgroup is not contained in the group");
    if (!is_normal_in(nc, oc))
        throw input_error("designated subgroup is not normal");
    InheritanceVerdict v;
    v.over_gcr = is_g_cr(over, closure_cap, point_cap);
    v.normal_gcr = is_g_cr(normal_sub, closure_cap, point_cap);
    v.holds = !v.over_gcr || v.normal_gcr;
    return v;
}

UnipotentReport borel_tits_demo(const GroupSpec& u, const SubspaceAction* ambient,
                                uint64_t closure_cap, uint64_t scan_cap, uint64_t point_cap) {
    GroupClosure uc = closure(u, closure_cap);
    if (!uc.complete) throw cap_error("closure cap exceeded while closing the subgroup");
    if (uc.order == 1) throw input_error("trivial subgroup is not a unipotent demo candidate");
    for (const Mat& e : uc.elements)
        if (!is_unipotent(e))
            throw input_error("subgroup contains a non-unipotent element");

    std::optional<SubspaceAction> local;
    if (ambient == nullptr) {
        local.emplace(*u.field, u.n, enumerate_gl(*u.field, u.n, scan_cap), point_cap);
        ambient = &*local;
    }
    const SubspaceAction& act = *ambient;

    UnipotentReport rep{std::move(uc), true, false, GroupClosure{}, Flag{}, false};

    const SubgroupAnalysis an = analyze_subgroup(u, closure_cap, point_cap);
    if (!an.verdicts_agree()) throw_disagreement(an);
    rep.gcr = an.building_verdict();
    if (rep.gcr)
        throw verification_error("nontrivial unipotent subgroup reported completely reducible");
    rep.fixed_complex_contractible = is_contractible(an.fixed_complex);
    if (!rep.fixed_complex_contractible)
        throw verification_error("fixed complex of a unipotent subgroup is not contractible");

    // N(U) in the ambient group: conjugation moves generators into U
    std::vector<Mat> norm;
    const auto& elems = act.group().elements;
    for (size_t gi = 0; gi < elems.size(); ++gi) {
        const Mat& g = elems[gi];
        const Mat& gi_inv = elems[act.inverse_index(gi)];
        bool ok = true;
        for (const Mat& s : u.generators)
            if (!rep.unipotent.contains(g * s * gi_inv)) { ok = false; break; }
        if (ok) norm.push_back(g);
    }
    rep.normalizer = GroupClosure::from_elements(std::move(norm));

    const SubComplex xn = complex_from_bits(act, act.bits_of(rep.normalizer));
    if (xn.empty())
        throw verification_error("normalizer of a unipotent subgroup fixes no flag");
    rep.fixed_flag = first_maximal_flag(xn);
    // every flag fixed by N(U) lies in X^U: members are U-invariant since U <= N(U)
    for (const Flag& fl : xn.flags())
        if (!an.fixed_complex.contains(fl))
            throw verification_error("flag fixed by the normalizer escapes the fixed complex");

    const GroupClosure setwise = stabilizer_setwise(an.fixed_complex, act);
    rep.normalizer_inside_setwise = true;
    for (const Mat& e : rep.normalizer.elements)
        if (!setwise.contains(e)) { rep.normalizer_inside_setwise = false; break; }
    if (!rep.normalizer_inside_setwise)
        throw verification_error("normalizer of U does not normalize the fixed complex");
    return rep;
}

}  // namespace flagcr
