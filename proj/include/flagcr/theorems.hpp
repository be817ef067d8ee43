#pragma once

#include <optional>

#include "flagcr/action.hpp"
#include "flagcr/complex.hpp"
#include "flagcr/homology.hpp"

namespace flagcr {

// ---- complete reducibility of a subcomplex ----

// Y is cr when every flag of Y has an opposite inside Y.  On success
// `witnesses` pairs each flag with the first opposite found (canonical
// order); on failure `failure` holds the first flag with no opposite.
// The empty complex is vacuously cr.
struct CrVerdict {
    bool is_cr = false;
    std::vector<std::pair<Flag, Flag>> witnesses;
    std::optional<Flag> failure;
};

CrVerdict x_cr(const SubComplex& y);

// ---- convexity ----

// Y is convex when for every pair of flags F, F' in Y, every flag fixed by
// the pointwise stabilizer of the pair also lies in Y.  The counterexample,
// when present, is the first violating triple in canonical order.
struct ConvexityResult {
    bool convex = true;
    struct Counterexample {
        Flag a, b, missing;
    };
    std::optional<Counterexample> counterexample;
};

ConvexityResult check_convex(const SubComplex& y, const SubspaceAction& action);
ConvexityResult check_convex(const SubComplex& y, const GroupClosure& ambient);

// ---- contractibility via the dichotomy ----

// For a convex subcomplex the verdict is "not cr"; the empty complex is not
// contractible by convention.  Integer homology acts as an independent
// oracle: a contractible complex must be acyclic, a noncontractible convex
// one must not be.  Disagreement throws verification_error.
bool is_contractible(const SubComplex& y);

// ---- complete reducibility of a subgroup ----

// All per-subgroup artifacts needed by the theorem-level checks, computed
// once: the closure, the invariant lattice, the fixed-point subcomplex and
// its cr/homology/semisimplicity verdicts.
struct SubgroupAnalysis {
    GroupSpec spec;
    GroupClosure group;
    InvLattice lattice;
    SubComplex fixed_complex;
    CrVerdict cr;
    std::optional<HomologyReport> homology;  // nullopt iff the complex is empty
    bool semisimple = false;

    SubgroupAnalysis(GroupSpec s, GroupClosure g, InvLattice l, SubComplex y)
        : spec(std::move(s)), group(std::move(g)), lattice(std::move(l)),
          fixed_complex(std::move(y)) {}

    // the three independent complete-reducibility verdicts
    bool building_verdict() const { return fixed_complex.empty() || cr.is_cr; }
    bool homology_verdict() const;   // "not contractible", via the oracle
    bool lattice_verdict() const { return semisimple; }
    bool verdicts_agree() const;
};

SubgroupAnalysis analyze_subgroup(const GroupSpec& spec, uint64_t closure_cap = kClosureCap,
                                  uint64_t point_cap = kSubspacePointCap);

// True when the subgroup is completely reducible.  Computes all three
// verdicts and throws verification_error if they do not agree.
bool is_g_cr(const GroupSpec& spec, uint64_t closure_cap = kClosureCap,
             uint64_t point_cap = kSubspacePointCap);

// True when the subgroup is irreducible: the fixed complex is empty.
bool is_g_ir(const GroupSpec& spec, uint64_t closure_cap = kClosureCap,
             uint64_t point_cap = kSubspacePointCap);

// ---- centre of a contractible fixed-point complex ----

// Constructive centre: for a non-cr subgroup H with contractible Y = X^H,
// the pointwise stabilizer M of Y and the setwise stabilizer K = N(Y)
// satisfy X^M = Y, M normal in K, and X^K a nonempty subcomplex of Y whose
// flags are fixed by all of K.  The centre is the first maximal flag of X^K
// in canonical order.  Violation of any step throws verification_error.
struct CentreReport {
    GroupSpec subgroup;
    SubComplex fixed_complex;   // Y = X^H
    GroupClosure pointwise;     // M
    GroupClosure setwise;       // K = N(Y)
    SubComplex k_fixed;         // X^K
    Flag centre;
    bool sandwich_ok = false;       // H <= M <= K
    bool xm_equals_y = false;       // X^M = X^H
    bool m_normal_in_k = false;
    bool xk_nonempty = false;
    bool xk_inside_y = false;
    bool k_fixes_centre = false;
};

CentreReport find_centre(const GroupSpec& spec, const SubspaceAction* ambient = nullptr,
                         uint64_t closure_cap = kClosureCap,
                         uint64_t scan_cap = kAmbientScanCap,
                         uint64_t point_cap = kSubspacePointCap);

// ---- Loewy-series centres ----

// For a non-semisimple H normalized by K, the socle and radical series of
// the invariant lattice give proper nonzero flags stable under K.
struct LoewyCentres {
    Flag socle_flag;
    Flag radical_flag;
    bool k_stable = false;  // every generator of K fixes every member
};

LoewyCentres loewy_centres(const GroupSpec& h, const GroupSpec& k,
                           uint64_t closure_cap = kClosureCap,
                           uint64_t point_cap = kSubspacePointCap);

// ---- fixed-point-form characterization ----

// A convex subcomplex Y equals X^H for H its own pointwise stabilizer, or it
// is not of fixed-point form at all; the counterexample is the first flag of
// X^H missing from Y.
struct FixedPointVerdict {
    bool is_fixed_point_form = false;
    GroupClosure pointwise;
    std::optional<Flag> counterexample;
};

FixedPointVerdict check_fixed_point_form(const SubComplex& y, const SubspaceAction& action);
FixedPointVerdict check_fixed_point_form(const SubComplex& y, const GroupClosure& ambient);

// ---- inheritance of complete reducibility by normal subgroups ----

struct InheritanceVerdict {
    bool over_gcr = false;
    bool normal_gcr = false;
    bool holds = true;  // false would falsify the implementation
};

// Requires closure(normal_sub) to be a normal subgroup of closure(over).
InheritanceVerdict verify_normal_inheritance(const GroupSpec& normal_sub, const GroupSpec& over,
                                             uint64_t closure_cap = kClosureCap,
                                             uint64_t point_cap = kSubspacePointCap);

// ---- unipotent subgroups are never cr ----

// For a nontrivial unipotent U: U is not cr, X^U is contractible, and the
// full normalizer N(U) in GL_n fixes a flag of X^U (the centre machinery
// applied to the normalizer).  Also records N(U) <= N(X^U).
struct UnipotentReport {
    GroupClosure unipotent;
    bool gcr = true;                     // asserted false
    bool fixed_complex_contractible = false;  // asserted true
    GroupClosure normalizer;             // N(U) in the ambient group
    Flag fixed_flag;                     // fixed by all of N(U)
    bool normalizer_inside_setwise = false;
};

UnipotentReport borel_tits_demo(const GroupSpec& u, const SubspaceAction* ambient = nullptr,
                                uint64_t closure_cap = kClosureCap,
                                uint64_t scan_cap = kAmbientScanCap,
                                uint64_t point_cap = kSubspacePointCap);

}  // namespace flagcr
