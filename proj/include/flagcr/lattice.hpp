#pragma once

#include <optional>
#include <span>
#include <vector>

#include "flagcr/group.hpp"
#include "flagcr/subspace.hpp"

namespace flagcr {

// The lattice of subspaces of F_q^n invariant under every generator of a
// group (equivalently, under the whole group).  Nodes always include 0 and
// the full space and are kept in canonical subspace order; containment is
// precomputed.
struct InvLattice {
    const Field* field = nullptr;
    int n = 0;
    std::vector<Subspace> nodes;

    // leq(i, j) <=> nodes[i] is contained in nodes[j]
    bool leq(size_t i, size_t j) const { return leq_[i * nodes.size() + j]; }
    long long index_of(const Subspace& s) const;

    static InvLattice build(const Field& f, int n, std::vector<Subspace> nodes);

private:
    std::vector<char> leq_;
};

InvLattice invariant_lattice(const GroupSpec& spec, uint64_t point_cap = kSubspacePointCap);

// Same lattice computed from an explicit set of invertible matrices.
InvLattice invariant_lattice_of(const Field& f, int n, std::span<const Mat> mats,
                                uint64_t point_cap = kSubspacePointCap);

// First lattice node (canonical order) that complements w inside the
// lattice: trivial intersection and full sum.  w must be a node.
std::optional<Subspace> invariant_complement(const Subspace& w, const InvLattice& lat);

// True when every node has an invariant complement, i.e. the natural module
// restricted to the group is semisimple.
bool lattice_semisimple(const InvLattice& lat);

// Ascending socle series 0 = S_0 < S_1 < ... < S_m = V computed inside the
// lattice: S_{i+1} is the join of the minimal nodes strictly above S_i.
std::vector<Subspace> socle_series(const InvLattice& lat);

// Descending radical series V = R_0 > R_1 > ... > R_m = 0: R_{i+1} is the
// meet of the maximal nodes strictly below R_i.  Listed in descending order.
std::vector<Subspace> radical_series(const InvLattice& lat);

}  // namespace flagcr
