#pragma once

#include <cstdint>
#include <map>
#include <unordered_set>
#include <vector>

#include "flagcr/flag.hpp"
#include "flagcr/lattice.hpp"

namespace flagcr {

// A finite simplicial complex whose simplices are flags in F_q^n.  Flags are
// kept in canonical order; lookups go through a key set.  The complexes this
// library builds (full buildings, fixed-point subcomplexes, apartments) are
// face-closed by construction, and is_face_closed() can verify it.
class SubComplex {
public:
    SubComplex(const Field& f, int n) : f_(&f), n_(n) {}
    static SubComplex from_flags(const Field& f, int n, std::vector<Flag> flags);

    const Field& field() const { return *f_; }
    int ambient() const { return n_; }

    const std::vector<Flag>& flags() const { return flags_; }
    bool empty() const { return flags_.empty(); }
    size_t size() const { return flags_.size(); }
    bool contains(const Flag& fl) const { return keys_.count(fl.key()) != 0; }

    bool is_face_closed() const;
    SubComplex face_closure() const;

    // Distinct subspaces appearing as flag members, canonical order.
    std::vector<Subspace> member_subspaces() const;
    std::map<std::vector<int>, size_t> type_counts() const;

    bool operator==(const SubComplex& o) const;

private:
    const Field* f_;
    int n_;
    std::vector<Flag> flags_;
    std::unordered_set<std::string> keys_;
};

// Every chain that can be formed from the given proper nonzero subspaces.
std::vector<Flag> all_chains(const std::vector<Subspace>& nodes);

// The flag complex of all proper nonzero subspaces of F_q^n: the order
// complex underlying the spherical building of GL_n(F_q).
SubComplex full_building(const Field& f, int n, uint64_t point_cap = kSubspacePointCap);

// Number of flags of the full building, without materializing it.
uint64_t full_building_size(const Field& f, int n, uint64_t point_cap = kSubspacePointCap);

// Flags all of whose members are nodes of the invariant lattice: the
// fixed-point subcomplex of the group the lattice belongs to.  Empty exactly
// when the lattice is {0, V}.
SubComplex fixed_point_subcomplex(const InvLattice& lat);

// Image complex {g.F : F in Y}.
SubComplex complex_image(const Mat& g, const SubComplex& y);

// A frame: n independent lines spanning the space.
struct Frame {
    std::vector<Subspace> lines;
    static Frame make(std::vector<Subspace> lines);
};

// The apartment spanned by a frame: flags of coordinate subspaces, i.e.
// sums of subsets of the frame's lines.
SubComplex apartment(const Frame& fr);

// Every frame in F_q^n, canonical order (lines sorted within each frame).
std::vector<Frame> enumerate_frames(const Field& f, int n);

// Chambers are the flags of full length n-1; panels are their codimension-1
// faces.  Returns the number of chambers adjacent to each panel, sorted
// ascending.  Empty when the complex has no chambers.
std::vector<size_t> panel_degrees(const SubComplex& y);

// Thick: every panel lies in at least three chambers.
bool is_thick(const SubComplex& y);

}  // namespace flagcr
