#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "flagcr/complex.hpp"
#include "flagcr/group.hpp"

namespace flagcr {

using ElementBits = boost::dynamic_bitset<uint64_t>;

// Precomputed action of a complete matrix group on every subspace of its
// ambient space.  This is the workhorse behind stabilizer filters, convexity
// checks and the centre construction: one pass fills an |G| x |spaces|
// image-index table, per-subspace stabilizer bitsets over the element list,
// and the inverse permutation of the element list.
class SubspaceAction {
public:
    SubspaceAction(const Field& f, int n, GroupClosure group,
                   uint64_t point_cap = kSubspacePointCap);

    const Field& field() const { return *f_; }
    int n() const { return n_; }
    const GroupClosure& group() const { return group_; }
    const std::vector<Subspace>& spaces() const { return spaces_; }

    long long space_index(const Subspace& w) const;
    uint32_t image_index(size_t g, size_t w) const { return img_[g * spaces_.size() + w]; }
    size_t inverse_index(size_t g) const { return inv_[g]; }
    const ElementBits& stabilizer_bits(size_t w) const { return stab_[w]; }

    // Elements flagged in `bits`, as a complete closure (ambient order).
    GroupClosure subgroup_from_bits(const ElementBits& bits) const;
    ElementBits bits_of(const GroupClosure& sub) const;
    ElementBits all_bits() const;

    // Space indices fixed by every flagged element (the invariant lattice of
    // the flagged subset, as indices including 0 and V).
    std::vector<uint32_t> fixed_space_indices(const ElementBits& bits) const;

    // Total flag count of the full building on this ambient space.
    uint64_t full_flag_count() const { return full_flag_count_; }

private:
    const Field* f_;
    int n_;
    GroupClosure group_;
    std::vector<Subspace> spaces_;
    std::unordered_map<std::string, uint32_t> space_index_;
    std::vector<uint32_t> img_;
    std::vector<uint32_t> inv_;
    std::vector<ElementBits> stab_;
    uint64_t full_flag_count_ = 0;
};

// Pointwise stabilizer of a complex: elements fixing every member subspace
// of every flag.  For the empty complex this is the whole ambient group.
GroupClosure stabilizer_pointwise(const SubComplex& y, const GroupClosure& ambient);
GroupClosure stabilizer_pointwise(const SubComplex& y, const SubspaceAction& action);

// Setwise stabilizer N(Y): elements g with g.Y = Y as a set of flags.
GroupClosure stabilizer_setwise(const SubComplex& y, const GroupClosure& ambient);
GroupClosure stabilizer_setwise(const SubComplex& y, const SubspaceAction& action);

}  // namespace flagcr
