#include "flagcr/action.hpp"

#include <algorithm>

#include "flagcr/errors.hpp"

namespace flagcr {

SubspaceAction::SubspaceAction(const Field& f, int n, GroupClosure group, uint64_t point_cap)
    : f_(&f), n_(n), group_(std::move(group)) {
    if (!group_.complete)
        throw input_error("subspace action requires a complete group closure");
    spaces_ = enumerate_subspaces(f, n, point_cap);
    space_index_.reserve(spaces_.size() * 2);
    for (size_t i = 0; i < spaces_.size(); ++i) space_index_.emplace(spaces_[i].key(), uint32_t(i));

    const size_t ng = group_.elements.size();
    const size_t ns = spaces_.size();
    img_.assign(ng * ns, 0);
    stab_.assign(ns, ElementBits(ng));
    for (size_t gi = 0; gi < ng; ++gi) {
        const Mat& g = group_.elements[gi];
        for (size_t wi = 0; wi < ns; ++wi) {
            const Subspace im = image(g, spaces_[wi]);
            const auto it = space_index_.find(im.key());
            if (it == space_index_.end())
                throw verification_error("image of a subspace escaped the enumeration");
            img_[gi * ns + wi] = it->second;
            if (it->second == wi) stab_[wi].set(gi);
        }
    }
    inv_.assign(ng, 0);
    for (size_t gi = 0; gi < ng; ++gi) {
        const long long ii = group_.index_of(group_.elements[gi].inverse());
        if (ii < 0) throw verification_error("group closure is not inverse-closed");
        inv_[gi] = size_t(ii);
    }
    // chain count over proper nonzero spaces, reused for full-building tests
    std::vector<uint64_t> ending(ns, 0);
    for (size_t j = 0; j < ns; ++j) {
        if (spaces_[j].is_zero() || spaces_[j].is_full()) continue;
        ending[j] = 1;
        for (size_t i = 0; i < j; ++i) {
            if (ending[i] == 0) continue;
            if (spaces_[j].dim() > spaces_[i].dim() && spaces_[j].contains(spaces_[i]))
                ending[j] += ending[i];
        }
    }
    for (uint64_t e : ending) full_flag_count_ += e;
}

long long SubspaceAction::space_index(const Subspace& w) const {
    auto it = space_index_.find(w.key());
    return it == space_index_.end() ? -1 : (long long)it->second;
}

GroupClosure SubspaceAction::subgroup_from_bits(const ElementBits& bits) const {
    std::vector<Mat> elems;
    elems.reserve(bits.count());
    for (size_t i = bits.find_first(); i != ElementBits::npos; i = bits.find_next(i))
        elems.push_back(group_.elements[i]);
    return GroupClosure::from_elements(std::move(elems));
}

ElementBits SubspaceAction::bits_of(const GroupClosure& sub) const {
    ElementBits bits(group_.elements.size());
    for (const Mat& m : sub.elements) {
        const long long i = group_.index_of(m);
        if (i < 0) throw input_error("subgroup element missing from the ambient group");
        bits.set(size_t(i));
    }
    return bits;
}

ElementBits SubspaceAction::all_bits() const {
    ElementBits bits(group_.elements.size());
    bits.set();
    return bits;
}

std::vector<uint32_t> SubspaceAction::fixed_space_indices(const ElementBits& bits) const {
    std::vector<uint32_t> out;
    for (size_t wi = 0; wi < spaces_.size(); ++wi)
        if (bits.is_subset_of(stab_[wi])) out.push_back(uint32_t(wi));
    return out;
}

namespace {

void check_ambient(const SubComplex& y, const Field& f, int n) {
    if (&y.field() != &f || y.ambient() != n)
        throw input_error("complex does not live in the action's ambient space");
}

}  // namespace

GroupClosure stabilizer_pointwise(const SubComplex& y, const SubspaceAction& action) {
    check_ambient(y, action.field(), action.n());
    ElementBits bits = action.all_bits();
    for (const Subspace& w : y.member_subspaces()) {
        const long long wi = action.space_index(w);
        if (wi < 0) throw input_error("complex member missing from the subspace enumeration");
        bits &= action.stabilizer_bits(size_t(wi));
    }
    return action.subgroup_from_bits(bits);
}

GroupClosure stabilizer_pointwise(const SubComplex& y, const GroupClosure& ambient) {
    if (!ambient.complete) throw input_error("stabilizer filter requires a complete closure");
    const auto members = y.member_subspaces();
    std::vector<Mat> kept;
    for (const Mat& g : ambient.elements) {
        bool fixes = true;
        for (const Subspace& w : members)
            if (image(g, w) != w) { fixes = false; break; }
        if (fixes) kept.push_back(g);
    }
    return GroupClosure::from_elements(std::move(kept));
}

GroupClosure stabilizer_setwise(const SubComplex& y, const SubspaceAction& action) {
    check_ambient(y, action.field(), action.n());
    const auto members = y.member_subspaces();
    std::vector<uint32_t> midx;
    midx.reserve(members.size());
    for (const Subspace& w : members) {
        const long long wi = action.space_index(w);
        if (wi < 0) throw input_error("complex member missing from the subspace enumeration");
        midx.push_back(uint32_t(wi));
    }
    std::vector<char> is_member(action.spaces().size(), 0);
    for (uint32_t wi : midx) is_member[wi] = 1;
    // flag set as sorted member-index vectors for the exact check
    auto flag_indices = [&](const Flag& fl) {
        std::vector<uint32_t> v;
        v.reserve(fl.members.size());
        for (const Subspace& w : fl.members) v.push_back(uint32_t(action.space_index(w)));
        return v;
    };
    std::vector<std::vector<uint32_t>> flag_keys;
    flag_keys.reserve(y.size());
    for (const Flag& fl : y.flags()) flag_keys.push_back(flag_indices(fl));
    std::sort(flag_keys.begin(), flag_keys.end());
    std::vector<Mat> kept;
    const size_t ng = action.group().elements.size();
    for (size_t gi = 0; gi < ng; ++gi) {
        bool permutes = true;
        for (uint32_t wi : midx)
            if (!is_member[action.image_index(gi, wi)]) { permutes = false; break; }
        if (!permutes) continue;
        bool maps_flags = true;
        for (const auto& fk : flag_keys) {
            std::vector<uint32_t> mapped;
            mapped.reserve(fk.size());
            for (uint32_t wi : fk) mapped.push_back(action.image_index(gi, wi));
            // dimensions are preserved, so the chain order survives mapping
            if (!std::binary_search(flag_keys.begin(), flag_keys.end(), mapped)) {
                maps_flags = false;
                break;
            }
        }
        if (maps_flags) kept.push_back(action.group().elements[gi]);
    }
    return GroupClosure::from_elements(std::move(kept));
}

GroupClosure stabilizer_setwise(const SubComplex& y, const GroupClosure& ambient) {
    if (!ambient.complete) throw input_error("stabilizer filter requires a complete closure");
    std::vector<std::string> flag_keys;
    flag_keys.reserve(y.size());
    for (const Flag& fl : y.flags()) flag_keys.push_back(fl.key());
    std::sort(flag_keys.begin(), flag_keys.end());
    std::vector<Mat> kept;
    for (const Mat& g : ambient.elements) {
        bool maps_flags = true;
        for (const Flag& fl : y.flags()) {
            std::vector<Subspace> members;
            members.reserve(fl.members.size());
            for (const Subspace& w : fl.members) members.push_back(image(g, w));
            if (!std::binary_search(flag_keys.begin(), flag_keys.end(),
                                    Flag::make(std::move(members)).key())) {
                maps_flags = false;
                break;
            }
        }
        if (maps_flags) kept.push_back(g);
    }
    return GroupClosure::from_elements(std::move(kept));
}

}  // namespace flagcr
