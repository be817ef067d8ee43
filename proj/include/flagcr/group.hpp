#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "flagcr/matrix.hpp"

namespace flagcr {

inline constexpr uint64_t kClosureCap = 250000;
inline constexpr uint64_t kAmbientScanCap = uint64_t(1) << 24;

// A finitely generated matrix subgroup, given by its generators.
struct GroupSpec {
    const Field* field = nullptr;
    int n = 0;
    std::vector<Mat> generators;
    std::string name;

    // Validates: at least one generator, all square of size n, all invertible.
    static GroupSpec make(const Field& f, int n, std::vector<Mat> gens, std::string name = "");
};

// Explicit element list of a finite matrix group.  Elements are stored in a
// deterministic order: breadth-first from the identity for closures, ambient
// scan order for element filters.  `complete` is false when a closure hit
// its cap before stabilizing, in which case `elements` is a partial set.
class GroupClosure {
public:
    std::vector<Mat> elements;
    std::vector<Mat> generators;  // may be empty for filtered subgroups
    uint64_t order = 0;
    bool complete = false;

    bool contains(const Mat& m) const { return index_.count(m.key()) != 0; }
    // Position in `elements`, or -1.
    long long index_of(const Mat& m) const;

    static GroupClosure from_elements(std::vector<Mat> elems, std::vector<Mat> gens = {});

    void rebuild_index();

private:
    std::unordered_map<std::string, uint32_t> index_;
};

// Breadth-first closure of the generators, identity first.  Stops with
// complete=false once more than `cap` elements appear.
GroupClosure closure(const GroupSpec& spec, uint64_t cap = kClosureCap);

// Every invertible n x n matrix over f, in deterministic scan order.
// Throws cap_error("ambient group too large ...") when q^(n^2) > scan_cap.
GroupClosure enumerate_gl(const Field& f, int n, uint64_t scan_cap = kAmbientScanCap);

// True when `sub` is a normal subgroup of `over`.  Both closures must be
// complete and sub must be contained in over; otherwise input_error.
bool is_normal_in(const GroupClosure& sub, const GroupClosure& over);

// Greedy small generating set: walk the element list, keeping elements that
// enlarge the generated subgroup.  Requires a complete closure.
std::vector<Mat> small_generating_set(const GroupClosure& g);

}  // namespace flagcr
