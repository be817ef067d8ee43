#pragma once

#include <string>
#include <vector>

#include "flagcr/subspace.hpp"

namespace flagcr {

// A flag: a strictly increasing chain of proper nonzero subspaces of F_q^n.
// Flags are the simplices of the flag complex; a flag with k members is a
// (k-1)-simplex.  type() lists the member dimensions in increasing order.
struct Flag {
    std::vector<Subspace> members;

    static Flag make(std::vector<Subspace> members);

    const Field& field() const { return members.front().field(); }
    int ambient() const { return members.front().ambient(); }
    size_t size() const { return members.size(); }

    std::vector<int> type() const;
    std::string key() const;

    bool operator==(const Flag& o) const;
    bool operator!=(const Flag& o) const { return !(*this == o); }
};

// Canonical order: type vector lexicographically, then members.
bool flag_less(const Flag& a, const Flag& b);

// All nonempty subchains, the flag itself included, in deterministic order.
std::vector<Flag> faces(const Flag& f);

// Two flags of the same length are opposite when member i of one is a vector
// space complement of member k-1-i of the other (opposition reverses types).
bool are_opposite(const Flag& a, const Flag& b);

}  // namespace flagcr
