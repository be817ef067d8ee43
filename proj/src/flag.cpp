#include "flagcr/flag.hpp"

#include "flagcr/errors.hpp"

namespace flagcr {

Flag Flag::make(std::vector<Subspace> members) {
    if (members.empty()) throw input_error("a flag needs at least one member");
    const Field* f = &members.front().field();
    const int n = members.front().ambient();
    for (size_t i = 0; i < members.size(); ++i) {
        const Subspace& w = members[i];
        if (&w.field() != f || w.ambient() != n)
            throw input_error("flag members live in different ambient spaces");
        if (w.is_zero() || w.is_full())
            throw input_error("flag members must be proper nonzero subspaces");
        if (i > 0) {
            if (w.dim() <= members[i - 1].dim() || !w.contains(members[i - 1]))
                throw input_error("flag members must form a strictly increasing chain");
        }
    }
    Flag out;
    out.members = std::move(members);
    return out;
}

std::vector<int> Flag::type() const {
    std::vector<int> t;
    t.reserve(members.size());
    for (const Subspace& w : members) t.push_back(w.dim());
    return t;
}

std::string Flag::key() const {
    std::string k;
    for (const Subspace& w : members) k += w.key();
    return k;
}

bool Flag::operator==(const Flag& o) const {
    if (members.size() != o.members.size()) return false;
    for (size_t i = 0; i < members.size(); ++i)
        if (members[i] != o.members[i]) return false;
    return true;
}

bool flag_less(const Flag& a, const Flag& b) {
    const auto ta = a.type(), tb = b.type();
    if (ta != tb) return ta < tb;
    for (size_t i = 0; i < a.members.size(); ++i) {
        if (a.members[i] != b.members[i])
            return subspace_less(a.members[i], b.members[i]);
    }
    return false;
}

std::vector<Flag> faces(const Flag& f) {
    const size_t k = f.members.size();
    std::vector<Flag> out;
    out.reserve((size_t(1) << k) - 1);
    for (uint32_t mask = 1; mask < (uint32_t(1) << k); ++mask) {
        std::vector<Subspace> sub;
        for (size_t i = 0; i < k; ++i)
            if (mask & (uint32_t(1) << i)) sub.push_back(f.members[i]);
        out.push_back(Flag::make(std::move(sub)));
    }
    return out;
}

bool are_opposite(const Flag& a, const Flag& b) {
    if (&a.field() != &b.field() || a.ambient() != b.ambient())
        throw input_error("opposite test across different ambient spaces");
    // Opposition reverses types: member i of one flag must complement
    // member k-1-i of the other.
    if (a.members.size() != b.members.size()) return false;
    const int n = a.ambient();
    const size_t k = a.members.size();
    for (size_t i = 0; i < k; ++i) {
        const Subspace& u = a.members[i];
        const Subspace& w = b.members[k - 1 - i];
        if (u.dim() + w.dim() != n) return false;
        if (intersect(u, w).dim() != 0) return false;
    }
    return true;
}

}  // namespace flagcr
