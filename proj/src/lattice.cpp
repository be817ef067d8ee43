#include "flagcr/lattice.hpp"

#include <algorithm>
#include <map>

#include "flagcr/errors.hpp"

namespace flagcr {

InvLattice InvLattice::build(const Field& f, int n, std::vector<Subspace> nodes) {
    InvLattice lat;
    lat.field = &f;
    lat.n = n;
    std::sort(nodes.begin(), nodes.end(), subspace_less);
    lat.nodes = std::move(nodes);
    const size_t m = lat.nodes.size();
    lat.leq_.assign(m * m, 0);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            lat.leq_[i * m + j] = lat.nodes[j].contains(lat.nodes[i]) ? 1 : 0;
    return lat;
}

long long InvLattice::index_of(const Subspace& s) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), s, subspace_less);
    if (it == nodes.end() || !(*it == s)) return -1;
    return it - nodes.begin();
}

InvLattice invariant_lattice_of(const Field& f, int n, std::span<const Mat> mats,
                                uint64_t point_cap) {
    std::vector<Subspace> nodes;
    for (const Subspace& w : enumerate_subspaces(f, n, point_cap)) {
        bool inv = true;
        for (const Mat& g : mats)
            if (image(g, w) != w) { inv = false; break; }
        if (inv) nodes.push_back(w);
    }
    return InvLattice::build(f, n, std::move(nodes));
}

InvLattice invariant_lattice(const GroupSpec& spec, uint64_t point_cap) {
    return invariant_lattice_of(*spec.field, spec.n, spec.generators, point_cap);
}

std::optional<Subspace> invariant_complement(const Subspace& w, const InvLattice& lat) {
    const long long wi = lat.index_of(w);
    if (wi < 0) throw input_error("subspace is not a lattice node");
    for (const Subspace& c : lat.nodes) {
        if (c.dim() != lat.n - w.dim()) continue;
        if (intersect(w, c).dim() == 0) return c;
    }
    return std::nullopt;
}

bool lattice_semisimple(const InvLattice& lat) {
    for (const Subspace& w : lat.nodes)
        if (!invariant_complement(w, lat).has_value()) return false;
    return true;
}

namespace {

size_t top_index(const InvLattice& lat) {
    // canonical order puts the full space last
    return lat.nodes.size() - 1;
}

}  // namespace

std::vector<Subspace> socle_series(const InvLattice& lat) {
    const size_t m = lat.nodes.size();
    std::vector<Subspace> series;
    size_t cur = 0;  // zero node is first in canonical order
    series.push_back(lat.nodes[cur]);
    while (cur != top_index(lat)) {
        // minimal nodes strictly above the current one
        std::vector<size_t> minimal;
        for (size_t j = 0; j < m; ++j) {
            if (j == cur || !lat.leq(cur, j)) continue;
            bool is_min = true;
            for (size_t u = 0; u < m; ++u) {
                if (u == cur || u == j) continue;
                if (lat.leq(cur, u) && lat.leq(u, j)) { is_min = false; break; }
            }
            if (is_min) minimal.push_back(j);
        }
        Subspace next = lat.nodes[cur];
        for (size_t j : minimal) next = sum(next, lat.nodes[j]);
        const long long ni = lat.index_of(next);
        if (ni < 0)
            throw verification_error("socle step left the invariant lattice");
        if (size_t(ni) == cur)
            throw verification_error("socle series failed to ascend");
        cur = size_t(ni);
        series.push_back(lat.nodes[cur]);
    }
    return series;
}

std::vector<Subspace> radical_series(const InvLattice& lat) {
    const size_t m = lat.nodes.size();
    std::vector<Subspace> series;
    size_t cur = top_index(lat);
    series.push_back(lat.nodes[cur]);
    while (cur != 0) {
        // maximal nodes strictly below the current one
        std::vector<size_t> maximal;
        for (size_t j = 0; j < m; ++j) {
            if (j == cur || !lat.leq(j, cur)) continue;
            bool is_max = true;
            for (size_t u = 0; u < m; ++u) {
                if (u == cur || u == j) continue;
                if (lat.leq(j, u) && lat.leq(u, cur)) { is_max = false; break; }
            }
            if (is_max) maximal.push_back(j);
        }
        Subspace next = lat.nodes[cur];
        for (size_t j : maximal) next = intersect(next, lat.nodes[j]);
        const long long ni = lat.index_of(next);
        if (ni < 0)
            throw verification_error("radical step left the invariant lattice");
        if (size_t(ni) == cur)
            throw verification_error("radical series failed to descend");
        cur = size_t(ni);
        series.push_back(lat.nodes[cur]);
    }
    return series;
}

}  // namespace flagcr
