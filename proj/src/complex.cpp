#include "flagcr/complex.hpp"

#include <algorithm>

#include "flagcr/errors.hpp"

namespace flagcr {

SubComplex SubComplex::from_flags(const Field& f, int n, std::vector<Flag> flags) {
    SubComplex y(f, n);
    std::sort(flags.begin(), flags.end(), flag_less);
    for (Flag& fl : flags) {
        if (&fl.field() != &f || fl.ambient() != n)
            throw input_error("flag does not live in the complex's ambient space");
        std::string k = fl.key();
        if (y.keys_.insert(std::move(k)).second) y.flags_.push_back(std::move(fl));
    }
    return y;
}

bool SubComplex::is_face_closed() const {
    for (const Flag& fl : flags_)
        for (const Flag& face : faces(fl))
            if (!contains(face)) return false;
    return true;
}

SubComplex SubComplex::face_closure() const {
    std::vector<Flag> all;
    for (const Flag& fl : flags_)
        for (Flag& face : faces(fl)) all.push_back(std::move(face));
    return from_flags(*f_, n_, std::move(all));
}

std::vector<Subspace> SubComplex::member_subspaces() const {
    std::vector<Subspace> out;
    std::unordered_set<std::string> seen;
    for (const Flag& fl : flags_)
        for (const Subspace& w : fl.members)
            if (seen.insert(w.key()).second) out.push_back(w);
    std::sort(out.begin(), out.end(), subspace_less);
    return out;
}

std::map<std::vector<int>, size_t> SubComplex::type_counts() const {
    std::map<std::vector<int>, size_t> counts;
    for (const Flag& fl : flags_) ++counts[fl.type()];
    return counts;
}

bool SubComplex::operator==(const SubComplex& o) const {
    if (f_ != o.f_ || n_ != o.n_ || flags_.size() != o.flags_.size()) return false;
    for (size_t i = 0; i < flags_.size(); ++i)
        if (flags_[i] != o.flags_[i]) return false;
    return true;
}

std::vector<Flag> all_chains(const std::vector<Subspace>& nodes) {
    std::vector<Subspace> sorted = nodes;
    std::sort(sorted.begin(), sorted.end(), subspace_less);
    const size_t m = sorted.size();
    // successor[i]: nodes strictly containing node i (candidates for chain
    // extension; canonical order keeps dimensions ascending)
    std::vector<std::vector<uint32_t>> succ(m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (sorted[j].dim() > sorted[i].dim() && sorted[j].contains(sorted[i]))
                succ[i].push_back(uint32_t(j));
    std::vector<Flag> out;
    std::vector<Subspace> chain;
    auto dfs = [&](auto&& self, size_t at) -> void {
        chain.push_back(sorted[at]);
        out.push_back(Flag::make(chain));
        for (uint32_t nx : succ[at]) self(self, nx);
        chain.pop_back();
    };
    for (size_t i = 0; i < m; ++i) dfs(dfs, i);
    return out;
}

SubComplex full_building(const Field& f, int n, uint64_t point_cap) {
    std::vector<Subspace> proper;
    for (const Subspace& w : enumerate_subspaces(f, n, point_cap))
        if (!w.is_zero() && !w.is_full()) proper.push_back(w);
    return SubComplex::from_flags(f, n, all_chains(proper));
}

uint64_t full_building_size(const Field& f, int n, uint64_t point_cap) {
    std::vector<Subspace> proper;
    for (const Subspace& w : enumerate_subspaces(f, n, point_cap))
        if (!w.is_zero() && !w.is_full()) proper.push_back(w);
    // chains ending at node i, over nodes in canonical (dimension) order
    const size_t m = proper.size();
    std::vector<uint64_t> ending(m, 1);
    for (size_t j = 0; j < m; ++j)
        for (size_t i = 0; i < j; ++i)
            if (proper[j].dim() > proper[i].dim() && proper[j].contains(proper[i]))
                ending[j] += ending[i];
    uint64_t total = 0;
    for (uint64_t e : ending) total += e;
    return total;
}

SubComplex fixed_point_subcomplex(const InvLattice& lat) {
    std::vector<Subspace> proper;
    for (const Subspace& w : lat.nodes)
        if (!w.is_zero() && !w.is_full()) proper.push_back(w);
    return SubComplex::from_flags(*lat.field, lat.n, all_chains(proper));
}

SubComplex complex_image(const Mat& g, const SubComplex& y) {
    std::vector<Flag> mapped;
    mapped.reserve(y.size());
    for (const Flag& fl : y.flags()) {
        std::vector<Subspace> members;
        members.reserve(fl.members.size());
        for (const Subspace& w : fl.members) members.push_back(image(g, w));
        mapped.push_back(Flag::make(std::move(members)));
    }
    return SubComplex::from_flags(y.field(), y.ambient(), std::move(mapped));
}

Frame Frame::make(std::vector<Subspace> lines) {
    if (lines.empty()) throw input_error("invalid frame: no lines");
    const Field& f = lines.front().field();
    const int n = lines.front().ambient();
    if (int(lines.size()) != n)
        throw input_error("invalid frame: expected " + std::to_string(n) + " lines");
    Subspace join = Subspace::zero(f, n);
    for (const Subspace& l : lines) {
        if (&l.field() != &f || l.ambient() != n || l.dim() != 1)
            throw input_error("invalid frame: members must be lines of one ambient space");
        join = sum(join, l);
    }
    if (join.dim() != n) throw input_error("invalid frame: lines do not span");
    std::sort(lines.begin(), lines.end(), subspace_less);
    Frame fr;
    fr.lines = std::move(lines);
    return fr;
}

SubComplex apartment(const Frame& fr) {
    const Field& f = fr.lines.front().field();
    const int n = fr.lines.front().ambient();
    std::vector<Subspace> coords;
    for (uint32_t mask = 1; mask + 1 < (uint32_t(1) << n); ++mask) {
        Subspace w = Subspace::zero(f, n);
        for (int i = 0; i < n; ++i)
            if (mask & (uint32_t(1) << i)) w = sum(w, fr.lines[i]);
        coords.push_back(std::move(w));
    }
    return SubComplex::from_flags(f, n, all_chains(coords));
}

std::vector<Frame> enumerate_frames(const Field& f, int n) {
    std::vector<Subspace> lines;
    for (const Subspace& w : enumerate_subspaces(f, n))
        if (w.dim() == 1) lines.push_back(w);
    std::vector<Frame> out;
    std::vector<Subspace> picked;
    auto rec = [&](auto&& self, size_t start, const Subspace& join) -> void {
        if (int(picked.size()) == n) {
            out.push_back(Frame::make(picked));
            return;
        }
        for (size_t i = start; i < lines.size(); ++i) {
            Subspace next = sum(join, lines[i]);
            if (next.dim() != int(picked.size()) + 1) continue;  // dependent line
            picked.push_back(lines[i]);
            self(self, i + 1, next);
            picked.pop_back();
        }
    };
    rec(rec, 0, Subspace::zero(f, n));
    return out;
}

std::vector<size_t> panel_degrees(const SubComplex& y) {
    const int n = y.ambient();
    std::map<std::string, size_t> counts;
    for (const Flag& fl : y.flags()) {
        if (int(fl.size()) != n - 1) continue;  // not a chamber
        for (size_t drop = 0; drop < fl.members.size(); ++drop) {
            std::vector<Subspace> panel;
            for (size_t i = 0; i < fl.members.size(); ++i)
                if (i != drop) panel.push_back(fl.members[i]);
            if (panel.empty()) continue;  // n = 2: chambers are vertices
            ++counts[Flag::make(std::move(panel)).key()];
        }
    }
    // n = 2 needs special handling: chambers are single vertices and the
    // unique panel is the empty face shared by all of them.
    if (n == 2) {
        size_t chambers = 0;
        for (const Flag& fl : y.flags())
            if (fl.size() == 1) ++chambers;
        return chambers ? std::vector<size_t>{chambers} : std::vector<size_t>{};
    }
    std::vector<size_t> out;
    out.reserve(counts.size());
    for (const auto& [k, c] : counts) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_thick(const SubComplex& y) {
    const auto deg = panel_degrees(y);
    if (deg.empty()) return false;
    return deg.front() >= 3;
}

}  // namespace flagcr
