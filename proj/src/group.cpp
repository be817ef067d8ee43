#include "flagcr/group.hpp"

#include <deque>

#include "flagcr/errors.hpp"

namespace flagcr {

GroupSpec GroupSpec::make(const Field& f, int n, std::vector<Mat> gens, std::string name) {
    if (n <= 0) throw input_error("ambient dimension must be positive");
    if (gens.empty()) throw input_error("a group spec needs at least one generator");
    for (size_t i = 0; i < gens.size(); ++i) {
        if (&gens[i].field() != &f || gens[i].n() != n)
            throw input_error("generator " + std::to_string(i) +
                              " does not live in the requested ambient space");
        if (!gens[i].invertible())
            throw input_error("generator " + std::to_string(i) + " is singular");
    }
    return GroupSpec{&f, n, std::move(gens), std::move(name)};
}

long long GroupClosure::index_of(const Mat& m) const {
    auto it = index_.find(m.key());
    return it == index_.end() ? -1 : (long long)it->second;
}

void GroupClosure::rebuild_index() {
    index_.clear();
    index_.reserve(elements.size() * 2);
    for (size_t i = 0; i < elements.size(); ++i) index_.emplace(elements[i].key(), uint32_t(i));
}

GroupClosure GroupClosure::from_elements(std::vector<Mat> elems, std::vector<Mat> gens) {
    if (elems.empty()) throw input_error("a group needs at least the identity");
    GroupClosure g;
    g.elements = std::move(elems);
    g.generators = std::move(gens);
    g.order = g.elements.size();
    g.complete = true;
    g.rebuild_index();
    const Mat id = Mat::identity(g.elements[0].field(), g.elements[0].n());
    if (!g.contains(id))
        throw verification_error("element set does not contain the identity");
    return g;
}

GroupClosure closure(const GroupSpec& spec, uint64_t cap) {
    GroupClosure g;
    g.generators = spec.generators;
    const Mat id = Mat::identity(*spec.field, spec.n);
    g.elements.push_back(id);
    g.rebuild_index();
    g.complete = true;
    std::deque<uint32_t> queue{0};
    std::unordered_map<std::string, uint32_t> seen;
    seen.emplace(id.key(), 0);
    while (!queue.empty() && g.complete) {
        const uint32_t at = queue.front();
        queue.pop_front();
        for (const Mat& gen : spec.generators) {
            Mat next = g.elements[at] * gen;
            std::string k = next.key();
            if (seen.count(k)) continue;
            if (g.elements.size() >= cap) {
                g.complete = false;
                break;
            }
            seen.emplace(std::move(k), uint32_t(g.elements.size()));
            queue.push_back(uint32_t(g.elements.size()));
            g.elements.push_back(std::move(next));
        }
    }
    g.order = g.elements.size();
    g.rebuild_index();
    if (g.complete) {
        // Lagrange sanity check against the ambient order when it fits.
        try {
            const uint64_t ambient = gl_order(spec.field->q(), spec.n);
            if (ambient % g.order != 0)
                throw verification_error("closure order " + std::to_string(g.order) +
                                         " does not divide |GL_" + std::to_string(spec.n) +
                                         "(F_" + std::to_string(spec.field->q()) + ")|");
        } catch (const cap_error&) {
            // ambient order overflows 64 bits; skip the divisibility check
        }
    }
    return g;
}

GroupClosure enumerate_gl(const Field& f, int n, uint64_t scan_cap) {
    if (n <= 0) throw input_error("ambient dimension must be positive");
    const int cells = n * n;
    uint64_t total = 1;
    for (int i = 0; i < cells; ++i) {
        if (__builtin_mul_overflow(total, uint64_t(f.q()), &total) || total > scan_cap)
            throw cap_error("ambient group too large: q^(n^2) exceeds the scan cap");
    }
    GroupClosure g;
    g.elements.reserve(size_t(gl_order(f.q(), n)));
    std::vector<uint8_t> digits(cells, 0);
    // Odometer scan with the last cell fastest; the zero matrix comes first
    // and is skipped by the invertibility filter.
    while (true) {
        Mat m(f, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.set(i, j, digits[size_t(i) * n + j]);
        if (m.invertible()) g.elements.push_back(std::move(m));
        int t = cells - 1;
        while (t >= 0 && digits[t] == f.q() - 1) digits[t--] = 0;
        if (t < 0) break;
        ++digits[t];
    }
    g.order = g.elements.size();
    g.complete = true;
    g.rebuild_index();
    if (g.order != gl_order(f.q(), n))
        throw verification_error("GL enumeration found " + std::to_string(g.order) +
                                 " elements, expected " + std::to_string(gl_order(f.q(), n)));
    return g;
}

std::vector<Mat> small_generating_set(const GroupClosure& g) {
    if (!g.complete) throw input_error("cannot compute generators of an incomplete closure");
    if (!g.generators.empty()) return g.generators;
    const Field& f = g.elements[0].field();
    const int n = g.elements[0].n();
    std::vector<Mat> gens;
    GroupClosure sub = GroupClosure::from_elements({Mat::identity(f, n)});
    for (const Mat& e : g.elements) {
        if (sub.order == g.order) break;
        if (sub.contains(e)) continue;
        gens.push_back(e);
        sub = closure(GroupSpec::make(f, n, gens), g.order);
    }
    if (sub.order != g.order)
        throw verification_error("small generating set does not regenerate the group");
    if (gens.empty()) gens.push_back(Mat::identity(f, n));
    return gens;
}

bool is_normal_in(const GroupClosure& sub, const GroupClosure& over) {
    if (!sub.complete || !over.complete)
        throw input_error("normality test requires complete closures");
    for (const Mat& m : sub.elements)
        if (!over.contains(m))
            throw input_error("normality test requires the subgroup to be contained in the group");
    std::vector<Mat> conj = over.generators.empty() ? small_generating_set(over) : over.generators;
    for (const Mat& g : conj) {
        const Mat gi = g.inverse();
        for (const Mat& m : sub.elements)
            if (!sub.contains(g * m * gi)) return false;
    }
    return true;
}

}  // namespace flagcr
