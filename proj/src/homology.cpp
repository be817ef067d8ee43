#include "flagcr/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <map>
#include <unordered_map>

#include "flagcr/errors.hpp"

namespace flagcr {

namespace {

struct int64_overflow {};

// Checked 64-bit value for the first SNF attempt; on overflow the caller
// retries with arbitrary precision.
struct Checked {
    long long v = 0;
    Checked() = default;
    Checked(long long x) : v(x) {}
    friend Checked operator+(Checked a, Checked b) {
        long long r;
        if (__builtin_add_overflow(a.v, b.v, &r)) throw int64_overflow{};
        return r;
    }
    friend Checked operator-(Checked a, Checked b) {
        long long r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw int64_overflow{};
        return r;
    }
    friend Checked operator*(Checked a, Checked b) {
        long long r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw int64_overflow{};
        return r;
    }
    friend Checked operator/(Checked a, Checked b) { return a.v / b.v; }
    friend Checked operator%(Checked a, Checked b) { return a.v % b.v; }
    friend bool operator==(Checked a, Checked b) { return a.v == b.v; }
    friend bool operator!=(Checked a, Checked b) { return a.v != b.v; }
    friend bool operator<(Checked a, Checked b) { return a.v < b.v; }
};

template <typename T>
T t_abs(const T& x) {
    return x < T(0) ? T(0) - x : x;
}

template <typename T>
struct SnfCore {
    size_t rank = 0;
    std::vector<T> divisors;
};

template <typename T>
SnfCore<T> snf_impl(std::vector<std::vector<T>> m) {
    SnfCore<T> out;
    if (m.empty() || m[0].empty()) return out;
    const size_t rows = m.size(), cols = m[0].size();
    size_t t = 0;
    while (t < rows && t < cols) {
        // locate the minimal-magnitude nonzero entry in the trailing block
        size_t pi = t, pj = t;
        bool found = false;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j) {
                if (m[i][j] == T(0)) continue;
                if (!found || t_abs(m[i][j]) < t_abs(m[pi][pj])) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        std::swap(m[t], m[pi]);
        if (pj != t)
            for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == T(0)) continue;
                const T q = m[i][t] / m[t][t];
                if (q != T(0))
                    for (size_t j = t; j < cols; ++j) m[i][j] = m[i][j] - q * m[t][j];
                if (m[i][t] != T(0)) {
                    std::swap(m[t], m[i]);  // smaller remainder becomes the pivot
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == T(0)) continue;
                const T q = m[t][j] / m[t][t];
                if (q != T(0))
                    for (size_t i = t; i < rows; ++i) m[i][j] = m[i][j] - q * m[i][t];
                if (m[t][j] != T(0)) {
                    for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
            if (clean) {
                // divisibility pass: the pivot must divide the rest
                for (size_t i = t + 1; i < rows && clean; ++i)
                    for (size_t j = t + 1; j < cols && clean; ++j)
                        if (m[i][j] % m[t][t] != T(0)) {
                            for (size_t c = t; c < cols; ++c) m[t][c] = m[t][c] + m[i][c];
                            clean = false;
                        }
            }
        }
        out.divisors.push_back(t_abs(m[t][t]));
        ++t;
    }
    out.rank = out.divisors.size();
    return out;
}

}  // namespace

SnfResult smith_normal_form(const IntMat& m) {
    std::vector<std::vector<Checked>> w64(m.rows, std::vector<Checked>(m.cols));
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) w64[i][j] = Checked(m.at(i, j));
    try {
        const auto core = snf_impl(std::move(w64));
        SnfResult out;
        out.rank = core.rank;
        for (const Checked& d : core.divisors) out.divisors.push_back(d.v);
        return out;
    } catch (const int64_overflow&) {
        using big = boost::multiprecision::cpp_int;
        std::vector<std::vector<big>> wb(m.rows, std::vector<big>(m.cols));
        for (size_t i = 0; i < m.rows; ++i)
            for (size_t j = 0; j < m.cols; ++j) wb[i][j] = m.at(i, j);
        const auto core = snf_impl(std::move(wb));
        SnfResult out;
        out.rank = core.rank;
        for (const big& d : core.divisors) {
            if (d > big(std::numeric_limits<long long>::max()))
                throw verification_error("invariant factor exceeds 64 bits");
            out.divisors.push_back(d.convert_to<long long>());
        }
        return out;
    }
}

ChainComplexZ order_chain_complex(const SubComplex& y) {
    if (y.empty()) throw input_error("empty complex has no ordered chain complex");
    size_t top = 0;
    for (const Flag& fl : y.flags()) top = std::max(top, fl.size());
    ChainComplexZ cc;
    cc.dims.assign(top, 0);
    // canonical flag order restricted to each degree
    std::vector<std::vector<const Flag*>> by_degree(top);
    for (const Flag& fl : y.flags()) by_degree[fl.size() - 1].push_back(&fl);
    std::vector<std::unordered_map<std::string, uint32_t>> index(top);
    for (size_t d = 0; d < top; ++d) {
        cc.dims[d] = by_degree[d].size();
        index[d].reserve(by_degree[d].size() * 2);
        for (size_t i = 0; i < by_degree[d].size(); ++i)
            index[d].emplace(by_degree[d][i]->key(), uint32_t(i));
    }
    cc.boundary.clear();
    cc.boundary.emplace_back(1, cc.dims[0]);
    for (size_t j = 0; j < cc.dims[0]; ++j) cc.boundary[0].at(0, j) = 1;  // augmentation
    for (size_t d = 1; d < top; ++d) {
        IntMat b(cc.dims[d - 1], cc.dims[d]);
        for (size_t j = 0; j < by_degree[d].size(); ++j) {
            const Flag& fl = *by_degree[d][j];
            for (size_t drop = 0; drop < fl.members.size(); ++drop) {
                std::vector<Subspace> sub;
                sub.reserve(fl.members.size() - 1);
                for (size_t i = 0; i < fl.members.size(); ++i)
                    if (i != drop) sub.push_back(fl.members[i]);
                const auto it = index[d - 1].find(Flag::make(std::move(sub)).key());
                if (it == index[d - 1].end())
                    throw input_error("complex is not face-closed");
                b.at(it->second, j) += (drop % 2 == 0) ? 1 : -1;
            }
        }
        cc.boundary.push_back(std::move(b));
    }
    return cc;
}

bool HomologyReport::acyclic() const {
    for (size_t b : reduced_betti)
        if (b != 0) return false;
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

HomologyReport reduced_homology(const SubComplex& y) {
    const ChainComplexZ cc = order_chain_complex(y);
    const size_t top = cc.dims.size();
    std::vector<SnfResult> snf(top + 1);
    for (size_t d = 0; d < top; ++d) snf[d] = smith_normal_form(cc.boundary[d]);
    snf[top] = SnfResult{};  // no (top+1)-simplices
    // composition dd = 0 sanity: rank(boundary[d]) + rank(boundary[d+1]) <= dims[d]
    HomologyReport rep;
    rep.reduced_betti.assign(top, 0);
    rep.torsion.assign(top, {});
    for (size_t d = 0; d < top; ++d) {
        const size_t cycles = cc.dims[d] - snf[d].rank;
        if (snf[d + 1].rank > cycles)
            throw verification_error("boundary ranks violate dd=0");
        rep.reduced_betti[d] = cycles - snf[d + 1].rank;
        for (long long div : snf[d + 1].divisors)
            if (div > 1) rep.torsion[d].push_back(div);
    }
    long long chi = 0;
    for (size_t d = 0; d < top; ++d)
        chi += (d % 2 == 0) ? (long long)cc.dims[d] : -(long long)cc.dims[d];
    rep.euler_characteristic = chi;
    // Euler cross-check: chi == 1 + sum (-1)^d reduced_betti[d]
    long long chi_h = 1;
    for (size_t d = 0; d < top; ++d)
        chi_h += (d % 2 == 0) ? (long long)rep.reduced_betti[d] : -(long long)rep.reduced_betti[d];
    if (chi != chi_h)
        throw verification_error("Euler characteristic disagrees with Betti numbers: " +
                                 std::to_string(chi) + " vs " + std::to_string(chi_h));
    return rep;
}

}  // namespace flagcr
