#include "flagcr/subspace.hpp"

#include <algorithm>

#include "flagcr/errors.hpp"

namespace flagcr {

namespace detail {

namespace {

int rref_generic(const Field& f, int n, std::vector<std::vector<uint8_t>>& rows) {
    int rank = 0;
    for (int col = 0; col < n && rank < int(rows.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < int(rows.size()); ++r)
            if (rows[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        const uint8_t d = f.inv(rows[rank][col]);
        for (int j = col; j < n; ++j) rows[rank][j] = f.mul(d, rows[rank][j]);
        for (int r = 0; r < int(rows.size()); ++r) {
            if (r == rank) continue;
            const uint8_t c = rows[r][col];
            if (c == 0) continue;
            for (int j = col; j < n; ++j)
                rows[r][j] = f.sub(rows[r][j], f.mul(c, rows[rank][j]));
        }
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

// F_2 rows fit in one machine word for every ambient dimension we support,
// so elimination reduces to XOR on packed rows.
int rref_gf2(int n, std::vector<std::vector<uint8_t>>& rows) {
    std::vector<uint64_t> w(rows.size(), 0);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int j = 0; j < n; ++j)
            if (rows[r][j]) w[r] |= uint64_t(1) << j;
    int rank = 0;
    for (int col = 0; col < n && rank < int(w.size()); ++col) {
        const uint64_t bit = uint64_t(1) << col;
        int piv = -1;
        for (int r = rank; r < int(w.size()); ++r)
            if (w[r] & bit) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(w[rank], w[piv]);
        for (int r = 0; r < int(w.size()); ++r)
            if (r != rank && (w[r] & bit)) w[r] ^= w[rank];
        ++rank;
    }
    rows.assign(rank, std::vector<uint8_t>(n, 0));
    for (int r = 0; r < rank; ++r)
        for (int j = 0; j < n; ++j)
            if (w[r] & (uint64_t(1) << j)) rows[r][j] = 1;
    return rank;
}

}  // namespace

int rref(const Field& f, int n, std::vector<std::vector<uint8_t>>& rows) {
    if (f.q() == 2 && n <= 64) return rref_gf2(n, rows);
    return rref_generic(f, n, rows);
}

}  // namespace detail

Subspace Subspace::zero(const Field& f, int n) {
    if (n <= 0) throw input_error("ambient dimension must be positive");
    return Subspace(f, n);
}

Subspace Subspace::full(const Field& f, int n) {
    Subspace s = zero(f, n);
    s.dim_ = n;
    s.basis_.assign(size_t(n) * n, 0);
    for (int i = 0; i < n; ++i) s.basis_[size_t(i) * n + i] = 1;
    return s;
}

Subspace Subspace::span_rows(const Field& f, int n, std::vector<std::vector<uint8_t>> rows) {
    Subspace s = zero(f, n);
    for (const auto& r : rows)
        if (int(r.size()) != n) throw input_error("spanning row has wrong length");
    s.dim_ = detail::rref(f, n, rows);
    s.basis_.reserve(size_t(s.dim_) * n);
    for (const auto& r : rows) s.basis_.insert(s.basis_.end(), r.begin(), r.end());
    return s;
}

Subspace Subspace::span(const Field& f, int n, const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<uint8_t>> conv;
    conv.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<uint8_t> row(n, 0);
        if (int(r.size()) != n)
            throw input_error("spanning row has wrong length");
        for (int j = 0; j < n; ++j) {
            if (!f.valid_code(r[j]))
                throw input_error("vector entry " + std::to_string(r[j]) +
                                  " out of range for F_" + std::to_string(f.q()));
            row[j] = uint8_t(r[j]);
        }
        conv.push_back(std::move(row));
    }
    return span_rows(f, n, std::move(conv));
}

Subspace Subspace::from_echelon(const Field& f, int n, std::vector<std::vector<uint8_t>> rows) {
    Subspace s = zero(f, n);
    s.dim_ = int(rows.size());
    s.basis_.reserve(size_t(s.dim_) * n);
    for (const auto& r : rows) s.basis_.insert(s.basis_.end(), r.begin(), r.end());
    return s;
}

std::vector<std::vector<uint8_t>> Subspace::basis_rows() const {
    std::vector<std::vector<uint8_t>> rows(dim_, std::vector<uint8_t>(n_));
    for (int r = 0; r < dim_; ++r)
        for (int j = 0; j < n_; ++j) rows[r][j] = basis_[size_t(r) * n_ + j];
    return rows;
}

bool Subspace::contains_vector(std::span<const uint8_t> v) const {
    if (int(v.size()) != n_) throw input_error("vector has wrong length");
    const Field& f = *f_;
    std::vector<uint8_t> w(v.begin(), v.end());
    // Reduce against the echelon basis; membership iff the residue is zero.
    for (int r = 0; r < dim_; ++r) {
        int piv = -1;
        for (int j = 0; j < n_; ++j)
            if (basis_[size_t(r) * n_ + j] != 0) { piv = j; break; }
        const uint8_t c = w[piv];
        if (c == 0) continue;
        for (int j = piv; j < n_; ++j)
            w[j] = f.sub(w[j], f.mul(c, basis_[size_t(r) * n_ + j]));
    }
    return std::all_of(w.begin(), w.end(), [](uint8_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& w) const {
    if (f_ != w.f_ || n_ != w.n_)
        throw input_error("subspace comparison across different ambient spaces");
    if (w.dim_ > dim_) return false;
    for (int r = 0; r < w.dim_; ++r) {
        std::span<const uint8_t> row(&w.basis_[size_t(r) * n_], size_t(n_));
        if (!contains_vector(row)) return false;
    }
    return true;
}

std::string Subspace::key() const {
    std::string k;
    k.reserve(basis_.size() + 1);
    k.push_back(char(dim_));
    k.append(reinterpret_cast<const char*>(basis_.data()), basis_.size());
    return k;
}

bool subspace_less(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (int r = 0; r < a.dim(); ++r)
        for (int j = 0; j < a.ambient(); ++j)
            if (a.basis_at(r, j) != b.basis_at(r, j)) return a.basis_at(r, j) < b.basis_at(r, j);
    return false;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (&a.field() != &b.field() || a.ambient() != b.ambient())
        throw input_error("subspace sum across different ambient spaces");
    auto rows = a.basis_rows();
    auto rows_b = b.basis_rows();
    rows.insert(rows.end(), rows_b.begin(), rows_b.end());
    return Subspace::span_rows(a.field(), a.ambient(), std::move(rows));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (&a.field() != &b.field() || a.ambient() != b.ambient())
        throw input_error("subspace intersection across different ambient spaces");
    const Field& f = a.field();
    const int n = a.ambient();
    // Zassenhaus: reduce rows [u|u] for u in basis(a) and [w|0] for w in
    // basis(b); rows with zero left half carry an intersection basis on the
    // right.
    std::vector<std::vector<uint8_t>> rows;
    for (const auto& u : a.basis_rows()) {
        std::vector<uint8_t> r(2 * n);
        std::copy(u.begin(), u.end(), r.begin());
        std::copy(u.begin(), u.end(), r.begin() + n);
        rows.push_back(std::move(r));
    }
    for (const auto& w : b.basis_rows()) {
        std::vector<uint8_t> r(2 * n, 0);
        std::copy(w.begin(), w.end(), r.begin());
        rows.push_back(std::move(r));
    }
    detail::rref(f, 2 * n, rows);
    std::vector<std::vector<uint8_t>> inter;
    for (const auto& r : rows) {
        bool left_zero = std::all_of(r.begin(), r.begin() + n, [](uint8_t x) { return x == 0; });
        if (left_zero) inter.emplace_back(r.begin() + n, r.end());
    }
    return Subspace::span_rows(f, n, std::move(inter));
}

Subspace image(const Mat& g, const Subspace& w) {
    if (&g.field() != &w.field() || g.n() != w.ambient())
        throw input_error("matrix does not act on this ambient space");
    if (!g.invertible())
        throw input_error("matrix is not invertible");
    const Field& f = g.field();
    const int n = g.n();
    std::vector<std::vector<uint8_t>> rows;
    rows.reserve(w.dim());
    for (int r = 0; r < w.dim(); ++r) {
        std::vector<uint8_t> v(n, 0);
        for (int i = 0; i < n; ++i) {
            uint8_t acc = 0;
            for (int j = 0; j < n; ++j)
                acc = f.add(acc, f.mul(g.at(i, j), w.basis_at(r, j)));
            v[i] = acc;
        }
        rows.push_back(std::move(v));
    }
    return Subspace::span_rows(f, n, std::move(rows));
}

std::vector<Subspace> enumerate_subspaces(const Field& f, int n, uint64_t point_cap) {
    if (n <= 0) throw input_error("ambient dimension must be positive");
    uint64_t points = 1;
    for (int i = 0; i < n; ++i) {
        if (__builtin_mul_overflow(points, uint64_t(f.q()), &points) || points > point_cap)
            throw cap_error("enumeration too large: q^n exceeds the subspace point cap");
    }
    std::vector<Subspace> out;
    out.push_back(Subspace::zero(f, n));
    // Enumerate reduced echelon bases by pivot-column pattern; every matrix
    // generated this way is already canonical.
    for (int d = 1; d <= n; ++d) {
        std::vector<int> pivots(d);
        for (int i = 0; i < d; ++i) pivots[i] = i;
        while (true) {
            std::vector<bool> is_pivot(n, false);
            for (int p : pivots) is_pivot[p] = true;
            std::vector<std::pair<int, int>> free_cells;  // (row, col)
            for (int r = 0; r < d; ++r)
                for (int c = pivots[r] + 1; c < n; ++c)
                    if (!is_pivot[c]) free_cells.emplace_back(r, c);
            std::vector<uint8_t> assign(free_cells.size(), 0);
            while (true) {
                std::vector<std::vector<uint8_t>> rows(d, std::vector<uint8_t>(n, 0));
                for (int r = 0; r < d; ++r) rows[r][pivots[r]] = 1;
                for (size_t t = 0; t < free_cells.size(); ++t)
                    rows[free_cells[t].first][free_cells[t].second] = assign[t];
                out.push_back(Subspace::from_echelon(f, n, std::move(rows)));
                int t = int(assign.size()) - 1;
                while (t >= 0 && assign[t] == f.q() - 1) assign[t--] = 0;
                if (t < 0) break;
                ++assign[t];
            }
            // next pivot combination in lexicographic order
            int i = d - 1;
            while (i >= 0 && pivots[i] == n - d + i) --i;
            if (i < 0) break;
            ++pivots[i];
            for (int j = i + 1; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Subspace& a, const Subspace& b) { return subspace_less(a, b); });
    // Count cross-check against the Gaussian binomial, per dimension.
    std::vector<uint64_t> counts(n + 1, 0);
    for (const auto& s : out) ++counts[s.dim()];
    for (int d = 0; d <= n; ++d)
        if (counts[d] != gaussian_binomial(n, d, f.q()))
            throw verification_error("subspace enumeration disagrees with Gaussian binomial at dimension " +
                                     std::to_string(d));
    return out;
}

}  // namespace flagcr
