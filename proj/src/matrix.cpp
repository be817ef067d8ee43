#include "flagcr/matrix.hpp"

#include <algorithm>

#include "flagcr/errors.hpp"

namespace flagcr {

Mat::Mat(const Field& f, int n) : f_(&f), n_(n), a_(size_t(n) * n, 0) {
    if (n <= 0) throw input_error("matrix dimension must be positive");
}

Mat Mat::identity(const Field& f, int n) {
    Mat m(f, n);
    for (int i = 0; i < n; ++i) m.a_[size_t(i) * n + i] = 1;
    m.invertible_cache_ = 1;
    return m;
}

Mat Mat::from_rows(const Field& f, const std::vector<std::vector<int>>& rows) {
    const int n = int(rows.size());
    if (n == 0) throw input_error("matrix needs at least one row");
    Mat m(f, n);
    for (int i = 0; i < n; ++i) {
        if (int(rows[i].size()) != n)
            throw input_error("matrix is not square: row " + std::to_string(i) +
                              " has " + std::to_string(rows[i].size()) + " entries, expected " +
                              std::to_string(n));
        for (int j = 0; j < n; ++j) {
            if (!f.valid_code(rows[i][j]))
                throw input_error("matrix entry " + std::to_string(rows[i][j]) +
                                  " out of range for F_" + std::to_string(f.q()));
            m.a_[size_t(i) * n + j] = uint8_t(rows[i][j]);
        }
    }
    return m;
}

Mat Mat::operator*(const Mat& rhs) const {
    if (f_ != rhs.f_ || n_ != rhs.n_)
        throw input_error("matrix product of mismatched matrices");
    const Field& f = *f_;
    Mat out(f, n_);
    for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < n_; ++k) {
            const uint8_t aik = a_[size_t(i) * n_ + k];
            if (aik == 0) continue;
            const uint8_t* brow = &rhs.a_[size_t(k) * n_];
            uint8_t* orow = &out.a_[size_t(i) * n_];
            for (int j = 0; j < n_; ++j)
                orow[j] = f.add(orow[j], f.mul(aik, brow[j]));
        }
    }
    return out;
}

bool Mat::operator==(const Mat& rhs) const {
    return f_ == rhs.f_ && n_ == rhs.n_ && a_ == rhs.a_;
}

bool Mat::invertible() const {
    if (invertible_cache_ != -1) return invertible_cache_ == 1;
    const Field& f = *f_;
    std::vector<uint8_t> w = a_;
    int rank = 0;
    for (int col = 0; col < n_ && rank < n_; ++col) {
        int piv = -1;
        for (int r = rank; r < n_; ++r)
            if (w[size_t(r) * n_ + col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < n_; ++j)
                std::swap(w[size_t(piv) * n_ + j], w[size_t(rank) * n_ + j]);
        const uint8_t d = f.inv(w[size_t(rank) * n_ + col]);
        for (int j = 0; j < n_; ++j)
            w[size_t(rank) * n_ + j] = f.mul(d, w[size_t(rank) * n_ + j]);
        for (int r = rank + 1; r < n_; ++r) {
            const uint8_t c = w[size_t(r) * n_ + col];
            if (c == 0) continue;
            for (int j = 0; j < n_; ++j)
                w[size_t(r) * n_ + j] =
                    f.sub(w[size_t(r) * n_ + j], f.mul(c, w[size_t(rank) * n_ + j]));
        }
        ++rank;
    }
    invertible_cache_ = (rank == n_) ? 1 : 0;
    return invertible_cache_ == 1;
}

Mat Mat::inverse() const {
    const Field& f = *f_;
    // Gauss-Jordan on [A | I].
    std::vector<uint8_t> w(size_t(n_) * 2 * n_, 0);
    const int m = 2 * n_;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) w[size_t(i) * m + j] = a_[size_t(i) * n_ + j];
        w[size_t(i) * m + n_ + i] = 1;
    }
    for (int col = 0; col < n_; ++col) {
        int piv = -1;
        for (int r = col; r < n_; ++r)
            if (w[size_t(r) * m + col] != 0) { piv = r; break; }
        if (piv < 0) {
            invertible_cache_ = 0;
            throw input_error("matrix is not invertible");
        }
        if (piv != col)
            for (int j = 0; j < m; ++j) std::swap(w[size_t(piv) * m + j], w[size_t(col) * m + j]);
        const uint8_t d = f.inv(w[size_t(col) * m + col]);
        for (int j = 0; j < m; ++j) w[size_t(col) * m + j] = f.mul(d, w[size_t(col) * m + j]);
        for (int r = 0; r < n_; ++r) {
            if (r == col) continue;
            const uint8_t c = w[size_t(r) * m + col];
            if (c == 0) continue;
            for (int j = 0; j < m; ++j)
                w[size_t(r) * m + j] = f.sub(w[size_t(r) * m + j], f.mul(c, w[size_t(col) * m + j]));
        }
    }
    Mat out(f, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out.a_[size_t(i) * n_ + j] = w[size_t(i) * m + n_ + j];
    invertible_cache_ = 1;
    out.invertible_cache_ = 1;
    return out;
}

Mat Mat::pow(uint64_t k) const {
    Mat acc = identity(*f_, n_);
    Mat base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::string Mat::key() const {
    return std::string(reinterpret_cast<const char*>(a_.data()), a_.size());
}

std::vector<std::vector<int>> Mat::to_rows() const {
    std::vector<std::vector<int>> rows(n_, std::vector<int>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) rows[i][j] = a_[size_t(i) * n_ + j];
    return rows;
}

bool mat_less(const Mat& x, const Mat& y) {
    if (x.field().q() != y.field().q()) return x.field().q() < y.field().q();
    if (x.n() != y.n()) return x.n() < y.n();
    for (int i = 0; i < x.n(); ++i)
        for (int j = 0; j < x.n(); ++j)
            if (x.at(i, j) != y.at(i, j)) return x.at(i, j) < y.at(i, j);
    return false;
}

bool is_unipotent(const Mat& g) {
    const Field& f = g.field();
    const int n = g.n();
    Mat m(f, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.set(i, j, i == j ? f.sub(g.at(i, j), 1) : g.at(i, j));
    Mat p = Mat::identity(f, n);
    for (int k = 0; k < n; ++k) p = p * m;
    Mat zero(f, n);
    return p == zero;
}

}  // namespace flagcr
