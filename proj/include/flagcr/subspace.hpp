#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "flagcr/field.hpp"
#include "flagcr/matrix.hpp"

namespace flagcr {

inline constexpr uint64_t kSubspacePointCap = uint64_t(1) << 20;

// A subspace of F_q^n stored as its reduced row echelon basis: rows have
// strictly increasing pivot columns, pivots are 1, and pivot columns are
// zero elsewhere.  The representation is canonical, so two Subspace values
// are equal exactly when their bytes agree, and key() doubles as a hash key.
class Subspace {
public:
    static Subspace zero(const Field& f, int n);
    static Subspace full(const Field& f, int n);
    // Row-reduces the given spanning rows (codes validated).
    static Subspace span(const Field& f, int n, const std::vector<std::vector<int>>& rows);
    static Subspace span_rows(const Field& f, int n, std::vector<std::vector<uint8_t>> rows);
    // Trusted constructor for rows already in reduced echelon form.
    static Subspace from_echelon(const Field& f, int n, std::vector<std::vector<uint8_t>> rows);

    const Field& field() const { return *f_; }
    int ambient() const { return n_; }
    int dim() const { return dim_; }
    bool is_zero() const { return dim_ == 0; }
    bool is_full() const { return dim_ == n_; }

    uint8_t basis_at(int r, int c) const { return basis_[size_t(r) * n_ + c]; }
    std::vector<std::vector<uint8_t>> basis_rows() const;

    bool contains(const Subspace& w) const;       // this >= w
    bool contains_vector(std::span<const uint8_t> v) const;

    bool operator==(const Subspace& w) const {
        return f_ == w.f_ && n_ == w.n_ && basis_ == w.basis_;
    }
    bool operator!=(const Subspace& w) const { return !(*this == w); }

    std::string key() const;

private:
    Subspace(const Field& f, int n) : f_(&f), n_(n), dim_(0) {}
    const Field* f_;
    int n_;
    int dim_;
    std::vector<uint8_t> basis_;  // dim x n, row-major
};

// Total deterministic order: dimension first, then basis bytes.
bool subspace_less(const Subspace& a, const Subspace& b);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

// Image g.W of a subspace under an invertible matrix (vectors as columns).
Subspace image(const Mat& g, const Subspace& w);

// All subspaces of F_q^n including 0 and the full space, in canonical order.
// Throws cap_error("enumeration too large ...") when q^n exceeds the cap.
std::vector<Subspace> enumerate_subspaces(const Field& f, int n,
                                          uint64_t point_cap = kSubspacePointCap);

namespace detail {
// In-place row reduction; returns the rank and leaves exactly the nonzero
// echelon rows.  Has a packed-word fast path for F_2.
int rref(const Field& f, int n, std::vector<std::vector<uint8_t>>& rows);
}  // namespace detail

}  // namespace flagcr
