#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flagcr/field.hpp"

namespace flagcr {

// Dense square matrix over a Field, row-major bytes.  Equality and ordering
// are total and deterministic; key() is a raw-byte string that is unique per
// (field, size, entries) and is used for hashing inside group closures.
class Mat {
public:
    Mat(const Field& f, int n);  // zero matrix
    static Mat identity(const Field& f, int n);
    // Rows of element codes; validates squareness and code ranges.
    static Mat from_rows(const Field& f, const std::vector<std::vector<int>>& rows);

    const Field& field() const { return *f_; }
    int n() const { return n_; }
    uint8_t at(int i, int j) const { return a_[size_t(i) * n_ + j]; }
    void set(int i, int j, uint8_t v) {
        a_[size_t(i) * n_ + j] = v;
        invertible_cache_ = -1;
    }

    Mat operator*(const Mat& rhs) const;
    bool operator==(const Mat& rhs) const;
    bool operator!=(const Mat& rhs) const { return !(*this == rhs); }

    bool invertible() const;  // cached rank test
    Mat inverse() const;      // throws input_error on a singular matrix
    Mat pow(uint64_t k) const;

    std::string key() const;
    std::vector<std::vector<int>> to_rows() const;

private:
    const Field* f_;
    int n_;
    std::vector<uint8_t> a_;
    mutable int8_t invertible_cache_ = -1;  // -1 unknown, 0 no, 1 yes
};

// Total deterministic order: field size, then dimension, then entry bytes.
bool mat_less(const Mat& x, const Mat& y);

// True when (g - 1)^n = 0.
bool is_unipotent(const Mat& g);

}  // namespace flagcr
