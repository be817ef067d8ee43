#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace flagcr {

// A small finite field F_q backed by total lookup tables.  Element codes run
// 0..q-1 with 0 the additive and 1 the multiplicative identity.  Extension
// fields use fixed irreducible polynomials so element codes and every
// canonical form built on top of them are stable across runs and platforms:
//
//   F_4: t^2 + t + 1      F_8: t^3 + t + 1      F_9: t^2 + 1
//
// An element with polynomial coordinates c0 + c1*t + c2*t^2 has code
// c0 + c1*p + c2*p^2.  Instances are immutable singletons; obtain them
// through Field::get(q).
class Field {
public:
    static const Field& get(int q);
    static const std::vector<int>& supported_orders();

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return e_; }
    // Modulus polynomial as text, empty for prime fields.
    const std::string& modulus() const { return modulus_; }

    uint8_t add(uint8_t a, uint8_t b) const { return add_[size_t(a) * q_ + b]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[size_t(a) * q_ + b]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add(a, neg_[b]); }
    uint8_t inv(uint8_t a) const;

    bool valid_code(long long c) const { return c >= 0 && c < q_; }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    Field(int p, int e, const std::vector<uint8_t>& irreducible, std::string modulus);

    int q_, p_, e_;
    std::string modulus_;
    std::vector<uint8_t> add_, mul_, neg_, inv_;
};

// Number of k-dimensional subspaces of F_q^n.  Zero when k < 0 or k > n.
uint64_t gaussian_binomial(int n, int k, int q);

// |GL_n(F_q)| = prod_{i<n} (q^n - q^i).  Throws cap_error if the product
// does not fit in 64 bits.
uint64_t gl_order(int q, int n);

}  // namespace flagcr
