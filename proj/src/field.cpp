#include "flagcr/field.hpp"

#include <map>
#include <stdexcept>

#include "flagcr/errors.hpp"

namespace flagcr {

namespace {

// Little-endian coefficient vectors over F_p, reduced mod an irreducible
// polynomial.  Only used once at table-construction time.
std::vector<uint8_t> poly_mul_mod(const std::vector<uint8_t>& a,
                                  const std::vector<uint8_t>& b, int p,
                                  const std::vector<uint8_t>& irr) {
    const int e = int(irr.size()) - 1;
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // Divide out the leading term of irr (monic) from the top down.
    for (int d = int(prod.size()) - 1; d >= e; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int k = 0; k < e; ++k) {
            int t = prod[d - e + k] - c * irr[k] % p;
            prod[d - e + k] = ((t % p) + p) % p;
        }
    }
    std::vector<uint8_t> out(e, 0);
    for (int k = 0; k < e && k < int(prod.size()); ++k) out[k] = uint8_t(prod[k]);
    return out;
}

std::vector<uint8_t> code_to_poly(int code, int p, int e) {
    std::vector<uint8_t> c(e, 0);
    for (int k = 0; k < e; ++k) {
        c[k] = uint8_t(code % p);
        code /= p;
    }
    return c;
}

int poly_to_code(const std::vector<uint8_t>& c, int p) {
    int code = 0;
    for (int k = int(c.size()) - 1; k >= 0; --k) code = code * p + c[k];
    return code;
}

}  // namespace

Field::Field(int p, int e, const std::vector<uint8_t>& irreducible, std::string modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
    q_ = 1;
    for (int k = 0; k < e; ++k) q_ *= p;
    add_.assign(size_t(q_) * q_, 0);
    mul_.assign(size_t(q_) * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        for (int b = 0; b < q_; ++b) {
            if (e == 1) {
                add_[size_t(a) * q_ + b] = uint8_t((a + b) % p);
                mul_[size_t(a) * q_ + b] = uint8_t((a * b) % p);
            } else {
                auto pa = code_to_poly(a, p, e), pb = code_to_poly(b, p, e);
                std::vector<uint8_t> s(e);
                for (int k = 0; k < e; ++k) s[k] = uint8_t((pa[k] + pb[k]) % p);
                add_[size_t(a) * q_ + b] = uint8_t(poly_to_code(s, p));
                mul_[size_t(a) * q_ + b] =
                    uint8_t(poly_to_code(poly_mul_mod(pa, pb, p, irreducible), p));
            }
        }
    }
    for (int a = 0; a < q_; ++a)
        for (int b = 0; b < q_; ++b)
            if (add_[size_t(a) * q_ + b] == 0) neg_[a] = uint8_t(b);
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[size_t(a) * q_ + b] == 1) inv_[a] = uint8_t(b);
}

uint8_t Field::inv(uint8_t a) const {
    if (a == 0) throw input_error("field inverse of zero");
    return inv_[a];
}

const std::vector<int>& Field::supported_orders() {
    static const std::vector<int> orders{2, 3, 4, 5, 7, 8, 9};
    return orders;
}

const Field& Field::get(int q) {
    switch (q) {
        case 2: { static const Field f(2, 1, {}, ""); return f; }
        case 3: { static const Field f(3, 1, {}, ""); return f; }
        case 4: { static const Field f(2, 2, {1, 1, 1}, "t^2+t+1"); return f; }
        case 5: { static const Field f(5, 1, {}, ""); return f; }
        case 7: { static const Field f(7, 1, {}, ""); return f; }
        case 8: { static const Field f(2, 3, {1, 1, 0, 1}, "t^3+t+1"); return f; }
        case 9: { static const Field f(3, 2, {1, 0, 1}, "t^2+1"); return f; }
        default:
            throw input_error("unsupported field order q=" + std::to_string(q) +
                              " (supported: 2,3,4,5,7,8,9)");
    }
}

uint64_t gaussian_binomial(int n, int k, int q) {
    if (k < 0 || k > n) return 0;
    // Pascal-type recurrence [n,k]_q = [n-1,k-1]_q + q^k [n-1,k]_q.
    std::vector<std::vector<uint64_t>> g(n + 1, std::vector<uint64_t>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        g[i][0] = 1;
        for (int j = 1; j <= i; ++j) {
            uint64_t qk = 1;
            for (int t = 0; t < j; ++t) qk *= uint64_t(q);
            g[i][j] = (j <= i - 1 ? g[i - 1][j - 1] + qk * g[i - 1][j] : g[i - 1][j - 1]);
        }
    }
    return g[n][k];
}

uint64_t gl_order(int q, int n) {
    uint64_t qn = 1;
    for (int i = 0; i < n; ++i) {
        if (__builtin_mul_overflow(qn, uint64_t(q), &qn))
            throw cap_error("gl_order overflows 64 bits");
    }
    uint64_t out = 1, qi = 1;
    for (int i = 0; i < n; ++i) {
        uint64_t factor = qn - qi;
        if (__builtin_mul_overflow(out, factor, &out))
            throw cap_error("gl_order overflows 64 bits");
        qi *= uint64_t(q);
    }
    return out;
}

}  // namespace flagcr
