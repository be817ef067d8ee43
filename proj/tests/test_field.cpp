#include <doctest.h>

#include "flagcr/errors.hpp"
#include "flagcr/field.hpp"

using namespace flagcr;

TEST_CASE("field axioms hold exhaustively for every supported order") {
    for (int q : Field::supported_orders()) {
        CAPTURE(q);
        const Field& f = Field::get(q);
        CHECK(f.q() == q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.mul(a, 0) == 0);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) {
                CHECK(f.mul(a, f.inv(a)) == 1);
                CHECK(f.inv(f.inv(a)) == a);
            }
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
                for (int c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
        // characteristic: adding 1 to itself p times gives 0, and no earlier.
        uint8_t s = 0;
        for (int i = 1; i < f.characteristic(); ++i) {
            s = f.add(s, 1);
            CHECK(s != 0);
        }
        CHECK(f.add(s, 1) == 0);
        // the multiplicative group has exponent q-1
        for (int a = 1; a < q; ++a) {
            uint8_t p = 1;
            for (int i = 0; i < q - 1; ++i) p = f.mul(p, uint8_t(a));
            CHECK(p == 1);
        }
    }
}

TEST_CASE("extension fields use the documented moduli") {
    const Field& f4 = Field::get(4);
    CHECK(f4.characteristic() == 2);
    CHECK(f4.degree() == 2);
    CHECK(f4.modulus() == "t^2+t+1");
    // t has code 2 (= 0 + 1*p); t^2 = t + 1 has code 3
    CHECK(f4.mul(2, 2) == 3);

    const Field& f8 = Field::get(8);
    CHECK(f8.modulus() == "t^3+t+1");
    // t^3 = t + 1 -> code 3
    CHECK(f8.mul(2, f8.mul(2, 2)) == 3);

    const Field& f9 = Field::get(9);
    CHECK(f9.characteristic() == 3);
    CHECK(f9.modulus() == "t^2+1");
    // t has code 3 (= 0 + 1*p); t^2 = -1 = 2
    CHECK(f9.mul(3, 3) == 2);

    CHECK(Field::get(7).modulus().empty());
}

TEST_CASE("unsupported orders and zero inversion are rejected") {
    CHECK_THROWS_AS(Field::get(6), input_error);
    CHECK_THROWS_AS(Field::get(0), input_error);
    CHECK_THROWS_AS(Field::get(11), input_error);
    CHECK_THROWS_AS(Field::get(2).inv(0), input_error);
}

TEST_CASE("gaussian binomials: frozen values, symmetry and Pascal recurrence") {
    CHECK(gaussian_binomial(2, 1, 2) == 3);
    CHECK(gaussian_binomial(2, 1, 3) == 4);
    CHECK(gaussian_binomial(2, 1, 5) == 6);
    CHECK(gaussian_binomial(3, 1, 2) == 7);
    CHECK(gaussian_binomial(3, 2, 2) == 7);
    CHECK(gaussian_binomial(3, 1, 3) == 13);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(4, 1, 2) == 15);
    CHECK(gaussian_binomial(4, 2, 3) == 130);
    CHECK(gaussian_binomial(3, 0, 5) == 1);
    CHECK(gaussian_binomial(3, 4, 2) == 0);
    CHECK(gaussian_binomial(3, -1, 2) == 0);
    for (int q : {2, 3, 4, 5}) {
        for (int n = 0; n <= 5; ++n) {
            for (int k = 0; k <= n; ++k) {
                CHECK(gaussian_binomial(n, k, q) == gaussian_binomial(n, n - k, q));
                if (k >= 1 && n >= 1) {
                    // q-Pascal: C(n,k) = q^k C(n-1,k) + C(n-1,k-1)
                    uint64_t pk = 1;
                    for (int i = 0; i < k; ++i) pk *= uint64_t(q);
                    CHECK(gaussian_binomial(n, k, q) ==
                          pk * gaussian_binomial(n - 1, k, q) +
                              gaussian_binomial(n - 1, k - 1, q));
                }
            }
        }
    }
}

TEST_CASE("general linear group orders") {
    CHECK(gl_order(2, 2) == 6);
    CHECK(gl_order(3, 2) == 48);
    CHECK(gl_order(5, 2) == 480);
    CHECK(gl_order(7, 2) == 2016);
    CHECK(gl_order(9, 2) == 5760);
    CHECK(gl_order(2, 3) == 168);
    CHECK(gl_order(3, 3) == 11232);
    CHECK(gl_order(2, 4) == 20160);
    CHECK_THROWS_AS(gl_order(9, 9), cap_error);
}
