#include <doctest.h>

#include <random>

#include "flagcr/errors.hpp"
#include "flagcr/matrix.hpp"

using namespace flagcr;

namespace {

// Independent reference product for prime fields: plain integer arithmetic
// reduced mod p, no lookup tables.
Mat naive_mul_prime(const Mat& a, const Mat& b) {
    const int p = a.field().q();
    Mat r(a.field(), a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) {
            int acc = 0;
            for (int k = 0; k < a.n(); ++k) acc += int(a.at(i, k)) * int(b.at(k, j));
            r.set(i, j, uint8_t(acc % p));
        }
    return r;
}

Mat random_mat(const Field& f, int n, std::mt19937_64& rng) {
    Mat m(f, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.set(i, j, uint8_t(rng() % f.q()));
    return m;
}

}  // namespace

TEST_CASE("product matches plain modular arithmetic over prime fields") {
    std::mt19937_64 rng(7);
    for (int q : {2, 3, 5, 7}) {
        const Field& f = Field::get(q);
        for (int n = 1; n <= 4; ++n)
            for (int trial = 0; trial < 20; ++trial) {
                const Mat a = random_mat(f, n, rng);
                const Mat b = random_mat(f, n, rng);
                CHECK(a * b == naive_mul_prime(a, b));
            }
    }
}

TEST_CASE("ring laws hold over extension fields") {
    std::mt19937_64 rng(11);
    for (int q : {4, 8, 9}) {
        const Field& f = Field::get(q);
        const Mat id = Mat::identity(f, 3);
        for (int trial = 0; trial < 15; ++trial) {
            const Mat a = random_mat(f, 3, rng);
            const Mat b = random_mat(f, 3, rng);
            const Mat c = random_mat(f, 3, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * id == a);
            CHECK(id * a == a);
        }
    }
}

TEST_CASE("inverse round-trips and rejects singular input") {
    std::mt19937_64 rng(13);
    for (int q : {2, 3, 4, 5, 9}) {
        const Field& f = Field::get(q);
        const Mat id = Mat::identity(f, 3);
        int found = 0;
        while (found < 10) {
            const Mat a = random_mat(f, 3, rng);
            if (!a.invertible()) continue;
            ++found;
            CHECK(a * a.inverse() == id);
            CHECK(a.inverse() * a == id);
        }
    }
    const Field& f2 = Field::get(2);
    Mat sing(f2, 2);
    sing.set(0, 0, 1);
    sing.set(1, 0, 1);  // two equal rows
    CHECK_FALSE(sing.invertible());
    CHECK_THROWS_AS(sing.inverse(), input_error);
    CHECK_FALSE(Mat(f2, 3).invertible());  // zero matrix
}

TEST_CASE("powers agree with repeated multiplication") {
    std::mt19937_64 rng(17);
    const Field& f = Field::get(3);
    const Mat a = random_mat(f, 3, rng);
    Mat acc = Mat::identity(f, 3);
    for (uint64_t k = 0; k <= 12; ++k) {
        CHECK(a.pow(k) == acc);
        acc = acc * a;
    }
}

TEST_CASE("from_rows validates shape and codes") {
    const Field& f = Field::get(3);
    CHECK_THROWS_AS(Mat::from_rows(f, {{1, 2}, {0}}), input_error);
    CHECK_THROWS_AS(Mat::from_rows(f, {{1, 3}, {0, 1}}), input_error);   // 3 not a code
    CHECK_THROWS_AS(Mat::from_rows(f, {{1, -1}, {0, 1}}), input_error);  // negative
    CHECK_THROWS_AS(Mat::from_rows(f, {}), input_error);
    const Mat m = Mat::from_rows(f, {{1, 2}, {0, 1}});
    CHECK(m.at(0, 1) == 2);
    CHECK(m.to_rows() == std::vector<std::vector<int>>{{1, 2}, {0, 1}});
}

TEST_CASE("unipotent detection") {
    const Field& f2 = Field::get(2);
    const Field& f3 = Field::get(3);
    CHECK(is_unipotent(Mat::from_rows(f2, {{1, 1}, {0, 1}})));
    CHECK(is_unipotent(Mat::from_rows(f2, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}})));
    CHECK(is_unipotent(Mat::identity(f3, 2)));
    CHECK_FALSE(is_unipotent(Mat::from_rows(f3, {{1, 0}, {0, 2}})));
    // in characteristic two an involution is unipotent: (swap - 1)^2 = 0
    CHECK(is_unipotent(Mat::from_rows(f2, {{0, 1}, {1, 0}})));
    CHECK_FALSE(is_unipotent(Mat::from_rows(f2, {{0, 1}, {1, 1}})));  // order three
    CHECK_FALSE(is_unipotent(Mat::from_rows(f3, {{0, 1}, {2, 0}})));
}

TEST_CASE("mat_less is a strict total order") {
    const Field& f = Field::get(2);
    std::vector<Mat> ms = {Mat::identity(f, 2), Mat::from_rows(f, {{1, 1}, {0, 1}}),
                           Mat::from_rows(f, {{0, 1}, {1, 0}}), Mat(f, 2)};
    for (size_t i = 0; i < ms.size(); ++i) {
        CHECK_FALSE(mat_less(ms[i], ms[i]));
        for (size_t j = 0; j < ms.size(); ++j) {
            if (i == j) continue;
            CHECK(mat_less(ms[i], ms[j]) != mat_less(ms[j], ms[i]));
            CHECK((ms[i] == ms[j]) == (ms[i].key() == ms[j].key()));
        }
    }
}
