#include <doctest.h>

#include <algorithm>
#include <set>

#include "flagcr/errors.hpp"
#include "flagcr/group.hpp"

using namespace flagcr;

namespace {

GroupSpec spec_of(int q, int n, std::vector<std::vector<std::vector<int>>> rows,
                  std::string name = "t") {
    const Field& f = Field::get(q);
    std::vector<Mat> gens;
    for (auto& r : rows) gens.push_back(Mat::from_rows(f, r));
    return GroupSpec::make(f, n, std::move(gens), std::move(name));
}

}  // namespace

TEST_CASE("closures of standard generating sets have the right orders") {
    // transvection + swap generate all of GL_2(F_2)
    const GroupClosure g2 = closure(spec_of(2, 2, {{{1, 1}, {0, 1}}, {{0, 1}, {1, 0}}}));
    CHECK(g2.complete);
    CHECK(g2.order == 6);
    CHECK(g2.elements.front() == Mat::identity(Field::get(2), 2));

    // transvection + cyclic permutation generate GL_3(F_2)
    const GroupClosure g3 = closure(spec_of(
        2, 3, {{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}}));
    CHECK(g3.complete);
    CHECK(g3.order == 168);

    // a full Jordan block over F_2 squares to I + E13, so it has order 4
    const GroupClosure j3 = closure(spec_of(2, 3, {{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}}));
    CHECK(j3.order == 4);

    // the two elementary transvections generate the full unitriangular group
    const GroupClosure u3 = closure(spec_of(
        2, 3, {{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}}));
    CHECK(u3.order == 8);

    // every element of a closure is a product of generators, so closure is a group:
    // check closure under multiplication and inverses for the small case
    for (const Mat& a : g2.elements) {
        CHECK(g2.contains(a.inverse()));
        for (const Mat& b : g2.elements) CHECK(g2.contains(a * b));
    }
}

TEST_CASE("closure is deterministic and identity-first") {
    const auto spec = spec_of(3, 2, {{{1, 1}, {0, 1}}, {{2, 0}, {0, 1}}});
    const GroupClosure a = closure(spec);
    const GroupClosure b = closure(spec);
    REQUIRE(a.order == b.order);
    for (size_t i = 0; i < a.elements.size(); ++i) CHECK(a.elements[i] == b.elements[i]);
    CHECK(a.elements.front() == Mat::identity(Field::get(3), 2));
}

TEST_CASE("closure cap yields an incomplete result") {
    const GroupClosure g = closure(
        spec_of(2, 3, {{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}}),
        /*cap=*/10);
    CHECK_FALSE(g.complete);
    CHECK(g.elements.size() == 10);  // the walk stops at the cap
}

TEST_CASE("ambient enumeration matches the group order formula") {
    const GroupClosure gl22 = enumerate_gl(Field::get(2), 2);
    CHECK(gl22.complete);
    CHECK(gl22.order == 6);
    const GroupClosure gl32 = enumerate_gl(Field::get(3), 2);
    CHECK(gl32.order == 48);
    const GroupClosure gl23 = enumerate_gl(Field::get(2), 3);
    CHECK(gl23.order == 168);
    std::set<std::string> keys;
    for (const Mat& m : gl23.elements) {
        CHECK(m.invertible());
        keys.insert(m.key());
    }
    CHECK(keys.size() == 168);
    // 3^16 candidate matrices exceed the default scan cap
    CHECK_THROWS_AS(enumerate_gl(Field::get(3), 4), cap_error);
}

TEST_CASE("normality is decided by conjugating generators") {
    const GroupClosure u3 = closure(spec_of(
        2, 3, {{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}}));
    const GroupClosure j3 = closure(spec_of(2, 3, {{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}}));
    CHECK(is_normal_in(j3, u3));

    const GroupClosure s3 = closure(spec_of(2, 2, {{{1, 1}, {0, 1}}, {{0, 1}, {1, 0}}}));
    const GroupClosure c2 = closure(spec_of(2, 2, {{{1, 1}, {0, 1}}}));
    CHECK_FALSE(is_normal_in(c2, s3));           // a 2-cycle is not normal in S_3
    const GroupClosure c3 = closure(spec_of(2, 2, {{{0, 1}, {1, 1}}}));
    CHECK(c3.order == 3);
    CHECK(is_normal_in(c3, s3));                 // index-2 subgroup

    // containment precondition
    const GroupClosure j2 = closure(spec_of(2, 2, {{{1, 1}, {0, 1}}}));
    CHECK_THROWS_AS(is_normal_in(j2, c3), input_error);
}

TEST_CASE("small generating sets regenerate the group") {
    const GroupClosure gl23 = enumerate_gl(Field::get(2), 3);
    const std::vector<Mat> gens = small_generating_set(gl23);
    CHECK(gens.size() <= 5);  // greedy, not minimal
    const GroupClosure re = closure(GroupSpec::make(Field::get(2), 3, gens));
    CHECK(re.order == gl23.order);

    const GroupClosure trivial =
        GroupClosure::from_elements({Mat::identity(Field::get(2), 2)});
    const std::vector<Mat> tg = small_generating_set(trivial);
    REQUIRE(tg.size() == 1);  // identity kept so specs stay valid
    CHECK(tg.front() == Mat::identity(Field::get(2), 2));
}

TEST_CASE("group specs validate their generators") {
    const Field& f = Field::get(2);
    CHECK_THROWS_AS(GroupSpec::make(f, 2, {}), input_error);
    CHECK_THROWS_AS(GroupSpec::make(f, 2, {Mat(f, 2)}), input_error);  // singular
    CHECK_THROWS_AS(GroupSpec::make(f, 3, {Mat::identity(f, 2)}), input_error);  // size
}

TEST_CASE("from_elements requires the identity and indexes lookups") {
    const Field& f = Field::get(2);
    const Mat id = Mat::identity(f, 2);
    const Mat t = Mat::from_rows(f, {{1, 1}, {0, 1}});
    CHECK_THROWS_AS(GroupClosure::from_elements({t}), verification_error);
    const GroupClosure g = GroupClosure::from_elements({id, t});
    CHECK(g.order == 2);
    CHECK(g.complete);
    CHECK(g.index_of(t) >= 0);
    CHECK(g.index_of(Mat::from_rows(f, {{0, 1}, {1, 0}})) == -1);
}
