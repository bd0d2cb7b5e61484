// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>

#include "delpezzo/oracle.hpp"
#include "naive_oracle.hpp"

using namespace delpezzo;

TEST_SUITE("oracle") {

TEST_CASE("brute_force(1, 20)") {
    auto r = brute_force(1, 20);
    std::vector<Quintuple> expected{
        {1, 1, 1, 1, 3},   {1, 1, 1, 2, 4},   {1, 1, 2, 3, 6},    {1, 2, 3, 5, 10},
        {1, 3, 5, 7, 15},  {1, 3, 5, 8, 16},  {2, 3, 3, 5, 12},   {2, 3, 5, 9, 18},
        {2, 5, 5, 9, 20},  {2, 7, 7, 13, 28}, {2, 9, 9, 17, 36},  {3, 3, 5, 5, 15},
        {3, 5, 7, 11, 25}, {3, 5, 7, 14, 28}, {3, 5, 11, 18, 36}, {9, 15, 17, 20, 60},
    };
    CHECK(r == expected);
}

TEST_CASE("small bounds") {
    CHECK(brute_force(3, 1).empty());
    CHECK(brute_force(2, 1) == std::vector<Quintuple>{Quintuple(1, 1, 1, 1, 2)});
}

TEST_CASE("brute_force(7, 60) contains the index-7 sporadic") {
    auto r = brute_force(7, 60);
    CHECK(std::binary_search(r.begin(), r.end(), Quintuple(11, 13, 21, 38, 76)));
}

TEST_CASE("counts at bound 60") {
    // from an independent enumeration
    const std::size_t expected[] = {34, 2037, 486, 1202, 393, 1449, 312, 1011};
    for (Int i = 1; i <= 8; ++i) CHECK(brute_force(i, 60).size() == expected[i - 1]);
}

TEST_CASE("agrees with the subset criterion") {
    for (Int i = 1; i <= 8; ++i) {
        auto mine = brute_force(i, 30);
        auto ref = naive::brute(i, 30);
        REQUIRE(mine.size() == ref.size());
        for (std::size_t k = 0; k < ref.size(); ++k) CHECK(mine[k].as_array() == ref[k]);
    }
}

TEST_CASE("index consistency and monotonicity") {
    for (Int i = 1; i <= 6; ++i) {
        auto small = brute_force(i, 25), large = brute_force(i, 40);
        CHECK(std::is_sorted(large.begin(), large.end()));
        for (const auto& q : large) CHECK(q.index() == i);
        CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
    }
}

TEST_CASE("type_coverage") {
    auto d1 = type_coverage(1, 20);
    auto it = std::find_if(d1.begin(), d1.end(), [](const auto& t) { return t.q == Quintuple(1, 2, 3, 5, 10); });
    REQUIRE(it != d1.end());
    CHECK(it->types.empty());
    CHECK_FALSE(it->colour.has_value());
    CHECK(it->table_covered);

    auto d2 = type_coverage(2, 10);
    auto jt = std::find_if(d2.begin(), d2.end(), [](const auto& t) { return t.q == Quintuple(1, 1, 1, 1, 2); });
    REQUIRE(jt != d2.end());
    CHECK(jt->types.has(TypeSet::kTypeI));
    CHECK(jt->colour == 1);

    for (Int i = 1; i <= 6; ++i)
        for (const auto& t : type_coverage(i, 60)) CHECK_MESSAGE(!t.uncovered(), t.q.to_string());
}

}
