// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <set>

#include "delpezzo/conditions.hpp"
#include "delpezzo/series.hpp"
#include "delpezzo/tables.hpp"
#include "golden.hpp"

using namespace delpezzo;

namespace {

bool has(const std::vector<Quintuple>& v, const Quintuple& q) { return std::find(v.begin(), v.end(), q) != v.end(); }

}  // namespace

TEST_SUITE("tables") {

TEST_CASE("row counts and checksum") {
    CHECK(table_rows().size() == 35);
    CHECK(sporadic_rows().size() == 63);
    CHECK(std::count_if(sporadic_rows().begin(), sporadic_rows().end(), [](const auto& r) { return r.index == 1; }) == 17);
    CHECK(tables_checksum() == TABLES_CHECKSUM);
}

TEST_CASE("every row keeps degree = sum of weights - index") {
    for (const auto& r : table_rows())
        for (Int n = 1; n <= 5; ++n) {
            Int sum = 0;
            for (const auto& w : r.weights) {
                CHECK(w.at(n) >= 1);
                sum += w.at(n);
            }
            CHECK(r.degree.at(n) == sum - r.index.at(n));
        }
    for (const auto& r : sporadic_rows()) {
        CHECK(r.degree == r.weights[0] + r.weights[1] + r.weights[2] + r.weights[3] - r.index);
        CHECK(std::is_sorted(r.weights.begin(), r.weights.end()));
    }
}

TEST_CASE("instantiate(1)") {
    auto inst = instantiate(1);
    REQUIRE(inst.series.size() == 1);
    CHECK(inst.series[0].base == Quintuple(2, 3, 3, 5, 12));
    CHECK(inst.series[0].steps[0] == Step{0, 2, 2, 4, 8});
    CHECK(inst.quintuples.size() == 22);
    for (auto q : {Quintuple(1, 1, 1, 1, 3), Quintuple(1, 1, 1, 2, 4), Quintuple(1, 1, 2, 3, 6),
                   Quintuple(1, 2, 3, 5, 10), Quintuple(1, 3, 5, 7, 15)})
        CHECK(has(inst.quintuples, q));
}

TEST_CASE("instantiate examples at other indices") {
    CHECK(has(instantiate(2).quintuples, Quintuple(2, 3, 4, 5, 12)));
    CHECK(has(instantiate(5).quintuples, Quintuple(6, 7, 9, 10, 27)));
    CHECK(has(instantiate(7).quintuples, Quintuple(11, 13, 21, 38, 76)));
    CHECK(instantiate(8).series.empty());
    CHECK_THROWS(instantiate(0));
}

TEST_CASE("constant-index rows start at the first ordered member") {
    auto inst = instantiate(4);
    std::set<std::array<Int, 5>> bases;
    for (const auto& s : inst.series) bases.insert(s.base.as_array());
    CHECK(bases.count({6, 9, 11, 11, 33}));
    CHECK(has(instantiate(2).quintuples, Quintuple(3, 3, 4, 4, 12)));
    CHECK(has(instantiate(4).quintuples, Quintuple(5, 6, 8, 9, 24)));
    CHECK(has(instantiate(6).quintuples, Quintuple(8, 9, 11, 13, 35)));
}

TEST_CASE("instantiated data is quasi-smooth apart from three printed instances") {
    // n = 1 instances of three rows whose second and fourth weights share
    // the factor 2 while the degree is odd.
    const std::set<std::array<Int, 5>> broken{{6, 7, 9, 10, 27}, {7, 22, 33, 46, 99}, {7, 30, 45, 64, 135}};
    for (Int i = 1; i <= 12; ++i) {
        auto inst = instantiate(i);
        for (const auto& q : inst.quintuples) {
            CHECK(q.index() == i);
            CHECK_MESSAGE(quasismooth_monomial(q) == !broken.count(q.as_array()), q.to_string());
        }
        for (const auto& s : inst.series)
            for (const auto& q : expand(s, s.base.a(3) + 200)) CHECK(quasismooth_monomial(q));
    }
}

TEST_CASE("constant-index series reappear in the small-index tables") {
    auto rows = golden::load(TEST_DATA_DIR "/small_index_tables.txt");
    for (Int i : {1, 2, 4, 6}) {
        auto gold = golden::expand(rows, i, 150);
        auto inst = instantiate(i);
        CHECK(!inst.series.empty());
        for (const auto& s : inst.series)
            for (const auto& q : expand(s, 150)) CHECK_MESSAGE(gold.count(q.as_array()), q.to_string());
    }
}

TEST_CASE("table_covers") {
    CHECK(table_covers(Quintuple(1, 2, 3, 5, 10)));
    CHECK(table_covers(Quintuple(2, 5, 5, 9, 20)));
    CHECK_FALSE(table_covers(Quintuple(2, 4, 5, 7, 14)));
}

}
