// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "delpezzo/classify.hpp"
#include "delpezzo/conditions.hpp"
#include "delpezzo/series.hpp"

using namespace delpezzo;

namespace {

Series index1_series() {
    Series s;
    s.base = Quintuple(2, 3, 3, 5, 12);
    s.steps = {Step{0, 2, 2, 4, 8}};
    s.modulus = 2;
    return s;
}

Series unit_two_param(const Quintuple& base) {
    Series s;
    s.origin = SeriesClass::class1;
    s.base = base;
    s.steps = {Step{0, 0, 1, 0, 1}, Step{0, 0, 0, 1, 1}};
    return s;
}

std::vector<Series> all_series(Int index) {
    auto c = classify_index(index);
    std::vector<Series> out = c.two_param;
    out.insert(out.end(), c.one_param.begin(), c.one_param.end());
    return out;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("make_series examples") {
    auto s1 = make_series(1, Quintuple(1, 1, 1, 1, 2), 1);
    CHECK(s1.base == Quintuple(1, 1, 1, 1, 2));
    REQUIRE(s1.steps.size() == 2);
    CHECK(s1.steps[0] == Step{0, 0, 1, 0, 1});
    CHECK(s1.steps[1] == Step{0, 0, 0, 1, 1});
    CHECK(s1.origin == SeriesClass::class1);

    auto s6 = make_series(6, Quintuple(1, 3, 3, 4, 9), 3);
    REQUIRE(s6.steps.size() == 1);
    CHECK(s6.steps[0] == Step{0, 0, 3, 3, 6});

    auto s4 = make_series(4, Quintuple(2, 4, 5, 7, 14), 4);
    CHECK(s4.steps[0] == Step{0, 0, 4, 4, 8});
    CHECK(class_modulus(4, Quintuple(2, 4, 5, 7, 14)) == 4);
    CHECK(class_modulus(6, Quintuple(1, 3, 3, 4, 9)) == 3);
}

TEST_CASE("make_series rejects inconsistent input") {
    CHECK_THROWS(make_series(4, Quintuple(1, 1, 1, 1, 2), 1));          // wrong class
    CHECK_THROWS(make_series(6, Quintuple(1, 3, 3, 4, 9), 2));          // wrong modulus
    CHECK_THROWS(make_series(1, Quintuple(1, 2, 3, 5, 10), 1));         // not solid
}

TEST_CASE("expand examples") {
    auto m = expand(index1_series(), 13);
    CHECK(m == std::vector<Quintuple>{Quintuple(2, 3, 3, 5, 12), Quintuple(2, 5, 5, 9, 20), Quintuple(2, 7, 7, 13, 28)});
    auto two = expand(unit_two_param(Quintuple(1, 1, 1, 1, 2)), 2);
    CHECK(two == std::vector<Quintuple>{Quintuple(1, 1, 1, 1, 2), Quintuple(1, 1, 1, 2, 3), Quintuple(1, 1, 2, 2, 4)});
    CHECK(expand(index1_series(), 4).empty());
}

TEST_CASE("contains examples") {
    CHECK(contains(unit_two_param(Quintuple(1, 1, 1, 1, 2)), Quintuple(1, 1, 4, 7, 11)));
    CHECK(contains(index1_series(), Quintuple(2, 5, 5, 9, 20)));
    CHECK_FALSE(contains(index1_series(), Quintuple(2, 4, 4, 7, 16)));
}

TEST_CASE("canonical_key examples") {
    CHECK(canonical_key(unit_two_param(Quintuple(1, 1, 2, 2, 4))) ==
          canonical_key(unit_two_param(Quintuple(1, 1, 1, 1, 2))));
    auto a = make_series(6, Quintuple(1, 3, 3, 4, 9), 3);
    Series b = a;
    b.base = Quintuple(1, 3, 6, 7, 15);
    CHECK(canonical_key(a) == canonical_key(b));
    CHECK(minimize(b).base == a.base);
    Series c = a;
    c.steps = {Step{0, 0, 6, 6, 12}};
    CHECK_FALSE(canonical_key(a) == canonical_key(c));
}

TEST_CASE("every series has base at parameter zero and index-preserving steps") {
    for (Int i = 1; i <= 8; ++i)
        for (const auto& s : all_series(i)) {
            for (const auto& st : s.steps) {
                CHECK(st[4] == st[0] + st[1] + st[2] + st[3]);
                for (std::size_t e = 0; e < 4; ++e) {
                    CHECK(st[e] >= 0);
                    if (s.origin != SeriesClass::tableSeries) CHECK((st[e] == 0 || st[e] == s.modulus));
                }
            }
            std::vector<Int> zero(s.steps.size(), 0);
            CHECK(s.member(zero) == s.base);
            CHECK(s.base.index() == i);
        }
}

TEST_CASE("first five ordered members of every series pass the conditions") {
    for (Int i = 1; i <= 8; ++i)
        for (const auto& s : all_series(i)) {
            Int widest = 0;
            for (const auto& st : s.steps) widest = std::max(widest, *std::max_element(st.begin(), st.begin() + 4));
            auto m = expand(s, s.base.a(3) + 5 * widest);
            REQUIRE(m.size() >= 5);
            for (std::size_t k = 0; k < 5; ++k) CHECK(quasismooth_divisibility(m[k]).accepted());
        }
}

TEST_CASE("expand and contains agree") {
    for (Int i = 1; i <= 6; ++i)
        for (const auto& s : all_series(i)) {
            const Int bound = 90;
            auto m = expand(s, bound);
            CHECK(std::is_sorted(m.begin(), m.end()));
            for (const auto& q : m) CHECK(contains(s, q));
            // shifted neighbours of members are either members or outside the series
            for (const auto& q : m) {
                auto w = q.weights();
                w[3] += 1;
                auto nb = Quintuple::try_make(w[0], w[1], w[2], w[3], q.degree() + 1);
                if (nb && nb->a(3) <= bound)
                    CHECK(contains(s, *nb) == std::binary_search(m.begin(), m.end(), *nb));
            }
        }
}

TEST_CASE("dedup soundness on emitted series") {
    for (Int i = 1; i <= 6; ++i) {
        auto list = all_series(i);
        std::map<SeriesKey, std::vector<Quintuple>> seen;
        for (const auto& s : list) {
            auto key = canonical_key(s);
            auto m = expand(s, 200);
            auto [it, fresh] = seen.emplace(key, m);
            if (!fresh) CHECK(it->second == m);
        }
        for (auto a = seen.begin(); a != seen.end(); ++a)
            for (auto b = std::next(a); b != seen.end(); ++b) CHECK(a->second != b->second);
    }
}

TEST_CASE("minimize rejects a step without a positive weight") {
    Series s = index1_series();
    s.steps = {Step{0, 0, 0, 0, 0}};
    CHECK_THROWS(minimize(s));
}

}
