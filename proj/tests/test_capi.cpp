// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "delpezzo/delpezzo.h"

TEST_CASE("version") { CHECK(std::string(dp_version()) == "1.0.0"); }

TEST_CASE("classification handle") {
    dp_classification* c = nullptr;
    REQUIRE(dp_classify(1, &c) == DP_OK);
    CHECK(dp_classification_index(c) == 1);
    CHECK(dp_classification_series_count(c, 1) == 0);
    CHECK(dp_classification_series_count(c, 0) == 1);
    CHECK(dp_classification_sporadic_count(c) == 22);

    dp_series_info info{};
    REQUIRE(dp_classification_series(c, 0, 0, &info) == DP_OK);
    CHECK(info.origin == DP_CLASS_TABLE);
    CHECK(info.base.a[1] == 3);
    CHECK(info.base.d == 12);
    CHECK(info.step_count == 1);
    CHECK(info.steps[0][3] == 4);
    CHECK(info.modulus == 2);

    dp_quintuple q{};
    REQUIRE(dp_classification_sporadic(c, 0, &q) == DP_OK);
    CHECK(q.a[0] == 1);
    CHECK(q.d == 3);
    CHECK(dp_classification_sporadic(c, 22, &q) == DP_ERR_RANGE);
    CHECK(std::strlen(dp_last_error()) > 0);

    char* text = nullptr;
    REQUIRE(dp_classification_render(c, DP_FORMAT_JSON, &text) == DP_OK);
    CHECK(std::string(text).rfind("{\"index\":1,", 0) == 0);
    dp_string_free(text);

    dp_quintuple_list* members = nullptr;
    REQUIRE(dp_classification_expand(c, 20, &members) == DP_OK);
    CHECK(dp_quintuple_list_size(members) == 16);
    dp_quintuple_list_free(members);
    dp_classification_free(c);
}

TEST_CASE("errors are reported as status codes") {
    dp_classification* c = nullptr;
    CHECK(dp_classify(0, &c) == DP_ERR_ARGUMENT);
    CHECK(c == nullptr);
    CHECK(dp_classify(1, nullptr) == DP_ERR_ARGUMENT);

    dp_series* s = nullptr;
    CHECK(dp_series_parse("{", &s) == DP_ERR_ARGUMENT);
    CHECK(s == nullptr);

    const int64_t w[4] = {1, 1, 1, 1};
    dp_quintuple q{};
    CHECK(dp_quintuple_from_index(w, 4, &q) == DP_ERR_ARGUMENT);
    CHECK(dp_quintuple_from_degree(w, 1, &q) == DP_ERR_ARGUMENT);

    const int64_t big[4] = {INT64_MAX / 2, INT64_MAX / 2, INT64_MAX / 2, INT64_MAX / 2};
    CHECK(dp_quintuple_from_degree(big, INT64_MAX - 1, &q) == DP_ERR_OVERFLOW);
    CHECK(dp_quintuple_list_size(nullptr) == 0);
    dp_classification_free(nullptr);
    dp_series_free(nullptr);
    dp_quintuple_list_free(nullptr);
}

TEST_CASE("series handle") {
    dp_series* s = nullptr;
    const char* json = R"({"base":[2,3,3,5,12],"steps":[[0,2,2,4,8]],"class":"tableSeries"})";
    REQUIRE(dp_series_parse(json, &s) == DP_OK);
    char* back = nullptr;
    REQUIRE(dp_series_to_json(s, &back) == DP_OK);
    CHECK(std::string(back) == json);
    dp_string_free(back);

    dp_quintuple_list* list = nullptr;
    REQUIRE(dp_series_expand(s, 13, &list) == DP_OK);
    CHECK(dp_quintuple_list_size(list) == 3);
    dp_quintuple last{};
    REQUIRE(dp_quintuple_list_get(list, 2, &last) == DP_OK);
    CHECK(last.a[3] == 13);
    CHECK(last.d == 28);
    dp_quintuple_list_free(list);

    dp_quintuple q{{2, 5, 5, 9}, 20};
    int in = 0;
    REQUIRE(dp_series_contains(s, &q, &in) == DP_OK);
    CHECK(in == 1);
    q = dp_quintuple{{2, 4, 4, 7}, 16};
    REQUIRE(dp_series_contains(s, &q, &in) == DP_OK);
    CHECK(in == 0);
    dp_series_free(s);
}

TEST_CASE("check report") {
    const int64_t w[4] = {7, 5, 4, 2};
    dp_quintuple q{};
    REQUIRE(dp_quintuple_from_index(w, 4, &q) == DP_OK);
    CHECK(q.a[0] == 2);
    CHECK(q.d == 14);
    dp_check_report r{};
    REQUIRE(dp_check(&q, &r) == DP_OK);
    CHECK(r.solid == 1);
    CHECK(r.valid == 1);
    CHECK(r.colour == 4);
    CHECK(r.types == DP_TYPE_II);
    CHECK(r.accepted == 1);
    CHECK(r.monomial == 1);
    CHECK(r.table_covered == 0);

    dp_quintuple bad{{2, 4, 6, 9}, 19};
    REQUIRE(dp_check(&bad, &r) == DP_OK);
    CHECK(r.accepted == 0);
    CHECK(r.cond_iv == 0);
    CHECK(r.wf_triples[3] == 0);
}

TEST_CASE("obstruction report") {
    dp_quintuple q{{1, 3, 7, 8}, 15};
    dp_obstruction ob{};
    REQUIRE(dp_obstruction_report(&q, &ob) == DP_OK);
    CHECK(ob.k2_num == 10);
    CHECK(ob.k2_den == 7);
    CHECK(ob.group_order == 8);
    CHECK(ob.k2n_num == 80);
    CHECK(ob.k2n_den == 7);
    CHECK(ob.gmsy == 1);
    CHECK(ob.spotti == 0);
}

TEST_CASE("oracle and verify") {
    dp_quintuple_list* list = nullptr;
    REQUIRE(dp_oracle(1, 20, &list) == DP_OK);
    CHECK(dp_quintuple_list_size(list) == 16);
    dp_quintuple_list_free(list);

    dp_quintuple_list *missing = nullptr, *extra = nullptr;
    REQUIRE(dp_verify(3, 40, &missing, &extra) == DP_OK);
    CHECK(dp_quintuple_list_size(missing) == 0);
    CHECK(dp_quintuple_list_size(extra) == 0);
    dp_quintuple_list_free(missing);
    dp_quintuple_list_free(extra);
}
