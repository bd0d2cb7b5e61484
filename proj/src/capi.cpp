// SPDX-License-Identifier: Apache-2.0
#include "delpezzo/delpezzo.h"

#include <cstdlib>
#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <string>

#include "delpezzo/classify.hpp"
#include "delpezzo/conditions.hpp"
#include "delpezzo/emit.hpp"
#include "delpezzo/obstructions.hpp"
#include "delpezzo/oracle.hpp"
#include "delpezzo/series.hpp"
#include "delpezzo/tables.hpp"

struct dp_classification {
    delpezzo::Classification value;
};

struct dp_series {
    delpezzo::Series value;
};

struct dp_quintuple_list {
    std::vector<delpezzo::Quintuple> items;
};

namespace {

using delpezzo::Int;
using delpezzo::Quintuple;

thread_local std::string g_last_error;

dp_status fail(dp_status s, const std::string& msg) {
    g_last_error = msg;
    return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
dp_status guarded(F&& f) noexcept {
    try {
        f();
        return DP_OK;
    } catch (const std::overflow_error& e) {
        return fail(DP_ERR_OVERFLOW, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(DP_ERR_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(DP_ERR_RANGE, e.what());
    } catch (const std::exception& e) {
        return fail(DP_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(DP_ERR_INTERNAL, "unknown error");
    }
}

void require(const void* p, const char* what) {
    if (!p) throw std::invalid_argument(std::string(what) + " must not be null");
}

dp_quintuple to_c(const Quintuple& q) {
    dp_quintuple out{};
    for (std::size_t i = 0; i < 4; ++i) out.a[i] = q.a(i);
    out.d = q.degree();
    return out;
}

Quintuple from_c(const dp_quintuple* q) {
    require(q, "quintuple");
    return Quintuple(q->a[0], q->a[1], q->a[2], q->a[3], q->d);
}

dp_series_info info_of(const delpezzo::Series& s) {
    dp_series_info info{};
    info.origin = static_cast<int>(s.origin);
    info.base = to_c(s.base);
    info.step_count = s.steps.size();
    for (std::size_t p = 0; p < s.steps.size() && p < 2; ++p)
        for (std::size_t e = 0; e < 5; ++e) info.steps[p][e] = s.steps[p][e];
    info.modulus = s.modulus;
    return info;
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

delpezzo::Format to_format(dp_format f) {
    switch (f) {
        case DP_FORMAT_TEXT: return delpezzo::Format::text;
        case DP_FORMAT_JSON: return delpezzo::Format::json;
        case DP_FORMAT_CSV: return delpezzo::Format::csv;
        case DP_FORMAT_LATEX: return delpezzo::Format::latex;
    }
    throw std::invalid_argument("unknown output format");
}

const std::vector<delpezzo::Series>& series_list(const dp_classification* c, int two_parameter) {
    return two_parameter ? c->value.two_param : c->value.one_param;
}

}  // namespace

extern "C" {

const char* dp_version(void) { return "1.0.0"; }

const char* dp_last_error(void) { return g_last_error.c_str(); }

void dp_string_free(char* s) { std::free(s); }

size_t dp_quintuple_list_size(const dp_quintuple_list* list) { return list ? list->items.size() : 0; }

dp_status dp_quintuple_list_get(const dp_quintuple_list* list, size_t i, dp_quintuple* out) {
    return guarded([&] {
        require(list, "list");
        require(out, "out");
        if (i >= list->items.size()) throw std::out_of_range("quintuple list position out of range");
        *out = to_c(list->items[i]);
    });
}

void dp_quintuple_list_free(dp_quintuple_list* list) { delete list; }

dp_status dp_quintuple_from_index(const int64_t weights[4], int64_t index, dp_quintuple* out) {
    return guarded([&] {
        require(weights, "weights");
        require(out, "out");
        if (index < 1) throw std::invalid_argument("index must be positive");
        *out = to_c(Quintuple::from_index({weights[0], weights[1], weights[2], weights[3]}, index));
    });
}

dp_status dp_quintuple_from_degree(const int64_t weights[4], int64_t degree, dp_quintuple* out) {
    return guarded([&] {
        require(weights, "weights");
        require(out, "out");
        Quintuple::Weights w{weights[0], weights[1], weights[2], weights[3]};
        std::sort(w.begin(), w.end());
        *out = to_c(Quintuple(w, degree));
    });
}

dp_status dp_classify(int64_t index, dp_classification** out) {
    return guarded([&] {
        require(out, "out");
        *out = nullptr;
        *out = new dp_classification{delpezzo::classify_index(index)};
    });
}

void dp_classification_free(dp_classification* c) { delete c; }

int64_t dp_classification_index(const dp_classification* c) { return c ? c->value.index : 0; }

size_t dp_classification_series_count(const dp_classification* c, int two_parameter) {
    return c ? series_list(c, two_parameter).size() : 0;
}

dp_status dp_classification_series(const dp_classification* c, int two_parameter, size_t i, dp_series_info* out) {
    return guarded([&] {
        require(c, "classification");
        require(out, "out");
        const auto& list = series_list(c, two_parameter);
        if (i >= list.size()) throw std::out_of_range("series position out of range");
        *out = info_of(list[i]);
    });
}

size_t dp_classification_sporadic_count(const dp_classification* c) { return c ? c->value.sporadic.size() : 0; }

dp_status dp_classification_sporadic(const dp_classification* c, size_t i, dp_quintuple* out) {
    return guarded([&] {
        require(c, "classification");
        require(out, "out");
        if (i >= c->value.sporadic.size()) throw std::out_of_range("sporadic position out of range");
        *out = to_c(c->value.sporadic[i]);
    });
}

dp_status dp_classification_render(const dp_classification* c, dp_format format, char** out) {
    return guarded([&] {
        require(c, "classification");
        require(out, "out");
        *out = copy_string(delpezzo::render(c->value, to_format(format)));
    });
}

dp_status dp_classification_render_members(const dp_classification* c, dp_format format, int64_t bound,
                                           char** out) {
    return guarded([&] {
        require(c, "classification");
        require(out, "out");
        if (bound < 1) throw std::invalid_argument("bound must be positive");
        *out = copy_string(delpezzo::render_with_members(c->value, to_format(format), bound));
    });
}

dp_status dp_classification_expand(const dp_classification* c, int64_t bound, dp_quintuple_list** out) {
    return guarded([&] {
        require(c, "classification");
        require(out, "out");
        *out = new dp_quintuple_list{delpezzo::expand_classification(c->value, bound)};
    });
}

dp_status dp_series_parse(const char* json, dp_series** out) {
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        *out = nullptr;
        *out = new dp_series{delpezzo::series_from_json(json)};
    });
}

void dp_series_free(dp_series* s) { delete s; }

dp_status dp_series_info_get(const dp_series* s, dp_series_info* out) {
    return guarded([&] {
        require(s, "series");
        require(out, "out");
        *out = info_of(s->value);
    });
}

dp_status dp_series_to_json(const dp_series* s, char** out) {
    return guarded([&] {
        require(s, "series");
        require(out, "out");
        *out = copy_string(delpezzo::series_to_json(s->value));
    });
}

dp_status dp_series_expand(const dp_series* s, int64_t bound, dp_quintuple_list** out) {
    return guarded([&] {
        require(s, "series");
        require(out, "out");
        if (bound < 1) throw std::invalid_argument("bound must be positive");
        *out = new dp_quintuple_list{delpezzo::expand(s->value, bound)};
    });
}

dp_status dp_series_contains(const dp_series* s, const dp_quintuple* q, int* out) {
    return guarded([&] {
        require(s, "series");
        require(out, "out");
        *out = delpezzo::contains(s->value, from_c(q)) ? 1 : 0;
    });
}

dp_status dp_check(const dp_quintuple* q, dp_check_report* out) {
    return guarded([&] {
        require(out, "out");
        const Quintuple quint = from_c(q);
        const Int index = quint.index();
        auto r = delpezzo::quasismooth_divisibility(quint);
        dp_check_report c{};
        c.index = index;
        for (std::size_t p = 0; p < 6; ++p) {
            c.wf_pairs[p] = r.wf_pairs[p];
            c.cond_v[p] = r.cond_v[p];
            c.cond_vi[p] = r.cond_vi[p];
        }
        for (std::size_t t = 0; t < 4; ++t) c.wf_triples[t] = r.wf_triples[t];
        c.nondegenerate = r.nondegenerate;
        c.cond_iv = r.cond_iv;
        c.accepted = r.accepted();
        c.monomial = delpezzo::quasismooth_monomial(quint);
        c.types = r.types.bits;
        c.colour = r.colour.value_or(0);
        c.solid = delpezzo::is_solid(quint, index);
        c.valid = delpezzo::is_valid(quint, index);
        c.table_covered = delpezzo::table_covers(quint);
        *out = c;
    });
}

dp_status dp_obstruction_report(const dp_quintuple* q, dp_obstruction* out) {
    return guarded([&] {
        require(out, "out");
        const Quintuple quint = from_c(q);
        auto r = delpezzo::obstruction_report(quint, quint.index());
        *out = dp_obstruction{r.k_squared.numerator(), r.k_squared.denominator(), r.group_order,
                              r.k_squared_n.numerator(), r.k_squared_n.denominator(), r.gmsy, r.spotti};
    });
}

dp_status dp_oracle(int64_t index, int64_t bound, dp_quintuple_list** out) {
    return guarded([&] {
        require(out, "out");
        *out = new dp_quintuple_list{delpezzo::brute_force(index, bound)};
    });
}

dp_status dp_verify(int64_t index, int64_t bound, dp_quintuple_list** missing, dp_quintuple_list** extra) {
    return guarded([&] {
        require(missing, "missing");
        require(extra, "extra");
        auto r = delpezzo::verify(index, bound);
        *missing = new dp_quintuple_list{std::move(r.missing)};
        *extra = new dp_quintuple_list{std::move(r.extra)};
    });
}

}  // extern "C"
