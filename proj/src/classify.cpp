// SPDX-License-Identifier: Apache-2.0
#include "delpezzo/classify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "delpezzo/conditions.hpp"
#include "delpezzo/oracle.hpp"
#include "delpezzo/series.hpp"
#include "delpezzo/tables.hpp"

namespace delpezzo {

namespace {

void emit_if_solid(std::vector<Series>& out, int class_number, Int index, Int m, const Quintuple::Weights& w, Int d) {
    auto q = Quintuple::try_make(w[0], w[1], w[2], w[3], d);
    if (!q || !is_solid(*q, index)) return;
    out.push_back(make_series(class_number, *q, m));
}

}  // namespace

std::vector<Series> enumerate_class(int class_number, Int index) {
    if (index < 1) throw std::invalid_argument("enumerate_class: index must be positive");
    const Int I = index;
    std::vector<Series> out;
    switch (class_number) {
        case 1:
            for (Int a0 = 1; a0 <= I / 2; ++a0) {
                const Int a1 = I - a0;
                const Int m = lcm(a0, a1);
                for (Int a2 = a1; a2 < a1 + m; ++a2)
                    for (Int a3 = a2; a3 < a2 + m; ++a3) emit_if_solid(out, 1, I, m, {a0, a1, a2, a3}, a2 + a3);
            }
            break;
        case 2:
            for (Int a0 = 1; a0 <= I / 2; ++a0) {
                for (Int a1 = a0; a1 <= I - a0 - 1; ++a1) {
                    const Int a2 = I - a0;
                    const Int m = lcm(a0, a1, a2);
                    for (Int a3 = a2; a3 < a2 + m; ++a3) emit_if_solid(out, 2, I, m, {a0, a1, a2, a3}, a1 + a3);
                }
            }
            break;
        case 3:
            for (Int a1 = 2; a1 <= I / 2; ++a1) {
                for (Int a0 = 1; a0 <= a1 - 1; ++a0) {
                    const Int a2 = I - a1;
                    const Int m = lcm(a0, a1, a2);
                    for (Int a3 = a2; a3 < a2 + m; ++a3) emit_if_solid(out, 3, I, m, {a0, a1, a2, a3}, a0 + a3);
                }
            }
            break;
        case 4:
            for (Int k = std::max<Int>(ceil_div(I, 3), 1); k <= I - 1; ++k) {
                const Int a0 = I - k, a1 = 2 * k;
                const Int m = lcm(a0, a1);
                for (Int a2 = a1; a2 < a1 + m; ++a2) emit_if_solid(out, 4, I, m, {a0, a1, a2, a2 + k}, 2 * (a2 + k));
            }
            break;
        case 5:
            for (Int k = 1; k <= ceil_div(I, 3) - 1; ++k) {
                const Int a0 = 2 * k, a1 = I - k;
                const Int m = lcm(a0, a1);
                for (Int a2 = a1; a2 < a1 + m; ++a2) emit_if_solid(out, 5, I, m, {a0, a1, a2, a2 + k}, 2 * (a2 + k));
            }
            break;
        case 6:
            for (Int k = 1; k <= I - 1; ++k) {
                const Int a0 = I - k, a1 = I + k;
                const Int m = lcm(a0, a1, k);
                for (Int a2 = a1; a2 < a1 + m; ++a2) emit_if_solid(out, 6, I, m, {a0, a1, a2, a2 + k}, a1 + 2 * a2);
            }
            break;
        default: throw std::invalid_argument("enumerate_class: class number must be in 1..6");
    }
    return out;
}

Classification classify_index(Int index) {
    if (index < 1) throw std::invalid_argument("classify_index: index must be positive");

    std::map<SeriesKey, Series> series;
    auto add_series = [&](Series s) {
        // Solidity selected the base; full validity is asserted as well.
        bool ok = s.origin == SeriesClass::tableSeries ? quasismooth_divisibility(s.base).accepted()
                                                       : is_valid(s.base, index);
        if (!ok)
            throw std::logic_error("classify_index: emitted base " + s.base.to_string() + " is not valid");
        series.try_emplace(canonical_key(s), std::move(s));
    };
    for (int c = 1; c <= 6; ++c)
        for (auto& s : enumerate_class(c, index)) add_series(std::move(s));

    auto table = instantiate(index);
    for (auto& s : table.series) add_series(std::move(s));

    Classification out;
    out.index = index;
    for (auto& [key, s] : series) {
        if (s.parameter_count() == 2)
            out.two_param.push_back(s);
        else
            out.one_param.push_back(s);
    }

    std::sort(table.quintuples.begin(), table.quintuples.end());
    table.quintuples.erase(std::unique(table.quintuples.begin(), table.quintuples.end()), table.quintuples.end());
    for (const auto& q : table.quintuples) {
        // A few table instances break well-formedness; they are not emitted.
        if (!quasismooth_divisibility(q).accepted()) continue;
        bool absorbed = std::any_of(series.begin(), series.end(), [&](const auto& kv) { return contains(kv.second, q); });
        if (!absorbed) out.sporadic.push_back(q);
    }
    return out;
}

std::vector<Quintuple> expand_classification(const Classification& c, Int bound) {
    std::vector<Quintuple> out;
    for (const auto* list : {&c.two_param, &c.one_param})
        for (const auto& s : *list) {
            auto members = expand(s, bound);
            out.insert(out.end(), members.begin(), members.end());
        }
    for (const auto& q : c.sporadic)
        if (q.a(3) <= bound) out.push_back(q);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VerifyResult verify(Int index, Int bound) {
    auto mine = expand_classification(classify_index(index), bound);
    auto truth = brute_force(index, bound);
    VerifyResult r;
    std::set_difference(truth.begin(), truth.end(), mine.begin(), mine.end(), std::back_inserter(r.missing));
    std::set_difference(mine.begin(), mine.end(), truth.begin(), truth.end(), std::back_inserter(r.extra));
    return r;
}

}  // namespace delpezzo
