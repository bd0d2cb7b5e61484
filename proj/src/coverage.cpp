// SPDX-License-Identifier: Apache-2.0
#include "delpezzo/oracle.hpp"
#include "delpezzo/series.hpp"
#include "delpezzo/tables.hpp"

#include <algorithm>

namespace delpezzo {

std::vector<TypeDiagnosis> type_coverage(Int index, Int bound) {
    auto hits = brute_force(index, bound);
    auto table = instantiate(index);
    std::vector<TypeDiagnosis> out;
    out.reserve(hits.size());
    for (const auto& q : hits) {
        TypeDiagnosis t{q, detect_types(q, index), detect_class(q, index), false};
        t.table_covered =
            std::find(table.quintuples.begin(), table.quintuples.end(), q) != table.quintuples.end() ||
            std::any_of(table.series.begin(), table.series.end(), [&](const Series& s) { return contains(s, q); });
        out.push_back(t);
    }
    return out;
}

}  // namespace delpezzo
