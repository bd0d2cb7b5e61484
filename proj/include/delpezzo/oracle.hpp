// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "delpezzo/conditions.hpp"
#include "delpezzo/core.hpp"

namespace delpezzo {

/// Every ordered quintuple with weights <= bound and the given index that
/// passes the monomial-form conditions, sorted lexicographically. Does not
/// consult classes, series or tables.
std::vector<Quintuple> brute_force(Int index, Int bound);

struct TypeDiagnosis {
    Quintuple q;
    TypeSet types;
    std::optional<int> colour;
    bool table_covered = false;

    /// No type I-III and not in the tables.
    bool uncovered() const noexcept { return types.empty() && !table_covered; }
};

std::vector<TypeDiagnosis> type_coverage(Int index, Int bound);

}  // namespace delpezzo
