// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "delpezzo/core.hpp"

namespace delpezzo {

/// slope * n + intercept
struct Linear {
    Int slope = 0;
    Int intercept = 0;

    Int at(Int n) const { return checked_add(checked_mul(slope, n), intercept); }
};

/// One row of the known one-parameter families (parameter n >= 1).
struct TableRow {
    std::array<Linear, 4> weights;
    Linear degree;
    Linear index;
    std::string_view source_label;
};

/// One row of the known sporadic cases.
struct SporadicRow {
    std::array<Int, 4> weights;
    Int degree;
    Int index;
    std::string_view source_label;
};

std::span<const TableRow> table_rows();
std::span<const SporadicRow> sporadic_rows();

/// FNV-1a over the numeric content of both tables; pins the transcription.
std::uint64_t tables_checksum();

struct TableInstance {
    std::vector<Series> series;
    std::vector<Quintuple> quintuples;
};

/// Table data for one index: constant-index rows become one-parameter
/// series based at n = 1, variable-index rows are evaluated at the n solving
/// index(n) = I (weights sorted), sporadic rows are filtered by index.
/// Throws std::invalid_argument for index < 1.
TableInstance instantiate(Int index);

/// Whether q is a member of the instantiated table data for its index.
bool table_covers(const Quintuple& q);

}  // namespace delpezzo
