// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "delpezzo/core.hpp"

namespace delpezzo {

/// Series of one colourful class (1..6) for the given index. Each admissible
/// choice of class-defining weights fixes the modulus m; every candidate
/// with series-defining weights in one period above the ordering boundary
/// is tested for solidity and becomes the base of a series.
///
/// Throws std::invalid_argument for index < 1 or a class outside 1..6.
std::vector<Series> enumerate_class(int class_number, Int index);

/// The complete classification for one index: colourful series merged with
/// the table data, deduplicated and sorted.
Classification classify_index(Int index);

/// Every quintuple of the classification with a3 <= bound, sorted and unique.
std::vector<Quintuple> expand_classification(const Classification& c, Int bound);

struct VerifyResult {
    std::vector<Quintuple> missing;  ///< found by brute force, not by the classifier
    std::vector<Quintuple> extra;    ///< produced by the classifier, rejected by brute force

    bool ok() const noexcept { return missing.empty() && extra.empty(); }
};

/// Compares the expanded classification against the brute-force oracle.
VerifyResult verify(Int index, Int bound);

}  // namespace delpezzo
