// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "delpezzo/core.hpp"

namespace delpezzo {

/// Series attached to a colourful representative of the given class (1..6).
///
/// `modulus` must be the lcm of the class-defining weights: lcm(a0,a1) for
/// classes 1, 4 and 5, lcm(a0,a1,a2) for classes 2 and 3 and
/// lcm(I-k, I+k, k) for class 6. Steps:
///   class 1      (0,0,m,0,m) and (0,0,0,m,m)
///   class 2, 3   (0,0,0,m,m)
///   class 4-6    (0,0,m,m,2m)
///
/// Throws std::logic_error when `rep` is not solid or not of the given class,
/// and std::invalid_argument when `modulus` is not the required lcm.
Series make_series(int class_number, const Quintuple& rep, Int modulus);

/// Required modulus for a colourful representative of the given class.
Int class_modulus(int class_number, const Quintuple& rep);

/// Ordered members with a3 <= bound, in lexicographic parameter order.
std::vector<Quintuple> expand(const Series& s, Int bound);

/// Whether q = base + sum(params * steps) for some non-negative parameters.
bool contains(const Series& s, const Quintuple& q);

/// Deterministic identity of a series: its minimal ordered base and the
/// sorted step vectors.
struct SeriesKey {
    std::array<Int, 5> base{};
    std::vector<Step> steps;

    friend bool operator==(const SeriesKey&, const SeriesKey&) = default;
    friend auto operator<=>(const SeriesKey&, const SeriesKey&) = default;
};

SeriesKey canonical_key(const Series& s);

/// Moves the base down along each step while the result stays an ordered
/// quintuple.
Series minimize(const Series& s);

}  // namespace delpezzo
