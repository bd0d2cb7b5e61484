// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/rational.hpp>

#include "delpezzo/core.hpp"

namespace delpezzo {

using Rational = boost::rational<Int>;

/// Anticanonical self-intersection I^2 d / (a0 a1 a2 a3), exact.
Rational k_squared(const Quintuple& q, Int index);

/// Largest order of a local orbifold group, assuming a general member of the
/// linear system: a vertex P_i lies on the surface iff a_i does not divide d,
/// and an edge whose weights share a factor g > 1 carries points of order g.
Int max_group_order(const Quintuple& q);

struct ObstructionReport {
    Rational k_squared;
    Int group_order = 1;
    Rational k_squared_n;
    bool gmsy = false;    ///< I > 3 a0
    bool spotti = false;  ///< K^2 N >= 12
};

ObstructionReport obstruction_report(const Quintuple& q, Int index);

}  // namespace delpezzo
