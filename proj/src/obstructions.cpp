// SPDX-License-Identifier: Apache-2.0
#include "delpezzo/obstructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "delpezzo/conditions.hpp"

namespace delpezzo {

Rational k_squared(const Quintuple& q, Int index) {
    if (index != q.index()) throw std::invalid_argument("k_squared: index does not match the quintuple");
    Int num = checked_mul(checked_mul(index, index), q.degree());
    Int den = checked_mul(checked_mul(q.a(0), q.a(1)), checked_mul(q.a(2), q.a(3)));
    return Rational(num, den);
}

Int max_group_order(const Quintuple& q) {
    Int n = 1;
    for (int i = 0; i < 4; ++i)
        if (q.degree() % q.a(i) != 0) n = std::max(n, q.a(i));
    for (auto [i, j] : kPairs) {
        Int g = gcd(q.a(i), q.a(j));
        if (g > 1) n = std::max(n, g);
    }
    return n;
}

ObstructionReport obstruction_report(const Quintuple& q, Int index) {
    ObstructionReport r;
    r.k_squared = k_squared(q, index);
    r.group_order = max_group_order(q);
    r.k_squared_n = Rational(checked_mul(r.k_squared.numerator(), r.group_order), r.k_squared.denominator());
    r.gmsy = index > 3 * q.a(0);
    r.spotti = r.k_squared_n >= Rational(12);
    return r;
}

}  // namespace delpezzo
