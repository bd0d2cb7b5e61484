// SPDX-License-Identifier: Apache-2.0
//
// Test-only quasi-smoothness check in the subset form: for every nonempty
// set J of coordinates, either some monomial in x_J has degree d, or there
// are |J| distinct coordinates e outside J with x^M x_e of degree d, M in x_J.
// Shares no code with the library's condition checks.
#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

namespace naive {

using W = std::array<std::int64_t, 4>;

// target is a non-negative combination of the weights selected by mask
inline bool reachable(const W& a, unsigned mask, std::int64_t target) {
    if (target <= 0 || mask == 0) return false;
    std::vector<char> ok(static_cast<std::size_t>(target) + 1, 0);
    ok[0] = 1;
    for (int i = 0; i < 4; ++i) {
        if (!(mask & (1u << i))) continue;
        for (std::int64_t t = a[i]; t <= target; ++t)
            if (ok[t - a[i]]) ok[t] = 1;
    }
    return ok[target] != 0;
}

inline bool quasismooth(const W& a, std::int64_t d) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (d % std::gcd(a[i], a[j]) != 0) return false;
    for (int skip = 0; skip < 4; ++skip) {
        std::int64_t g = 0;
        for (int i = 0; i < 4; ++i)
            if (i != skip) g = std::gcd(g, a[i]);
        if (g != 1) return false;
    }
    for (int i = 0; i < 4; ++i)
        if (d <= a[i]) return false;
    for (unsigned mask = 1; mask < 16; ++mask) {
        if (reachable(a, mask, d)) continue;
        int need = __builtin_popcount(mask), have = 0;
        for (int e = 0; e < 4; ++e)
            if (!(mask & (1u << e)) && reachable(a, mask, d - a[e])) ++have;
        if (have < need) return false;
    }
    return true;
}

inline std::vector<std::array<std::int64_t, 5>> brute(std::int64_t index, std::int64_t bound) {
    std::vector<std::array<std::int64_t, 5>> out;
    for (std::int64_t a0 = 1; a0 <= bound; ++a0)
        for (std::int64_t a1 = a0; a1 <= bound; ++a1)
            for (std::int64_t a2 = a1; a2 <= bound; ++a2) {
                if (a0 + a1 + a2 <= index) continue;
                for (std::int64_t a3 = a2; a3 <= bound; ++a3) {
                    std::int64_t d = a0 + a1 + a2 + a3 - index;
                    if (quasismooth({a0, a1, a2, a3}, d)) out.push_back({a0, a1, a2, a3, d});
                }
            }
    return out;
}

}  // namespace naive
