// SPDX-License-Identifier: Apache-2.0
#include "delpezzo/oracle.hpp"

#include <stdexcept>

namespace delpezzo {

// Only the monomial-form conditions are used here; the classifier's
// divisibility form, series and tables stay out of this file.
std::vector<Quintuple> brute_force(Int index, Int bound) {
    if (index < 1) throw std::invalid_argument("brute_force: index must be positive");
    if (bound < 1) throw std::invalid_argument("brute_force: bound must be positive");
    std::vector<Quintuple> out;
    for (Int a0 = 1; a0 <= bound; ++a0)
        for (Int a1 = a0; a1 <= bound; ++a1)
            for (Int a2 = a1; a2 <= bound; ++a2) {
                // d - a3 = a0 + a1 + a2 - I must be positive
                if (a0 + a1 + a2 <= index) continue;
                for (Int a3 = a2; a3 <= bound; ++a3) {
                    Int d = a0 + a1 + a2 + a3 - index;
                    auto q = Quintuple::try_make(a0, a1, a2, a3, d);
                    if (q && quasismooth_monomial(*q)) out.push_back(*q);
                }
            }
    return out;
}

}  // namespace delpezzo
