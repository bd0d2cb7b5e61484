// SPDX-License-Identifier: Apache-2.0
#include "delpezzo/series.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "delpezzo/conditions.hpp"

namespace delpezzo {

Int class_modulus(int class_number, const Quintuple& rep) {
    switch (class_number) {
        case 1:
        case 4:
        case 5: return lcm(rep.a(0), rep.a(1));
        case 2:
        case 3: return lcm(rep.a(0), rep.a(1), rep.a(2));
        case 6: {
            Int k = rep.a(3) - rep.a(2);
            return lcm(rep.a(0), rep.a(1), k);
        }
        default: throw std::invalid_argument("class number must be in 1..6");
    }
}

Series make_series(int class_number, const Quintuple& rep, Int modulus) {
    const Int index = rep.index();
    if (!is_solid(rep, index)) throw std::logic_error("make_series: representative " + rep.to_string() + " is not solid");
    if (detect_class(rep, index) != class_number)
        throw std::logic_error("make_series: representative " + rep.to_string() + " is not of class " +
                               std::to_string(class_number));
    if (modulus != class_modulus(class_number, rep))
        throw std::invalid_argument("make_series: modulus is not the lcm of the class-defining weights");

    const Int m = modulus;
    Series s;
    s.origin = colourful_class(class_number);
    s.base = rep;
    s.modulus = m;
    switch (class_number) {
        case 1:
            s.steps = {{0, 0, m, 0, m}, {0, 0, 0, m, m}};
            break;
        case 2:
        case 3:
            s.steps = {{0, 0, 0, m, m}};
            break;
        default:
            s.steps = {{0, 0, m, m, checked_mul(2, m)}};
            break;
    }
    return s;
}

namespace {

// Largest parameter value for step `st` that can keep every weight <= bound,
// given the starting vector `from`. Steps with no positive weight entry are
// rejected since they generate unbounded families at a fixed a3.
Int parameter_limit(const std::array<Int, 5>& from, const Step& st, Int bound) {
    Int limit = std::numeric_limits<Int>::max();
    bool any = false;
    for (std::size_t e = 0; e < 4; ++e) {
        if (st[e] <= 0) continue;
        any = true;
        Int room = bound - from[e];
        if (room < 0) return -1;
        limit = std::min(limit, room / st[e]);
    }
    if (!any) throw std::invalid_argument("series step has no positive weight entry");
    return limit;
}

template <class Visit>
void for_each_bounded(const Series& s, Int bound, Visit&& visit) {
    const auto base = s.base.as_array();
    if (s.steps.empty()) {
        if (s.base.a(3) <= bound) visit(s.base);
        return;
    }
    if (s.steps.size() > 2) throw std::invalid_argument("series with more than two parameters");
    const Int lx = parameter_limit(base, s.steps[0], bound);
    if (s.steps.size() == 1) {
        for (Int x = 0; x <= lx; ++x) {
            Int params[] = {x};
            if (auto q = s.member(params); q && q->a(3) <= bound) visit(*q);
        }
        return;
    }
    const Int ly = parameter_limit(base, s.steps[1], bound);
    for (Int x = 0; x <= lx; ++x) {
        for (Int y = 0; y <= ly; ++y) {
            Int params[] = {x, y};
            if (auto q = s.member(params); q && q->a(3) <= bound) visit(*q);
        }
    }
}

}  // namespace

std::vector<Quintuple> expand(const Series& s, Int bound) {
    std::vector<Quintuple> out;
    if (bound < s.base.a(3)) return out;
    for_each_bounded(s, bound, [&](const Quintuple& q) { out.push_back(q); });
    return out;
}

bool contains(const Series& s, const Quintuple& q) {
    // Every member that could equal q has all weights <= q's largest weight.
    bool found = false;
    if (q.a(3) < s.base.a(3)) return false;
    for_each_bounded(s, q.a(3), [&](const Quintuple& m) { found = found || m == q; });
    return found;
}

Series minimize(const Series& s) {
    Series out = s;
    bool moved = true;
    while (moved) {
        moved = false;
        for (const auto& st : out.steps) {
            if (std::none_of(st.begin(), st.begin() + 4, [](Int e) { return e > 0; }))
                throw std::invalid_argument("series step has no positive weight entry");
            auto v = out.base.as_array();
            for (std::size_t e = 0; e < 5; ++e) v[e] -= st[e];
            if (auto q = Quintuple::try_make(v[0], v[1], v[2], v[3], v[4])) {
                out.base = *q;
                moved = true;
            }
        }
    }
    return out;
}

SeriesKey canonical_key(const Series& s) {
    SeriesKey key;
    key.base = minimize(s).base.as_array();
    key.steps = s.steps;
    std::sort(key.steps.begin(), key.steps.end());
    return key;
}

}  // namespace delpezzo
