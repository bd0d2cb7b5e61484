// SPDX-License-Identifier: Apache-2.0
#include "delpezzo/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace delpezzo {

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

Int ceil_div(Int a, Int b) {
    if (b <= 0) throw std::invalid_argument("ceil_div: divisor must be positive");
    Int q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }
Int gcd(Int a, Int b, Int c) { return std::gcd(a, std::gcd(b, c)); }

Int lcm(Int a, Int b) {
    if (a <= 0 || b <= 0) throw std::invalid_argument("lcm: arguments must be positive");
    return checked_mul(a / std::gcd(a, b), b);
}

Int lcm(Int a, Int b, Int c) { return lcm(a, lcm(b, c)); }

Int gcd_list(std::span<const Int> values) {
    if (values.empty()) throw std::invalid_argument("gcd_list: empty list");
    Int g = 0;
    for (Int v : values) {
        if (v <= 0) throw std::invalid_argument("gcd_list: entries must be positive");
        g = std::gcd(g, v);
    }
    return g;
}

Int lcm_list(std::span<const Int> values) {
    if (values.empty()) throw std::invalid_argument("lcm_list: empty list");
    Int l = 1;
    for (Int v : values) {
        if (v <= 0) throw std::invalid_argument("lcm_list: entries must be positive");
        l = lcm(l, v);
    }
    return l;
}

namespace {

bool quintuple_ok(const Quintuple::Weights& w, Int d) noexcept {
    if (w[0] < 1) return false;
    if (!(w[0] <= w[1] && w[1] <= w[2] && w[2] <= w[3])) return false;
    if (d <= w[3]) return false;
    Int sum;
    if (__builtin_add_overflow(w[0], w[1], &sum) || __builtin_add_overflow(sum, w[2], &sum) ||
        __builtin_add_overflow(sum, w[3], &sum))
        return false;
    return sum - d >= 1;
}

}  // namespace

Quintuple::Quintuple(Int a0, Int a1, Int a2, Int a3, Int d) : w_{a0, a1, a2, a3}, d_(d) {
    checked_add(checked_add(a0, a1), checked_add(a2, a3));
    if (!quintuple_ok(w_, d_)) {
        std::ostringstream os;
        os << "invalid quintuple (" << a0 << ',' << a1 << ',' << a2 << ',' << a3 << ',' << d
           << "): need 1 <= a0 <= a1 <= a2 <= a3 < d < a0+a1+a2+a3";
        throw std::invalid_argument(os.str());
    }
}

std::optional<Quintuple> Quintuple::try_make(Int a0, Int a1, Int a2, Int a3, Int d) noexcept {
    Weights w{a0, a1, a2, a3};
    if (!quintuple_ok(w, d)) return std::nullopt;
    return Quintuple(Unchecked{}, w, d);
}

Quintuple Quintuple::from_index(Weights w, Int index) {
    std::sort(w.begin(), w.end());
    Int sum = checked_add(checked_add(w[0], w[1]), checked_add(w[2], w[3]));
    return Quintuple(w, checked_sub(sum, index));
}

std::string Quintuple::to_string() const {
    std::ostringstream os;
    os << '(' << w_[0] << ',' << w_[1] << ',' << w_[2] << ',' << w_[3] << ',' << d_ << ')';
    return os.str();
}

std::string_view to_string(SeriesClass c) {
    switch (c) {
        case SeriesClass::class1: return "class1";
        case SeriesClass::class2: return "class2";
        case SeriesClass::class3: return "class3";
        case SeriesClass::class4: return "class4";
        case SeriesClass::class5: return "class5";
        case SeriesClass::class6: return "class6";
        case SeriesClass::tableSeries: return "tableSeries";
        case SeriesClass::sporadic: return "sporadic";
    }
    return "unknown";
}

std::optional<SeriesClass> series_class_from_string(std::string_view s) {
    for (int i = 1; i <= 8; ++i) {
        auto c = static_cast<SeriesClass>(i);
        if (to_string(c) == s) return c;
    }
    return std::nullopt;
}

SeriesClass colourful_class(int number) {
    if (number < 1 || number > 6) throw std::invalid_argument("class number must be in 1..6");
    return static_cast<SeriesClass>(number);
}

std::optional<Quintuple> Series::member(std::span<const Int> params) const {
    if (params.size() != steps.size()) throw std::invalid_argument("Series::member: wrong parameter count");
    auto v = base.as_array();
    for (std::size_t p = 0; p < steps.size(); ++p) {
        if (params[p] < 0) return std::nullopt;
        for (std::size_t e = 0; e < 5; ++e) v[e] = checked_add(v[e], checked_mul(params[p], steps[p][e]));
    }
    return Quintuple::try_make(v[0], v[1], v[2], v[3], v[4]);
}

}  // namespace delpezzo
