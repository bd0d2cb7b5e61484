// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace delpezzo {

using Int = std::int64_t;

// ---------------------------------------------------------------------------
// Checked integer arithmetic. Overflow throws std::overflow_error.
// ---------------------------------------------------------------------------

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Ceiling of a / b for b > 0.
Int ceil_div(Int a, Int b);

Int gcd(Int a, Int b);
Int gcd(Int a, Int b, Int c);
Int lcm(Int a, Int b);
Int lcm(Int a, Int b, Int c);

/// Greatest common divisor of a non-empty list. Throws std::invalid_argument
/// on an empty list.
Int gcd_list(std::span<const Int> values);

/// Least common multiple of a non-empty list of positive integers. Throws
/// std::invalid_argument on an empty list or a non-positive entry.
Int lcm_list(std::span<const Int> values);

// ---------------------------------------------------------------------------
// Quintuple
// ---------------------------------------------------------------------------

/// Ordered weights (a0 <= a1 <= a2 <= a3) and a degree d > a3 with positive
/// index a0+a1+a2+a3-d. Instances that violate any of these cannot exist.
class Quintuple {
public:
    using Weights = std::array<Int, 4>;

    /// Throws std::invalid_argument when the invariants do not hold.
    Quintuple(Int a0, Int a1, Int a2, Int a3, Int d);
    Quintuple(const Weights& w, Int d) : Quintuple(w[0], w[1], w[2], w[3], d) {}

    /// Same checks as the constructor, without throwing.
    static std::optional<Quintuple> try_make(Int a0, Int a1, Int a2, Int a3, Int d) noexcept;

    /// Builds from weights in any order and an index; sorts the weights.
    static Quintuple from_index(Weights w, Int index);

    const Weights& weights() const noexcept { return w_; }
    Int a(std::size_t i) const noexcept { return w_[i]; }
    Int degree() const noexcept { return d_; }
    Int index() const noexcept { return w_[0] + w_[1] + w_[2] + w_[3] - d_; }

    std::array<Int, 5> as_array() const noexcept { return {w_[0], w_[1], w_[2], w_[3], d_}; }
    std::string to_string() const;

    friend bool operator==(const Quintuple&, const Quintuple&) = default;
    friend auto operator<=>(const Quintuple&, const Quintuple&) = default;

private:
    struct Unchecked {};
    Quintuple(Unchecked, const Weights& w, Int d) noexcept : w_(w), d_(d) {}

    Weights w_;
    Int d_;
};

// ---------------------------------------------------------------------------
// Series
// ---------------------------------------------------------------------------

enum class SeriesClass {
    class1 = 1,
    class2,
    class3,
    class4,
    class5,
    class6,
    tableSeries,
    sporadic,
};

std::string_view to_string(SeriesClass c);
std::optional<SeriesClass> series_class_from_string(std::string_view s);

/// Colourful class number (1..6) as a SeriesClass tag.
SeriesClass colourful_class(int number);

/// Increments to (a0,a1,a2,a3,d) per unit of one parameter.
using Step = std::array<Int, 5>;

/// A family base + sum(params[i] * steps[i]) over non-negative parameters,
/// restricted to ordered members.
struct Series {
    SeriesClass origin = SeriesClass::tableSeries;
    Quintuple base{1, 1, 1, 1, 3};
    std::vector<Step> steps;
    Int modulus = 1;

    std::size_t parameter_count() const noexcept { return steps.size(); }

    /// Member at the given parameters, or nullopt when the result is not an
    /// ordered quintuple. params.size() must equal parameter_count().
    std::optional<Quintuple> member(std::span<const Int> params) const;

    friend bool operator==(const Series&, const Series&) = default;
};

struct Classification {
    Int index = 0;
    std::vector<Series> two_param;
    std::vector<Series> one_param;
    std::vector<Quintuple> sporadic;
};

}  // namespace delpezzo
