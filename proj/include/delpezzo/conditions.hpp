// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "delpezzo/core.hpp"

namespace delpezzo {

/// Weight-index pairs (i, j) with i < j, in the order used by every per-pair
/// report field: 01 02 03 12 13 23.
inline constexpr std::array<std::array<int, 2>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Triples obtained by omitting one weight; entry i omits a_i.
inline constexpr std::array<std::array<int, 3>, 4> kTriples{{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};

/// Bit set over the structural types I, II, III.
struct TypeSet {
    std::uint8_t bits = 0;

    static constexpr std::uint8_t kTypeI = 1;
    static constexpr std::uint8_t kTypeII = 2;
    static constexpr std::uint8_t kTypeIII = 4;

    bool has(std::uint8_t t) const noexcept { return (bits & t) != 0; }
    bool empty() const noexcept { return bits == 0; }
    friend bool operator==(TypeSet, TypeSet) = default;
};

std::string to_string(TypeSet t);

struct ConditionReport {
    std::array<bool, 6> wf_pairs{};    ///< gcd(a_i, a_j) divides d, per kPairs
    std::array<bool, 4> wf_triples{};  ///< gcd of the triple omitting a_i is 1
    bool nondegenerate = false;        ///< d > a3
    bool cond_iv = false;
    std::array<bool, 6> cond_v{};   ///< true for pairs with gcd 1 (vacuous)
    std::array<bool, 6> cond_vi{};
    TypeSet types;
    std::optional<int> colour;  ///< class number 1..6

    bool well_formed() const noexcept;
    bool cond_v_all() const noexcept;
    bool cond_vi_all() const noexcept;
    /// Conditions (i)-(vi) all hold.
    bool accepted() const noexcept;
};

// Divisibility form --------------------------------------------------------

/// Conditions (i) and (ii): pairwise gcds divide d, triple gcds equal 1.
bool well_formed(const Quintuple& q);

/// Every a_i divides d - a_j for some j (j may equal i).
bool cond_iv(const Quintuple& q);

struct CondVVi {
    bool v = false;
    bool vi = false;
};

CondVVi cond_v_vi(const Quintuple& q);

ConditionReport quasismooth_divisibility(const Quintuple& q);

// Monomial form ------------------------------------------------------------

/// Independent check of (i)-(vi) phrased as existence of monomials of degree
/// d, decided by bounded exponent search. Shares no code with the
/// divisibility form beyond well-formedness.
bool quasismooth_monomial(const Quintuple& q);

// Types and classes ---------------------------------------------------------

TypeSet detect_types(const Quintuple& q, Int index);

/// Colourful class 1..6, or nullopt.
std::optional<int> detect_class(const Quintuple& q, Int index);

/// Number of class guards that hold; a correct tuple gives 0 or 1.
int count_class_guards(const Quintuple& q, Int index);

/// (i)-(iv) plus one of the types I-III.
bool is_solid(const Quintuple& q, Int index);

/// (i)-(vi) plus one of the types I-III.
bool is_valid(const Quintuple& q, Int index);

}  // namespace delpezzo
