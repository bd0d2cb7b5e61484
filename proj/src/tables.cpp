// SPDX-License-Identifier: Apache-2.0
#include "delpezzo/tables.hpp"

#include <algorithm>
#include <stdexcept>

#include "delpezzo/series.hpp"

namespace delpezzo {

namespace {

// Weights, degree and index as (slope, intercept) in n >= 1, with the
// originating singularity case.
constexpr TableRow kRows[] = {
    {{{{0, 1}, {3, -2}, {4, -3}, {6, -5}}}, {12, -9}, {1, 0}, "VII.2(3)"},
    {{{{0, 1}, {3, -2}, {4, -3}, {6, -4}}}, {12, -8}, {1, 0}, "II.2(2)"},
    {{{{0, 1}, {4, -3}, {6, -5}, {9, -7}}}, {18, -14}, {1, 0}, "VII.3(1)"},
    {{{{0, 1}, {6, -5}, {10, -8}, {15, -12}}}, {30, -24}, {1, 0}, "III.1(4)"},
    {{{{0, 1}, {6, -4}, {10, -7}, {15, -10}}}, {30, -20}, {1, 0}, "III.2(2)"},
    {{{{0, 1}, {6, -3}, {10, -5}, {15, -8}}}, {30, -15}, {1, 0}, "III.2(4)"},
    {{{{0, 1}, {8, -2}, {12, -3}, {18, -5}}}, {36, -9}, {2, 0}, "IV.3(3)"},
    {{{{0, 2}, {6, -3}, {8, -4}, {12, -7}}}, {24, -12}, {2, 0}, "II.2(4)"},
    {{{{0, 2}, {6, 1}, {8, 2}, {12, 3}}}, {24, 6}, {2, 2}, "II.2(1)"},
    {{{{0, 3}, {6, 1}, {6, 2}, {9, 3}}}, {18, 6}, {3, 3}, "II.2(1)"},
    {{{{0, 7}, {28, -22}, {42, -33}, {63, -53}}}, {126, -99}, {7, -2}, "XI.3(14)"},
    {{{{0, 7}, {28, -18}, {42, -27}, {63, -44}}}, {126, -81}, {7, -1}, "XI.3(14)"},
    {{{{0, 7}, {28, -17}, {42, -29}, {63, -40}}}, {126, -80}, {7, 1}, "X.3(1)"},
    {{{{0, 7}, {28, -13}, {42, -23}, {63, -31}}}, {126, -62}, {7, 2}, "X.3(1)"},
    {{{{0, 7}, {28, -10}, {42, -15}, {63, -26}}}, {126, -45}, {7, 1}, "XI.3(14)"},
    {{{{0, 7}, {28, -9}, {42, -17}, {63, -22}}}, {126, -44}, {7, 3}, "X.3(1)"},
    {{{{0, 7}, {28, -6}, {42, -9}, {63, -17}}}, {126, -27}, {7, 2}, "XI.3(14)"},
    {{{{0, 7}, {28, -5}, {42, -11}, {63, -13}}}, {126, -26}, {7, 4}, "X.3(1)"},
    {{{{0, 7}, {28, -2}, {42, -3}, {63, -8}}}, {126, -9}, {7, 3}, "XI.3(14)"},
    {{{{0, 7}, {28, -1}, {42, -5}, {63, -4}}}, {126, -8}, {7, 5}, "X.3(1)"},
    {{{{0, 7}, {28, 2}, {42, 3}, {63, 1}}}, {126, 9}, {7, 4}, "XI.3(14)"},
    {{{{0, 7}, {28, 3}, {42, 1}, {63, 5}}}, {126, 10}, {7, 6}, "X.3(1)"},
    {{{{0, 2}, {2, 1}, {2, 1}, {4, 1}}}, {8, 4}, {0, 1}, "II.3(4)"},
    {{{{0, 3}, {3, 0}, {3, 1}, {3, 1}}}, {9, 3}, {0, 2}, "III.5(1)"},
    {{{{0, 3}, {3, 1}, {3, 2}, {3, 2}}}, {9, 6}, {0, 2}, "II.5(1)"},
    {{{{0, 3}, {3, 1}, {3, 2}, {6, 1}}}, {12, 5}, {0, 2}, "XVIII.2(2)"},
    {{{{0, 3}, {3, 1}, {6, 1}, {9, 0}}}, {18, 3}, {0, 2}, "VII.3(2)"},
    {{{{0, 3}, {3, 1}, {6, 1}, {9, 3}}}, {18, 6}, {0, 2}, "II.2(2)"},
    {{{{0, 4}, {2, 1}, {2, 1}, {4, 0}}}, {8, 4}, {0, 2}, "V.3(4)"},
    {{{{0, 4}, {2, 3}, {4, 6}, {6, 7}}}, {12, 18}, {0, 2}, "XII.3(17)"},
    {{{{0, 6}, {6, -1}, {12, -4}, {18, -9}}}, {36, -12}, {0, 4}, "VII.3(2)"},
    {{{{0, 6}, {6, -1}, {12, -4}, {18, -3}}}, {36, -6}, {0, 4}, "IV.3(1)"},
    {{{{0, 6}, {6, 3}, {6, 5}, {6, 5}}}, {18, 15}, {0, 4}, "III.5(1)"},
    {{{{0, 8}, {4, 5}, {4, 7}, {4, 9}}}, {12, 23}, {0, 6}, "XIX.2(2)"},
    {{{{0, 9}, {3, 5}, {3, 8}, {6, 7}}}, {12, 23}, {0, 6}, "XIX.2(2)"},
};

constexpr SporadicRow kSporadic[] = {
    {{1, 3, 5, 8}, 16, 1, "VIII.3(5)"},
    {{2, 3, 5, 9}, 18, 1, "II.2(3)"},
    {{3, 3, 5, 5}, 15, 1, "I.19"},
    {{3, 5, 7, 11}, 25, 1, "X.2(3)"},
    {{3, 5, 7, 14}, 28, 1, "VII.4(4)"},
    {{3, 5, 11, 18}, 36, 1, "VII.3(1)"},
    {{5, 14, 17, 21}, 56, 1, "XI.3(8)"},
    {{5, 19, 27, 31}, 81, 1, "X.3(3)"},
    {{5, 19, 27, 50}, 100, 1, "VII.3(3)"},
    {{7, 11, 27, 37}, 81, 1, "X.3(4)"},
    {{7, 11, 27, 44}, 88, 1, "VII.3(5)"},
    {{9, 15, 17, 20}, 60, 1, "VII.6(3)"},
    {{9, 15, 23, 23}, 69, 1, "III.5(1)"},
    {{11, 29, 39, 49}, 127, 1, "XIX.2(2)"},
    {{11, 49, 69, 128}, 256, 1, "X.3(1)"},
    {{13, 23, 35, 57}, 127, 1, "XIX.2(2)"},
    {{13, 35, 81, 128}, 256, 1, "X.3(2)"},
    {{1, 3, 4, 6}, 12, 2, "I.3"},
    {{1, 4, 6, 9}, 18, 2, "IV.3(3)"},
    {{1, 6, 10, 15}, 30, 2, "I.4"},
    {{2, 3, 4, 7}, 14, 2, "IX.3(1)"},
    {{3, 4, 5, 10}, 20, 2, "II.3(2)"},
    {{3, 4, 6, 7}, 18, 2, "VII.3(10)"},
    {{3, 4, 10, 15}, 30, 2, "II.2(3)"},
    {{5, 13, 19, 22}, 57, 2, "X.3(3)"},
    {{5, 13, 19, 35}, 70, 2, "VII.3(3)"},
    {{6, 9, 10, 13}, 36, 2, "VII.3(8)"},
    {{7, 8, 19, 25}, 57, 2, "X.3(4)"},
    {{7, 8, 19, 32}, 64, 2, "VII.3(3)"},
    {{9, 12, 13, 16}, 48, 2, "VII.6(2)"},
    {{9, 12, 19, 19}, 57, 2, "III.5(1)"},
    {{9, 19, 24, 31}, 81, 2, "XI.3(20)"},
    {{10, 19, 35, 43}, 105, 2, "XI.3(18)"},
    {{11, 21, 28, 47}, 105, 2, "XI.3(16)"},
    {{11, 25, 32, 41}, 107, 2, "XIX.3(1)"},
    {{11, 25, 34, 43}, 111, 2, "XIX.2(2)"},
    {{11, 43, 61, 113}, 226, 2, "X.3(1)"},
    {{13, 18, 45, 61}, 135, 2, "XI.3(14)"},
    {{13, 20, 29, 47}, 107, 2, "XIX.3(1)"},
    {{13, 20, 31, 49}, 111, 2, "XIX.2(2)"},
    {{13, 31, 71, 113}, 226, 2, "X.3(2)"},
    {{14, 17, 29, 41}, 99, 2, "XIX.2(3)"},
    {{5, 7, 11, 13}, 33, 3, "X.3(3)"},
    {{5, 7, 11, 20}, 40, 3, "VII.3(3)"},
    {{11, 21, 29, 37}, 95, 3, "XIX.2(2)"},
    {{11, 37, 53, 98}, 196, 3, "X.3(1)"},
    {{13, 17, 27, 41}, 95, 3, "XIX.2(2)"},
    {{13, 27, 61, 98}, 196, 3, "X.3(2)"},
    {{15, 19, 43, 74}, 148, 3, "X.3(1)"},
    {{9, 11, 12, 17}, 45, 4, "XI.3(20)"},
    {{10, 13, 25, 31}, 75, 4, "XI.3(14)"},
    {{11, 17, 20, 27}, 71, 4, "XIX.3(1)"},
    {{11, 17, 24, 31}, 79, 4, "XIX.2(2)"},
    {{11, 31, 45, 83}, 166, 4, "X.3(1)"},
    {{13, 14, 19, 29}, 71, 4, "XIX.3(1)"},
    {{13, 14, 23, 33}, 79, 4, "XIX.2(2)"},
    {{13, 23, 51, 83}, 166, 4, "X.3(2)"},
    {{11, 13, 19, 25}, 63, 5, "XIX.2(2)"},
    {{11, 25, 37, 68}, 136, 5, "X.3(1)"},
    {{13, 19, 41, 68}, 136, 5, "X.3(2)"},
    {{11, 19, 29, 53}, 106, 6, "X.3(1)"},
    {{13, 15, 31, 53}, 106, 6, "X.3(2)"},
    {{11, 13, 21, 38}, 76, 7, "X.3(1)"},
};

// Search limit for the first ordered member of a constant-index row.
constexpr Int kOrderSearchLimit = 64;

}  // namespace

std::span<const TableRow> table_rows() { return kRows; }
std::span<const SporadicRow> sporadic_rows() { return kSporadic; }

std::uint64_t tables_checksum() {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&](Int v) {
        auto u = static_cast<std::uint64_t>(v);
        for (int b = 0; b < 8; ++b) {
            h ^= (u >> (8 * b)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    for (const auto& r : kRows) {
        for (const auto& w : r.weights) {
            mix(w.slope);
            mix(w.intercept);
        }
        mix(r.degree.slope);
        mix(r.degree.intercept);
        mix(r.index.slope);
        mix(r.index.intercept);
    }
    for (const auto& r : kSporadic) {
        for (Int w : r.weights) mix(w);
        mix(r.degree);
        mix(r.index);
    }
    return h;
}

namespace {

std::optional<Quintuple> sorted_instance(const TableRow& row, Int n) {
    Quintuple::Weights w{};
    for (std::size_t i = 0; i < 4; ++i) w[i] = row.weights[i].at(n);
    if (std::any_of(w.begin(), w.end(), [](Int x) { return x < 1; })) return std::nullopt;
    std::sort(w.begin(), w.end());
    return Quintuple::try_make(w[0], w[1], w[2], w[3], row.degree.at(n));
}

std::optional<Quintuple> ordered_instance(const TableRow& row, Int n) {
    return Quintuple::try_make(row.weights[0].at(n), row.weights[1].at(n), row.weights[2].at(n),
                               row.weights[3].at(n), row.degree.at(n));
}

void push_unique(std::vector<Quintuple>& v, const Quintuple& q) {
    if (std::find(v.begin(), v.end(), q) == v.end()) v.push_back(q);
}

}  // namespace

TableInstance instantiate(Int index) {
    if (index < 1) throw std::invalid_argument("instantiate: index must be positive");
    TableInstance out;
    for (const auto& row : kRows) {
        if (row.index.slope == 0) {
            if (row.index.intercept != index) continue;
            // Members before the first ordered one are kept as sorted
            // quintuples.
            for (Int n = 1; n <= kOrderSearchLimit; ++n) {
                if (auto q = ordered_instance(row, n)) {
                    Series s;
                    s.origin = SeriesClass::tableSeries;
                    s.base = *q;
                    Step st{};
                    for (std::size_t i = 0; i < 4; ++i) st[i] = row.weights[i].slope;
                    st[4] = row.degree.slope;
                    s.steps = {st};
                    Int g = 0;
                    for (Int e : st) g = gcd(g, e);
                    s.modulus = g;
                    out.series.push_back(std::move(s));
                    break;
                }
                if (auto q = sorted_instance(row, n)) push_unique(out.quintuples, *q);
            }
            continue;
        }
        Int num = index - row.index.intercept;
        if (num % row.index.slope != 0) continue;
        Int n = num / row.index.slope;
        if (n < 1) continue;
        if (auto q = sorted_instance(row, n)) push_unique(out.quintuples, *q);
    }
    for (const auto& row : kSporadic) {
        if (row.index != index) continue;
        push_unique(out.quintuples, Quintuple(row.weights, row.degree));
    }
    return out;
}

bool table_covers(const Quintuple& q) {
    auto inst = instantiate(q.index());
    if (std::find(inst.quintuples.begin(), inst.quintuples.end(), q) != inst.quintuples.end()) return true;
    return std::any_of(inst.series.begin(), inst.series.end(), [&](const Series& s) { return contains(s, q); });
}

}  // namespace delpezzo
