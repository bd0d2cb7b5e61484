// SPDX-License-Identifier: Apache-2.0
#include "delpezzo/conditions.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace delpezzo {

namespace {

bool divides(Int a, Int n) { return n % a == 0; }

// Complementary indices of a pair inside {0,1,2,3}, ascending.
std::array<int, 2> complement(int i, int j) {
    std::array<int, 2> out{};
    int n = 0;
    for (int k = 0; k < 4; ++k)
        if (k != i && k != j) out[n++] = k;
    return out;
}

// First bullet list of (v)/(vi): some monomial x_i^b_i x_j^b_j with
// b_i + b_j >= 2, in divisibility phrasing.
bool pair_monomial_div(Int ai, Int aj, Int d) {
    if (divides(ai, d) || divides(aj, d)) return true;
    if (divides(ai, d - aj) || divides(aj, d - ai)) return true;
    for (Int bj = 2; bj <= d / aj; ++bj)
        if (divides(ai, d - aj * bj)) return true;
    return false;
}

// One half of the (b)-branch of (vi): d - a_k reachable by x_i^c_i x_j^c_j
// with c_i + c_j >= 1.
bool pair_plus_one_div(Int ai, Int aj, Int ak, Int d) {
    Int r = d - ak;
    if (divides(ai, r) || divides(aj, r)) return true;
    for (Int cj = 1; cj <= r / aj; ++cj)
        if (divides(ai, r - aj * cj)) return true;
    return false;
}

}  // namespace

std::string to_string(TypeSet t) {
    std::string s = "{";
    auto add = [&](const char* n) {
        if (s.size() > 1) s += ',';
        s += n;
    };
    if (t.has(TypeSet::kTypeI)) add("I");
    if (t.has(TypeSet::kTypeII)) add("II");
    if (t.has(TypeSet::kTypeIII)) add("III");
    return s + "}";
}

bool ConditionReport::well_formed() const noexcept {
    return std::all_of(wf_pairs.begin(), wf_pairs.end(), [](bool b) { return b; }) &&
           std::all_of(wf_triples.begin(), wf_triples.end(), [](bool b) { return b; });
}

bool ConditionReport::cond_v_all() const noexcept {
    return std::all_of(cond_v.begin(), cond_v.end(), [](bool b) { return b; });
}

bool ConditionReport::cond_vi_all() const noexcept {
    return std::all_of(cond_vi.begin(), cond_vi.end(), [](bool b) { return b; });
}

bool ConditionReport::accepted() const noexcept {
    return well_formed() && nondegenerate && cond_iv && cond_v_all() && cond_vi_all();
}

bool well_formed(const Quintuple& q) {
    const auto& a = q.weights();
    for (auto [i, j] : kPairs)
        if (!divides(gcd(a[i], a[j]), q.degree())) return false;
    for (auto [i, j, k] : kTriples)
        if (gcd(a[i], a[j], a[k]) != 1) return false;
    return true;
}

bool cond_iv(const Quintuple& q) {
    const auto& a = q.weights();
    const Int d = q.degree();
    for (int i = 0; i < 4; ++i) {
        bool found = false;
        for (int j = 0; j < 4 && !found; ++j) found = divides(a[i], d - a[j]);
        if (!found) return false;
    }
    return true;
}

namespace {

std::pair<std::array<bool, 6>, std::array<bool, 6>> cond_v_vi_pairs(const Quintuple& q) {
    const auto& a = q.weights();
    const Int d = q.degree();
    std::array<bool, 6> v{}, vi{};
    for (std::size_t p = 0; p < kPairs.size(); ++p) {
        auto [i, j] = kPairs[p];
        bool pair_ok = pair_monomial_div(a[i], a[j], d);
        v[p] = gcd(a[i], a[j]) == 1 || pair_ok;
        if (pair_ok) {
            vi[p] = true;
            continue;
        }
        auto [k, l] = complement(i, j);
        vi[p] = pair_plus_one_div(a[i], a[j], a[k], d) && pair_plus_one_div(a[i], a[j], a[l], d);
    }
    return {v, vi};
}

}  // namespace

CondVVi cond_v_vi(const Quintuple& q) {
    auto [v, vi] = cond_v_vi_pairs(q);
    auto all = [](const std::array<bool, 6>& x) { return std::all_of(x.begin(), x.end(), [](bool b) { return b; }); };
    return {all(v), all(vi)};
}

ConditionReport quasismooth_divisibility(const Quintuple& q) {
    ConditionReport r;
    const auto& a = q.weights();
    for (std::size_t p = 0; p < kPairs.size(); ++p)
        r.wf_pairs[p] = divides(gcd(a[kPairs[p][0]], a[kPairs[p][1]]), q.degree());
    for (std::size_t t = 0; t < kTriples.size(); ++t)
        r.wf_triples[t] = gcd(a[kTriples[t][0]], a[kTriples[t][1]], a[kTriples[t][2]]) == 1;
    r.nondegenerate = q.degree() > a[3];
    r.cond_iv = cond_iv(q);
    std::tie(r.cond_v, r.cond_vi) = cond_v_vi_pairs(q);
    r.types = detect_types(q, q.index());
    r.colour = detect_class(q, q.index());
    return r;
}

// ---------------------------------------------------------------------------
// Monomial form
// ---------------------------------------------------------------------------

namespace {

// Exists (e_u, e_v) >= 0 with e_u*wu + e_v*wv == target and e_u + e_v >= min_total.
bool has_monomial(Int wu, Int wv, Int target, Int min_total) {
    if (target < 0) return false;
    for (Int eu = 0; eu * wu <= target; ++eu) {
        Int rest = target - eu * wu;
        if (rest % wv != 0) continue;
        if (eu + rest / wv >= min_total) return true;
    }
    return false;
}

}  // namespace

bool quasismooth_monomial(const Quintuple& q) {
    const auto& a = q.weights();
    const Int d = q.degree();

    if (!well_formed(q)) return false;
    for (int i = 0; i < 4; ++i)
        if (d == a[i]) return false;

    // x_i^m x_j with m >= 1
    for (int i = 0; i < 4; ++i) {
        bool found = false;
        for (Int m = 1; m * a[i] < d && !found; ++m)
            for (int j = 0; j < 4 && !found; ++j) found = m * a[i] + a[j] == d;
        if (!found) return false;
    }

    for (auto [i, j] : kPairs) {
        bool two = has_monomial(a[i], a[j], d, 2);
        if (gcd(a[i], a[j]) > 1 && !two) return false;
        if (two) continue;
        auto [k, l] = complement(i, j);
        if (!(has_monomial(a[i], a[j], d - a[k], 1) && has_monomial(a[i], a[j], d - a[l], 1))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Types and classes
// ---------------------------------------------------------------------------

namespace {

bool is_type_iii(const Quintuple& q, Int index) {
    const auto& a = q.weights();
    Int k = a[1] - index;
    if (k < 1 || k >= index) return false;
    Int x = a[2];
    return a[0] == index - k && a[3] == x + k && q.degree() == 2 * x + index + k && x >= index + k;
}

}  // namespace

TypeSet detect_types(const Quintuple& q, Int index) {
    const auto& a = q.weights();
    TypeSet t;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            if (a[i] + a[j] == index) t.bits |= TypeSet::kTypeI;
            if (2 * a[i] + a[j] == 2 * index) t.bits |= TypeSet::kTypeII;
        }
    }
    if (is_type_iii(q, index)) t.bits |= TypeSet::kTypeIII;
    return t;
}

namespace {

std::array<bool, 6> class_guards(const Quintuple& q, Int index) {
    const Int a0 = q.a(0), a1 = q.a(1), a2 = q.a(2);
    const Int i2 = 2 * index;
    return {
        a0 + a1 == index,
        a0 + a2 == index && index > a0 + a1,
        a1 + a2 == index && index > a0 + a2,
        2 * a0 + a1 == i2,
        a0 + 2 * a1 == i2 && i2 > 2 * a0 + a1,
        is_type_iii(q, index),
    };
}

}  // namespace

std::optional<int> detect_class(const Quintuple& q, Int index) {
    auto g = class_guards(q, index);
    for (int c = 0; c < 6; ++c)
        if (g[c]) return c + 1;
    return std::nullopt;
}

int count_class_guards(const Quintuple& q, Int index) {
    auto g = class_guards(q, index);
    return static_cast<int>(std::count(g.begin(), g.end(), true));
}

bool is_solid(const Quintuple& q, Int index) {
    return well_formed(q) && q.degree() > q.a(3) && cond_iv(q) && !detect_types(q, index).empty();
}

bool is_valid(const Quintuple& q, Int index) {
    return quasismooth_divisibility(q).accepted() && !detect_types(q, index).empty();
}

}  // namespace delpezzo
