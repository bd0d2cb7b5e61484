// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "delpezzo/delpezzo.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Library failure mapped to an exit code; argument problems are usage errors.
struct ApiError {
    dp_status status;
    std::string message;
};

void check(dp_status s) {
    if (s != DP_OK) throw ApiError{s, dp_last_error()};
}

struct ListDeleter {
    void operator()(dp_quintuple_list* l) const { dp_quintuple_list_free(l); }
};
struct ClassificationDeleter {
    void operator()(dp_classification* c) const { dp_classification_free(c); }
};
struct SeriesDeleter {
    void operator()(dp_series* s) const { dp_series_free(s); }
};
struct StringDeleter {
    void operator()(char* s) const { dp_string_free(s); }
};

using ListPtr = std::unique_ptr<dp_quintuple_list, ListDeleter>;
using ClassificationPtr = std::unique_ptr<dp_classification, ClassificationDeleter>;
using SeriesPtr = std::unique_ptr<dp_series, SeriesDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string str(const dp_quintuple& q) {
    std::ostringstream os;
    os << '(' << q.a[0] << ',' << q.a[1] << ',' << q.a[2] << ',' << q.a[3] << ',' << q.d << ')';
    return os.str();
}

std::string fraction(int64_t num, int64_t den) {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

const char* flag(int b) { return b ? "true" : "false"; }
const char* pass(bool b) { return b ? "pass" : "FAIL"; }

std::string types_str(int bits) {
    std::string s = "{";
    auto add = [&](const char* n) {
        if (s.size() > 1) s += ',';
        s += n;
    };
    if (bits & DP_TYPE_I) add("I");
    if (bits & DP_TYPE_II) add("II");
    if (bits & DP_TYPE_III) add("III");
    return s + "}";
}

void print_list(const dp_quintuple_list* list) {
    const size_t n = dp_quintuple_list_size(list);
    for (size_t i = 0; i < n; ++i) {
        dp_quintuple q{};
        check(dp_quintuple_list_get(list, i, &q));
        std::cout << str(q) << '\n';
    }
}

dp_format format_of(const std::string& name) {
    if (name == "json") return DP_FORMAT_JSON;
    if (name == "csv") return DP_FORMAT_CSV;
    if (name == "latex") return DP_FORMAT_LATEX;
    return DP_FORMAT_TEXT;
}

int run_classify(int64_t index, const std::string& format, std::optional<int64_t> bound) {
    dp_classification* raw = nullptr;
    check(dp_classify(index, &raw));
    ClassificationPtr c(raw);
    char* text = nullptr;
    if (bound)
        check(dp_classification_render_members(c.get(), format_of(format), *bound, &text));
    else
        check(dp_classification_render(c.get(), format_of(format), &text));
    StringPtr owned(text);
    std::cout << owned.get();
    return kExitOk;
}

int run_check(const std::vector<int64_t>& weights, std::optional<int64_t> index, std::optional<int64_t> degree) {
    dp_quintuple q{};
    const int64_t w[4] = {weights[0], weights[1], weights[2], weights[3]};
    if (index) {
        if (dp_quintuple_from_index(w, *index, &q) != DP_OK) {
            std::cerr << "ERROR: " << dp_last_error() << '\n';
            return kExitFailure;
        }
    } else if (dp_quintuple_from_degree(w, *degree, &q) != DP_OK) {
        std::cerr << "ERROR: " << dp_last_error() << '\n';
        return kExitFailure;
    }

    dp_check_report r{};
    check(dp_check(&q, &r));
    dp_obstruction ob{};
    check(dp_obstruction_report(&q, &ob));

    static const char* kPairNames[6] = {"01", "02", "03", "12", "13", "23"};
    auto per_pair = [](const int* v) {
        std::string s;
        for (int p = 0; p < 6; ++p) s += std::string(p ? " " : "") + kPairNames[p] + ":" + (v[p] ? "ok" : "no");
        return s;
    };
    bool wf_pairs = true, wf_triples = true, v = true, vi = true;
    for (int p = 0; p < 6; ++p) {
        wf_pairs = wf_pairs && r.wf_pairs[p];
        v = v && r.cond_v[p];
        vi = vi && r.cond_vi[p];
    }
    for (int t = 0; t < 4; ++t) wf_triples = wf_triples && r.wf_triples[t];

    std::cout << "quintuple " << str(q) << " index " << r.index << '\n'
              << "condition (i)   " << pass(wf_pairs) << "  [" << per_pair(r.wf_pairs) << "]\n"
              << "condition (ii)  " << pass(wf_triples) << "  [omit a0:" << r.wf_triples[0]
              << " a1:" << r.wf_triples[1] << " a2:" << r.wf_triples[2] << " a3:" << r.wf_triples[3] << "]\n"
              << "condition (iii) " << pass(r.nondegenerate) << '\n'
              << "condition (iv)  " << pass(r.cond_iv) << '\n'
              << "condition (v)   " << pass(v) << "  [" << per_pair(r.cond_v) << "]\n"
              << "condition (vi)  " << pass(vi) << "  [" << per_pair(r.cond_vi) << "]\n"
              << "quasismooth divisibility=" << flag(r.accepted) << " monomial=" << flag(r.monomial) << '\n'
              << "solid=" << flag(r.solid) << " valid=" << flag(r.valid) << " class="
              << (r.colour ? std::to_string(r.colour) : std::string("none")) << " types=" << types_str(r.types)
              << '\n'
              << "table_covered=" << flag(r.table_covered) << '\n'
              << "K^2=" << fraction(ob.k2_num, ob.k2_den) << " N=" << ob.group_order
              << " K^2N=" << fraction(ob.k2n_num, ob.k2n_den) << " gmsy=" << flag(ob.gmsy)
              << " spotti=" << flag(ob.spotti) << '\n';
    if (!r.accepted) {
        std::cerr << "ERROR: quintuple " << str(q) << " fails the quasi-smoothness conditions\n";
        return kExitFailure;
    }
    return kExitOk;
}

int run_expand(const std::string& json, int64_t bound) {
    dp_series* raw = nullptr;
    check(dp_series_parse(json.c_str(), &raw));
    SeriesPtr s(raw);
    dp_quintuple_list* list = nullptr;
    check(dp_series_expand(s.get(), bound, &list));
    ListPtr owned(list);
    print_list(owned.get());
    return kExitOk;
}

int run_verify(int64_t index, int64_t bound) {
    dp_quintuple_list *missing = nullptr, *extra = nullptr;
    check(dp_verify(index, bound, &missing, &extra));
    ListPtr m(missing), e(extra);
    if (dp_quintuple_list_size(m.get()) == 0 && dp_quintuple_list_size(e.get()) == 0) {
        std::cout << "OK\n";
        return kExitOk;
    }
    std::cout << "MISMATCH\n";
    for (size_t i = 0; i < dp_quintuple_list_size(m.get()); ++i) {
        dp_quintuple q{};
        check(dp_quintuple_list_get(m.get(), i, &q));
        std::cout << "- " << str(q) << "  (oracle only)\n";
    }
    for (size_t i = 0; i < dp_quintuple_list_size(e.get()); ++i) {
        dp_quintuple q{};
        check(dp_quintuple_list_get(e.get(), i, &q));
        std::cout << "+ " << str(q) << "  (classifier only)\n";
    }
    std::cerr << "ERROR: classification and oracle differ for index " << index << " bound " << bound << '\n';
    return kExitFailure;
}

int run_obstructions(int64_t index, int64_t bound) {
    dp_classification* raw = nullptr;
    check(dp_classify(index, &raw));
    ClassificationPtr c(raw);
    dp_quintuple_list* list = nullptr;
    check(dp_classification_expand(c.get(), bound, &list));
    ListPtr members(list);
    std::cout << "quintuple,K2,N,K2N,gmsy,spotti\n";
    for (size_t i = 0; i < dp_quintuple_list_size(members.get()); ++i) {
        dp_quintuple q{};
        check(dp_quintuple_list_get(members.get(), i, &q));
        dp_obstruction ob{};
        check(dp_obstruction_report(&q, &ob));
        std::cout << '"' << str(q) << "\"," << fraction(ob.k2_num, ob.k2_den) << ',' << ob.group_order << ','
                  << fraction(ob.k2n_num, ob.k2n_den) << ',' << ob.gmsy << ',' << ob.spotti << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classification of quasi-smooth well-formed del Pezzo hypersurfaces in P(a0,a1,a2,a3)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", dp_version());

    int64_t index = 0;
    int64_t bound = 0;

    auto* classify = app.add_subcommand("classify", "Series and sporadic cases for one index");
    std::string format = "text";
    std::optional<int64_t> expand_bound;
    classify->add_option("--index", index, "Fano index I")->required()->check(CLI::PositiveNumber);
    classify->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv", "latex"}));
    classify->add_option("--expand-bound", expand_bound, "Also list members with a3 <= B")
        ->check(CLI::PositiveNumber);

    auto* chk = app.add_subcommand("check", "Conditions, types, class and obstructions for one quintuple");
    std::vector<int64_t> weights;
    std::optional<int64_t> chk_index, chk_degree;
    chk->add_option("weights", weights, "A0 A1 A2 A3")->required()->expected(4);
    auto* idx_opt = chk->add_option("--index", chk_index, "Fano index I")->check(CLI::PositiveNumber);
    auto* deg_opt = chk->add_option("--degree", chk_degree, "Degree d")->check(CLI::PositiveNumber);
    idx_opt->excludes(deg_opt);
    deg_opt->excludes(idx_opt);

    auto* exp = app.add_subcommand("expand", "Members of a serialized series");
    std::string series_json;
    exp->add_option("--series", series_json, "Series as JSON")->required();
    exp->add_option("--bound", bound, "Largest a3")->required()->check(CLI::PositiveNumber);

    auto* ver = app.add_subcommand("verify", "Compare the classification with brute force");
    ver->add_option("--index", index, "Fano index I")->required()->check(CLI::PositiveNumber);
    ver->add_option("--bound", bound, "Largest a3")->required()->check(CLI::PositiveNumber);

    auto* obs = app.add_subcommand("obstructions", "Kahler-Einstein obstructions for every member up to a bound");
    obs->add_option("--index", index, "Fano index I")->required()->check(CLI::PositiveNumber);
    obs->add_option("--bound", bound, "Largest a3")->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
        if (*chk && !chk_index && !chk_degree) throw CLI::ValidationError("check: one of --index or --degree is required");
        for (int64_t w : weights)
            if (*chk && w < 1) throw CLI::ValidationError("check: weights must be positive");
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "ERROR: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*classify) return run_classify(index, format, expand_bound);
        if (*chk) return run_check(weights, chk_index, chk_degree);
        if (*exp) return run_expand(series_json, bound);
        if (*ver) return run_verify(index, bound);
        if (*obs) return run_obstructions(index, bound);
    } catch (const ApiError& e) {
        std::cerr << "ERROR: " << e.message << '\n';
        return e.status == DP_ERR_ARGUMENT ? kExitUsage : kExitFailure;
    }
    return kExitUsage;
}
