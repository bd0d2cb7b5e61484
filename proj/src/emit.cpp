// SPDX-License-Identifier: Apache-2.0
#include "delpezzo/emit.hpp"

#include <json.hpp>
#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "delpezzo/classify.hpp"
#include "delpezzo/series.hpp"

namespace delpezzo {

using Json = nlohmann::ordered_json;

Format parse_format(std::string_view name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "latex") return Format::latex;
    throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

namespace {

Json series_json(const Series& s) {
    Json j;
    j["base"] = s.base.as_array();
    j["steps"] = s.steps;
    j["class"] = std::string(to_string(s.origin));
    return j;
}

Json quintuple_list_json(const std::vector<Quintuple>& qs) {
    Json arr = Json::array();
    for (const auto& q : qs) arr.push_back(q.as_array());
    return arr;
}

// c + px + qy in the style "2x+3", "x+y+2", "3(x+y)+10".
std::string linear_expr(Int c, Int p, Int q) {
    auto coef = [](Int k) { return k == 1 ? std::string() : std::to_string(k); };
    std::string out;
    if (p != 0 && p == q) {
        out = p == 1 ? "x+y" : std::to_string(p) + "(x+y)";
    } else {
        if (p != 0) out += coef(p) + "x";
        if (q != 0) out += (out.empty() ? "" : "+") + coef(q) + "y";
    }
    if (c != 0 || out.empty()) {
        if (!out.empty() && c > 0) out += '+';
        out += std::to_string(c);
    }
    return out;
}

std::string entry_expr(const Series& s, std::size_t e) {
    Int p = s.steps.size() > 0 ? s.steps[0][e] : 0;
    Int q = s.steps.size() > 1 ? s.steps[1][e] : 0;
    return linear_expr(s.base.as_array()[e], p, q);
}

std::string step_field(const Series& s, std::size_t p) {
    if (p >= s.steps.size()) return "";
    std::string out;
    for (std::size_t e = 0; e < 5; ++e) {
        if (e) out += ' ';
        out += std::to_string(s.steps[p][e]);
    }
    return out;
}

std::string weights_only(const Quintuple& q) {
    std::ostringstream os;
    os << '(' << q.a(0) << ',' << q.a(1) << ',' << q.a(2) << ',' << q.a(3) << ')';
    return os.str();
}

void text_section(std::ostringstream& os, const char* title, const std::vector<Series>& list, bool note) {
    os << title << ": " << list.size();
    if (note) os << " (" << kTwoParamNote << ")";
    os << '\n';
    for (const auto& s : list)
        os << "  " << series_weights_expr(s) << "  d = " << series_degree_expr(s) << "  [" << to_string(s.origin)
           << "]\n";
}

void latex_series_table(std::ostringstream& os, Int index, const char* title, const std::vector<Series>& list,
                        bool note) {
    os << "\\begin{longtable}{|c|c|}\n"
       << "\\caption{Index " << index << ", " << title << "}\\\\\n"
       << "\\hline\n$(a_0,a_1,a_2,a_3)$ & $d$\\\\\n\\hline\n\\endhead\n";
    if (note) os << "% " << kTwoParamNote << "\n";
    for (const auto& s : list) os << "$" << series_weights_expr(s) << "$ & $" << series_degree_expr(s) << "$\\\\ \\hline\n";
    os << "\\end{longtable}\n\n";
}

std::string render_text(const Classification& c) {
    std::ostringstream os;
    os << "Index " << c.index << '\n';
    text_section(os, "Two-parameter series", c.two_param, true);
    text_section(os, "One-parameter series", c.one_param, false);
    os << "Sporadic cases: " << c.sporadic.size() << '\n';
    for (const auto& q : c.sporadic) os << "  " << weights_only(q) << "  d = " << q.degree() << '\n';
    return os.str();
}

Json classification_json(const Classification& c) {
    Json j;
    j["index"] = c.index;
    j["two_parameter_series"] = Json::array();
    for (const auto& s : c.two_param) j["two_parameter_series"].push_back(series_json(s));
    j["one_parameter_series"] = Json::array();
    for (const auto& s : c.one_param) j["one_parameter_series"].push_back(series_json(s));
    j["sporadic"] = quintuple_list_json(c.sporadic);
    return j;
}

std::string render_csv(const Classification& c) {
    std::ostringstream os;
    os << "kind,a0,a1,a2,a3,d,step1,step2\n";
    auto row = [&](const char* kind, const Quintuple& q, const std::string& s1, const std::string& s2) {
        os << kind;
        for (Int v : q.as_array()) os << ',' << v;
        os << ',' << s1 << ',' << s2 << '\n';
    };
    for (const auto& s : c.two_param) row("two_parameter", s.base, step_field(s, 0), step_field(s, 1));
    for (const auto& s : c.one_param) row("one_parameter", s.base, step_field(s, 0), "");
    for (const auto& q : c.sporadic) row("sporadic", q, "", "");
    return os.str();
}

std::string render_latex(const Classification& c) {
    std::ostringstream os;
    latex_series_table(os, c.index, "Two-Parameter Series", c.two_param, true);
    latex_series_table(os, c.index, "Infinite Series", c.one_param, false);
    os << "\\begin{longtable}{|c|c|}\n"
       << "\\caption{Index " << c.index << ", Sporadic Cases}\\\\\n"
       << "\\hline\n$(a_0,a_1,a_2,a_3)$ & $d$\\\\\n\\hline\n\\endhead\n";
    for (const auto& q : c.sporadic) os << "$" << weights_only(q) << "$ & $" << q.degree() << "$\\\\ \\hline\n";
    os << "\\end{longtable}\n";
    return os.str();
}

Int step_modulus(const Series& s) {
    Int g = 0;
    for (const auto& st : s.steps)
        for (Int e : st) g = std::gcd(g, e);
    return g == 0 ? 1 : g;
}

}  // namespace

std::string series_to_json(const Series& s) { return series_json(s).dump(); }

Series series_from_json(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("series JSON does not parse: ") + e.what());
    }
    if (!j.is_object() || !j.contains("base") || !j.contains("steps"))
        throw std::invalid_argument("series JSON needs \"base\" and \"steps\"");
    try {
        auto base = j.at("base").get<std::vector<Int>>();
        if (base.size() != 5) throw std::invalid_argument("series base must have 5 entries");
        Series s;
        s.base = Quintuple(base[0], base[1], base[2], base[3], base[4]);
        auto steps = j.at("steps").get<std::vector<std::vector<Int>>>();
        if (steps.empty() || steps.size() > 2) throw std::invalid_argument("series needs one or two step vectors");
        for (const auto& st : steps) {
            if (st.size() != 5) throw std::invalid_argument("step vectors must have 5 entries");
            Step v{};
            bool positive = false;
            for (std::size_t e = 0; e < 5; ++e) {
                if (st[e] < 0) throw std::invalid_argument("step entries must be non-negative");
                v[e] = st[e];
                positive = positive || (e < 4 && st[e] > 0);
            }
            if (!positive) throw std::invalid_argument("step vector must increase some weight");
            if (v[4] != v[0] + v[1] + v[2] + v[3])
                throw std::invalid_argument("step degree entry must equal the sum of its weight entries");
            s.steps.push_back(v);
        }
        s.origin = SeriesClass::tableSeries;
        if (j.contains("class")) {
            auto tag = series_class_from_string(j.at("class").get<std::string>());
            if (!tag || *tag == SeriesClass::sporadic) throw std::invalid_argument("unknown series class tag");
            s.origin = *tag;
        }
        s.modulus = step_modulus(s);
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed series JSON: ") + e.what());
    }
}

std::string series_weights_expr(const Series& s) {
    std::string out = "(";
    for (std::size_t e = 0; e < 4; ++e) {
        if (e) out += ',';
        out += entry_expr(s, e);
    }
    return out + ")";
}

std::string series_degree_expr(const Series& s) { return entry_expr(s, 4); }

std::string render(const Classification& c, Format f) {
    switch (f) {
        case Format::text: return render_text(c);
        case Format::json: return classification_json(c).dump() + "\n";
        case Format::csv: return render_csv(c);
        case Format::latex: return render_latex(c);
    }
    return {};
}

std::string render_with_members(const Classification& c, Format f, Int bound) {
    auto members = expand_classification(c, bound);
    switch (f) {
        case Format::json: {
            Json j = classification_json(c);
            j["expand_bound"] = bound;
            j["members"] = quintuple_list_json(members);
            return j.dump() + "\n";
        }
        case Format::csv: {
            std::string out = render_csv(c);
            for (const auto& q : members) {
                out += "member";
                for (Int v : q.as_array()) out += "," + std::to_string(v);
                out += ",,\n";
            }
            return out;
        }
        case Format::latex: {
            std::ostringstream os;
            os << render_latex(c) << "\n% members with a_3 <= " << bound << ": " << members.size() << "\n";
            for (const auto& q : members) os << "% " << q.to_string() << "\n";
            return os.str();
        }
        case Format::text:
        default: {
            std::ostringstream os;
            os << render_text(c) << "Members with a3 <= " << bound << ": " << members.size() << '\n'
               << quintuples_to_text(members);
            return os.str();
        }
    }
}

std::string quintuples_to_text(const std::vector<Quintuple>& qs) {
    std::string out;
    for (const auto& q : qs) out += "  " + q.to_string() + "\n";
    return out;
}

}  // namespace delpezzo
