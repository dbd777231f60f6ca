#pragma once

// JSON serialization for the documented external interfaces: parameter
// specs, elements, schemes, pair verdicts, and suite reports. Term order in
// element output follows the canonical map order, so output is deterministic.

#include <json.hpp>

#include <sstream>

#include "element.hpp"
#include "schemes.hpp"
#include "verify.hpp"

namespace qbn {

using nlohmann::json;

// -- spec -----------------------------------------------------------------

inline json spec_to_json(const ParamSpec& sp) {
    json p = json::array();
    for (int i = 1; i <= sp.rank(); ++i) {
        json row = json::array();
        for (int j = 1; j <= sp.rank(); ++j) row.push_back(scalar_str(sp.p(i, j)));
        p.push_back(row);
    }
    return json{{"n", sp.rank()}, {"q", scalar_str(sp.q())}, {"p", p}};
}

inline ParamSpec spec_from_json(const json& j) {
    int n = j.at("n").get<int>();
    Scalar q = scalar_parse(j.at("q").get<std::string>());
    std::map<std::pair<int, int>, Scalar> free;
    if (j.contains("p")) {
        const json& p = j.at("p");
        for (int i = 1; i <= n; ++i)
            for (int c = i + 1; c <= n; ++c)
                free[{i, c}] = scalar_parse(p.at(static_cast<size_t>(i - 1))
                                                .at(static_cast<size_t>(c - 1))
                                                .get<std::string>());
    }
    ParamSpec sp = ParamSpec::make(n, q, free);
    if (j.contains("p")) {
        // the dependent entries must agree with the constraints
        const json& p = j.at("p");
        for (int i = 1; i <= n; ++i)
            for (int c = 1; c <= n; ++c)
                if (sp.p(i, c) != scalar_parse(p.at(static_cast<size_t>(i - 1))
                                                   .at(static_cast<size_t>(c - 1))
                                                   .get<std::string>()))
                    throw std::invalid_argument("p matrix violates the type-B constraints");
    }
    return sp;
}

// -- elements ---------------------------------------------------------------

inline json element_to_json(const Element& a) {
    json out = json::array();
    for (const auto& [t, c] : a.terms()) {
        json term;
        term["coeff"] = scalar_str(c);
        term["neg"] = t.neg;
        term["grp"] = json{{"g", t.grp.g}, {"f", t.grp.f}};
        term["pos"] = t.pos;
        out.push_back(term);
    }
    return out;
}

inline Element element_from_json(int n, const json& j) {
    Element out;
    for (const auto& term : j) {
        MixedTerm t;
        t.grp = GroupElement(n);
        if (term.contains("grp")) {
            t.grp.g = term.at("grp").at("g").get<std::vector<int>>();
            t.grp.f = term.at("grp").at("f").get<std::vector<int>>();
            if (static_cast<int>(t.grp.g.size()) != n || static_cast<int>(t.grp.f.size()) != n)
                throw std::invalid_argument("group exponent vectors must have length n");
        }
        if (term.contains("neg"))
            for (int l : term.at("neg").get<std::vector<int>>()) t.neg.push_back(fold_index(n, l));
        if (term.contains("pos"))
            for (int l : term.at("pos").get<std::vector<int>>()) t.pos.push_back(fold_index(n, l));
        out.add_term(t, scalar_parse(term.at("coeff").get<std::string>()));
    }
    return out;
}

inline std::string element_to_text(const Element& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : a.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << scalar_str(c) << ")";
        for (int l : t.neg) os << " x" << l << "-";
        for (size_t i = 0; i < t.grp.g.size(); ++i)
            if (t.grp.g[i] != 0) {
                os << " g" << i + 1;
                if (t.grp.g[i] != 1) os << "^" << t.grp.g[i];
            }
        for (size_t i = 0; i < t.grp.f.size(); ++i)
            if (t.grp.f[i] != 0) {
                os << " f" << i + 1;
                if (t.grp.f[i] != 1) os << "^" << t.grp.f[i];
            }
        for (int l : t.pos) os << " x" << l;
    }
    return os.str();
}

inline json tensor_to_json(const TensorElement& a) {
    json out = json::array();
    for (const auto& [k, c] : a.terms()) {
        json term;
        term["coeff"] = scalar_str(c);
        term["left"] = element_to_json(Element::from_term(k.first, 1));
        term["right"] = element_to_json(Element::from_term(k.second, 1));
        out.push_back(term);
    }
    return out;
}

// -- schemes ----------------------------------------------------------------

inline json scheme_to_json(const Scheme& s) {
    return json{{"sign", s.sign >= 0 ? "positive" : "negative"},
                {"k", s.k},
                {"m", s.m},
                {"set", std::vector<int>(s.set.begin(), s.set.end())}};
}

inline Scheme scheme_from_json(int n, const json& j) {
    std::set<int> set;
    for (int e : j.at("set").get<std::vector<int>>()) set.insert(e);
    int sign = j.value("sign", std::string("positive")) == "negative" ? -1 : +1;
    return Scheme(n, j.at("k").get<int>(), j.at("m").get<int>(), set, sign);
}

inline json overlay_to_json(const std::vector<OverlayColumn>& cols) {
    json out = json::array();
    auto color = [](const std::optional<Color>& c) -> json {
        if (!c) return nullptr;
        return *c == Color::black ? "black" : "white";
    };
    for (const auto& c : cols) out.push_back(json::array({c.label, color(c.top), color(c.bottom)}));
    return out;
}

inline json bale_to_json(const Scheme& pos, const Scheme& neg, const BaleVerdict& v) {
    json overlays;
    constexpr OverlayVariant variants[] = {OverlayVariant::ST, OverlayVariant::STs,
                                           OverlayVariant::SsT, OverlayVariant::SsTs};
    for (auto var : variants)
        overlays[variant_name(var)] = overlay_to_json(overlay_columns(pos, neg, var));
    json out{{"passes", v.passes}, {"all_balanced", v.all_balanced}, {"overlays", overlays}};
    out["gra3_witness"] = v.gra3_witness ? json(variant_name(*v.gra3_witness)) : json(nullptr);
    return out;
}

// -- verdicts and reports -----------------------------------------------------

inline json verdict_to_json(const Verdict& v) {
    json out{{"pass", v.pass}};
    if (!v.witness.empty()) out["witness"] = v.witness;
    return out;
}

inline json report_to_json(const SuiteReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures) failures.push_back(json{{"case", f.key}, {"detail", f.detail}});
    json tags;
    for (const auto& [tag, count] : r.tag_counts) tags[tag] = count;
    return json{{"suite", r.suite},
                {"specs", r.spec_fingerprints},
                {"cases", r.cases},
                {"skipped", r.skipped},
                {"skips", r.skips},
                {"failures", failures},
                {"tags", tags},
                {"policy", r.policy},
                {"notes", r.notes},
                {"wall_ms", r.wall_ms},
                {"pass", r.pass()}};
}

}  // namespace qbn
