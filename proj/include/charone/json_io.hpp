#pragma once

// JSON wire formats for the domain types. Integers are emitted as JSON
// numbers when they fit in 64 bits and as decimal strings beyond that; both
// forms are accepted on input.

#include "correspondence.hpp"
#include "points.hpp"
#include "polygon.hpp"
#include "slope.hpp"
#include "staircase.hpp"
#include "tropical.hpp"

#include <json.hpp>

#include <string>

namespace charone {

using json = nlohmann::json;

inline json int_to_json(const Int& x) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (x >= lo && x <= hi) return x.convert_to<std::int64_t>();
    return x.str();
}

inline Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

// ---- Z_min ----

inline json to_json(const ZminElem& x) {
    if (x.is_zero()) return json{{"exp", "inf"}};
    return json{{"exp", int_to_json(x.exponent())}};
}

inline ZminElem zmin_from_json(const json& j) {
    const auto& e = j.at("exp");
    if (e.is_string() && e.get<std::string>() == "inf") return ZminElem::zero();
    return ZminElem(int_from_json(e));
}

// ---- staircases and polygons ----

inline json corners_to_json(const std::vector<Corner>& cs) {
    json arr = json::array();
    for (const auto& c : cs) arr.push_back(json::array({int_to_json(c.a), int_to_json(c.b)}));
    return arr;
}

inline std::vector<Corner> corners_from_json(const json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("expected an array of [a, b] pairs");
    std::vector<Corner> out;
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("expected an [a, b] pair");
        out.push_back({int_from_json(e[0]), int_from_json(e[1])});
    }
    return out;
}

inline json to_json(const Staircase& s) { return json{{"corners", corners_to_json(s.corners())}}; }

inline Staircase staircase_from_json(const json& j) {
    return Staircase::from_points(corners_from_json(j.at("corners")));
}

inline json to_json(const NewtonPolygon& p) {
    return json{{"extremes", corners_to_json(p.extremes())}};
}

inline NewtonPolygon polygon_from_json(const json& j) {
    return NewtonPolygon::from_points(corners_from_json(j.at("extremes")));
}

// ---- slopes ----

inline json to_json(const Slope& s) {
    if (s.is_rational()) {
        const Rational& v = s.rational_value();
        return json{{"kind", "rational"},
                    {"num", int_to_json(numerator(v))},
                    {"den", int_to_json(denominator(v))}};
    }
    if (s.is_quadratic()) {
        // (a + b sqrt(d)) / c with integral a, b, c
        const auto& q = s.quadratic_rep();
        const Int c = boost::multiprecision::lcm(denominator(q.a), denominator(q.b));
        return json{{"kind", "quadratic"},
                    {"a", int_to_json(numerator(q.a) * (c / denominator(q.a)))},
                    {"b", int_to_json(numerator(q.b) * (c / denominator(q.b)))},
                    {"c", int_to_json(c)},
                    {"d", int_to_json(q.d)}};
    }
    json terms = json::array();
    for (const auto& t : s.cf_rep().terms) terms.push_back(int_to_json(t));
    return json{{"kind", "cf"}, {"terms", terms}};
}

inline Slope slope_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational")
        return Slope::rational(int_from_json(j.at("num")), int_from_json(j.at("den")));
    if (kind == "quadratic") {
        const Int c = int_from_json(j.at("c"));
        if (c == 0) throw std::invalid_argument("quadratic slope: c must be nonzero");
        return Slope::quadratic(Rational(int_from_json(j.at("a")), c),
                                Rational(int_from_json(j.at("b")), c), int_from_json(j.at("d")));
    }
    if (kind == "cf") {
        std::vector<Int> terms;
        for (const auto& t : j.at("terms")) terms.push_back(int_from_json(t));
        return Slope::continued_fraction(std::move(terms));
    }
    throw std::invalid_argument("unknown slope kind: " + kind);
}

// ---- supernaturals ----

inline json to_json(const Supernatural& s) {
    if (s.is_base_point()) return json{{"base_point", true}};
    json expl = json::object();
    for (const auto& [p, e] : s.explicit_map())
        expl[p.str()] = e.infinite ? json("inf") : int_to_json(e.value);
    return json{{"explicit", expl},
                {"default", s.default_kind() == Supernatural::Default::infinity ? json("inf") : json(0)}};
}

inline Supernatural supernatural_from_json(const json& j) {
    if (j.contains("base_point") && j.at("base_point").get<bool>()) return Supernatural::base_point();
    Supernatural::Default dflt = Supernatural::Default::zero;
    if (j.contains("default")) {
        const auto& d = j.at("default");
        if (d.is_string() && d.get<std::string>() == "inf") dflt = Supernatural::Default::infinity;
        else if (!(d.is_number_integer() && d.get<std::int64_t>() == 0))
            throw std::invalid_argument("supernatural default must be 0 or \"inf\"");
    }
    Supernatural s = Supernatural::uniform(dflt);
    if (j.contains("explicit")) {
        for (const auto& [key, val] : j.at("explicit").items()) {
            const Int p(key);
            if (val.is_string() && val.get<std::string>() == "inf")
                s = s.with_exponent(p, PrimeExponent::inf());
            else
                s = s.with_exponent(p, PrimeExponent::finite(int_from_json(val)));
        }
    }
    return s;
}

// ---- composition results ----

inline json to_json(const ComposedCorrespondence& c) {
    const char* kind = c.kind() == ComposedCorrespondence::Kind::psi ? "psi"
                     : c.kind() == ComposedCorrespondence::Kind::id_eps_psi ? "id-eps-psi"
                                                                            : "id-eps";
    json out{{"result", kind}};
    if (c.slope().is_rational())
        out["slope"] = to_string(c.slope().rational_value());
    else
        out["slope"] = to_json(c.slope());
    out["eps_slope"] = c.deformed() ? to_string(c.ell_eps_slope()) : "0";
    return out;
}

}  // namespace charone
