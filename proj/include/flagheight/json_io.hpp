#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "bundles.hpp"
#include "flag_heights.hpp"
#include "gln_bridge.hpp"
#include "point_oracle.hpp"
#include "verify.hpp"

namespace flagheight::json_io {

using nlohmann::json;

// ---- parsing -------------------------------------------------------------

inline const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw ValidationError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ValidationError(where + ": missing field '" + key + "'");
    return *it;
}

inline Rational rational_from(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ValidationError(where + ": rationals are integers or \"p/q\" strings");
}

inline RationalVector rationals_from(const json& j, const std::string& where) {
    if (!j.is_array()) throw ValidationError(where + ": expected an array");
    RationalVector v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

inline std::int64_t integer_from(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ValidationError(where + ": expected an integer");
    return j.get<std::int64_t>();
}

inline std::vector<std::int64_t> integers_from(const json& j, const std::string& where) {
    if (!j.is_array()) throw ValidationError(where + ": expected an array of integers");
    std::vector<std::int64_t> v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(integer_from(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

inline RootDatum datum_from(const json& j) {
    if (!j.is_object()) throw ValidationError("datum: expected an object");
    if (j.contains("preset")) {
        if (!j["preset"].is_string()) throw ValidationError("datum.preset: expected a string");
        return make_root_datum(j["preset"].get<std::string>());
    }
    const auto rank = integer_from(field(j, "rank", "datum"), "datum.rank");
    if (rank <= 0) throw ValidationError("datum.rank must be positive");
    auto matrix = [&](const char* key) {
        const auto& m = field(j, key, "datum");
        if (!m.is_array()) throw ValidationError(std::string("datum.") + key + ": expected an array");
        IntMatrix out;
        for (std::size_t i = 0; i < m.size(); ++i)
            out.push_back(integers_from(m[i], std::string("datum.") + key + "[" + std::to_string(i) + "]"));
        return out;
    };
    std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
    return RootDatum::make(static_cast<std::size_t>(rank), matrix("simple_roots"), matrix("simple_coroots"), name);
}

inline ParabolicSubset subset_from(const json& j, std::size_t d, const std::string& where) {
    std::vector<std::size_t> idx;
    for (auto v : integers_from(j, where)) {
        if (v < 0) throw ValidationError(where + ": negative index");
        idx.push_back(static_cast<std::size_t>(v));
    }
    return ParabolicSubset::make(idx, d);
}

inline TwistSpec twist_from(const json& j) {
    TwistSpec t;
    t.p = integer_from(field(j, "p", "twist"), "twist.p");
    const auto n = integer_from(field(j, "n", "twist"), "twist.n");
    if (n < 0) throw ValidationError("twist.n must be nonnegative");
    t.n = static_cast<unsigned>(n);
    validate(t);
    return t;
}

inline FlagHeightInput flag_input_from(const json& j) {
    FlagHeightInput in{datum_from(field(j, "datum", "input")), {}, {}, {}, {}, true};
    const auto d = in.datum.semisimple_rank();
    in.p = subset_from(field(j, "P", "input"), d, "P");
    in.q = subset_from(field(j, "Q", "input"), d, "Q");
    in.lambda.coords = rationals_from(field(j, "lambda", "input"), "lambda");
    in.deg_fq.coords = rationals_from(field(j, "deg_FQ", "input"), "deg_FQ");
    if (j.contains("assume_strongly_canonical")) {
        if (!j["assume_strongly_canonical"].is_boolean())
            throw ValidationError("assume_strongly_canonical: expected a boolean");
        in.assume_strongly_canonical = j["assume_strongly_canonical"].get<bool>();
    }
    in.datum.check_rank(in.lambda, "lambda");
    in.datum.check_rank(in.deg_fq, "deg_FQ");
    validate(in);
    return in;
}

inline HNPolygon polygon_from(const json& j, const std::string& where) {
    if (!j.is_array()) throw ValidationError(where + ": expected [[rank, slope], ...]");
    std::vector<HNPiece> pieces;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto w = where + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() < 2 || j[i].size() > 3) throw ValidationError(w + ": expected [rank, slope]");
        HNPiece p;
        p.rank = integer_from(j[i][0], w);
        p.slope = rational_from(j[i][1], w);
        if (j[i].size() == 3) {
            if (!j[i][2].is_boolean()) throw ValidationError(w + ": strongly_semistable flag must be boolean");
            p.strongly_semistable = j[i][2].get<bool>();
        }
        pieces.push_back(p);
    }
    return HNPolygon(pieces);
}

inline FrobeniusProfile profile_from(const json& j) {
    FrobeniusProfile f;
    f.p = integer_from(field(j, "p", "profile"), "profile.p");
    const auto& t = field(j, "table", "profile");
    if (!t.is_object()) throw ValidationError("profile.table: expected an object keyed by n");
    for (auto it = t.begin(); it != t.end(); ++it) {
        std::size_t pos = 0;
        unsigned long n = 0;
        try {
            n = std::stoul(it.key(), &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != it.key().size()) throw ValidationError("profile.table: key '" + it.key() + "' is not an integer");
        f.table.emplace(static_cast<unsigned>(n), polygon_from(it.value(), "profile.table." + it.key()));
    }
    validate(f);
    return f;
}

inline std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& where) {
    std::vector<std::int64_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = text.find(',', start);
        const auto tok = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        try {
            std::size_t pos = 0;
            const auto v = std::stoll(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ValidationError(where + ": '" + tok + "' is not an integer");
        }
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

// ---- serialization -------------------------------------------------------

inline json to_json(const Rational& r) { return to_string(r); }

inline json to_json(const RationalVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline json datum_json(const RootDatum& rd) {
    return {{"name", rd.name()},
            {"rank", rd.rank()},
            {"simple_roots", rd.simple_roots()},
            {"simple_coroots", rd.simple_coroots()}};
}

inline json to_json(const FlagHeightInput& in) {
    json d = in.datum.name().empty() ? datum_json(in.datum) : json{{"preset", in.datum.name()}};
    for (const auto& n : preset_names())
        if (n == in.datum.name() && !(make_root_datum(n) == in.datum)) d = datum_json(in.datum);
    return {{"datum", d},
            {"P", in.p.indices()},
            {"Q", in.q.indices()},
            {"lambda", to_json(in.lambda.coords)},
            {"deg_FQ", to_json(in.deg_fq.coords)},
            {"assume_strongly_canonical", in.assume_strongly_canonical}};
}

inline json to_json(const Cell& c) {
    return {{"min_rep", c.min_rep_word}, {"ell", c.ell}, {"zeta", to_json(c.zeta)}, {"size", c.coset.elements.size()}};
}

inline json to_json(const FlagHeightReport& r) {
    json cells = json::array(), thresholds = json::array(), strata = json::array(), minima = json::array(),
         zhang = json::array();
    for (const auto& c : r.cells) cells.push_back(to_json(c));
    for (std::size_t k = 0; k < r.filtration.thresholds.size(); ++k) {
        thresholds.push_back(to_json(r.filtration.thresholds[k]));
        strata.push_back({{"t", to_json(r.filtration.thresholds[k])}, {"cells", r.filtration.strata[k]}});
    }
    for (const auto& m : r.minima) minima.push_back({{"zeta", to_json(m.zeta)}, {"cell", m.cell}});
    for (const auto& e : r.zhang) zhang.push_back(to_json(e));
    return {{"cells", cells},           {"thresholds", thresholds}, {"strata", strata},
            {"minima", minima},         {"zhang", zhang},           {"ess_min", to_json(r.ess_min)},
            {"dim", r.dim},             {"hypothesis", r.formal ? "formal" : "strongly_canonical"}};
}

inline json to_json(const TwistedResult& t) {
    json j = to_json(t.report);
    j["twist"] = {{"p", t.twist.p}, {"n", t.twist.n}};
    j["scale"] = to_json(t.scale);
    j["note"] = t.note;
    return j;
}

inline json to_json(const HNPolygon& p) {
    json a = json::array();
    for (const auto& piece : p.pieces()) {
        json e = {piece.rank, to_json(piece.slope)};
        if (!piece.strongly_semistable) e.push_back(false);
        a.push_back(e);
    }
    return a;
}

inline json to_json(const FiniteField& f, const PolyPoint& x) {
    json coords = json::array();
    for (const auto& c : x.coords) coords.push_back(c.coeffs());
    return {{"coords", coords}, {"text", format(f, x)}};
}

inline json to_json(const EmpiricalFiltration& e) {
    json mins = json::array(), entering = json::array();
    for (const auto& m : e.min_height) mins.push_back(m ? json(*m) : json(nullptr));
    for (const auto& [t, s] : e.entering) entering.push_back({{"threshold", t}, {"stratum", s}});
    return {{"min_height", mins}, {"entering", entering}, {"points", e.points}};
}

inline json to_json(const BabyReport& b) {
    json j = {{"flag_minima", to_json(b.flag_minima)},
              {"hn_slopes", to_json(b.hn_slopes)},
              {"agree", b.agree()},
              {"discrepancies", b.discrepancies}};
    if (b.oracle_minima) j["oracle_minima"] = to_json(*b.oracle_minima);
    return j;
}

inline json to_json(const VerifyReport& r) {
    json props = json::array();
    for (const auto& p : r.properties) {
        json e = {{"name", p.name}, {"passed", p.passed}, {"cases", p.cases}};
        if (!p.passed) e["witness"] = p.witness;
        props.push_back(e);
    }
    return {{"suite", r.suite}, {"passed", r.passed()}, {"properties", props}};
}

} // namespace flagheight::json_io
