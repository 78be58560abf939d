#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace flagheight::cli {

using nlohmann::json;

enum ExitCode : int { ok = 0, validation_failure = 2, property_violation = 3 };

namespace detail {

inline json read_payload(const std::string& path, std::istream& in) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(path);
        if (!f) throw ValidationError("cannot open input file '" + path + "'");
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("input is not valid JSON: ") + e.what());
    }
}

inline std::string join(const json& arr) {
    std::string s;
    for (const auto& v : arr) s += (s.empty() ? "" : ", ") + (v.is_string() ? v.get<std::string>() : v.dump());
    return s;
}

inline void table_report(std::ostream& out, const json& r) {
    if (r.contains("hypothesis")) out << "hypothesis: " << r["hypothesis"].get<std::string>() << "\n";
    if (r.contains("twist")) out << "twist: p=" << r["twist"]["p"] << " n=" << r["twist"]["n"] << " scale " << r["scale"].get<std::string>() << "\n";
    if (r.contains("cells")) {
        out << "cells (min_rep, ell, zeta, size):\n";
        for (const auto& c : r["cells"])
            out << "  [" << join(c["min_rep"]) << "]  ell=" << c["ell"] << "  zeta=" << c["zeta"].get<std::string>()
                << "  size=" << c["size"] << "\n";
    }
    if (r.contains("thresholds")) out << "thresholds: " << join(r["thresholds"]) << "\n";
    if (r.contains("minima")) {
        out << "successive minima:";
        for (const auto& m : r["minima"]) out << " " << m["zeta"].get<std::string>();
        out << "\n";
    }
    if (r.contains("zhang")) out << "zhang minima: " << join(r["zhang"]) << "\n";
    if (r.contains("ess_min")) out << "essential minimum: " << r["ess_min"].get<std::string>() << "\n";
}

inline void emit(std::ostream& out, const json& j, const std::string& format,
                 const std::function<void(std::ostream&, const json&)>& table) {
    if (format == "table") table(out, j);
    else out << j.dump(2) << "\n";
}

inline std::pair<std::string, std::string> split_kv(const std::string& tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw ValidationError("expected key=value, got '" + tok + "'");
    return {tok.substr(0, eq), tok.substr(eq + 1)};
}

inline std::int64_t to_int(const std::string& s, const std::string& what) {
    auto v = json_io::parse_int_list(s, what);
    if (v.size() != 1) throw ValidationError(what + ": expected one integer");
    return v[0];
}

inline json bundle_command(const json& payload) {
    json out = json::object();
    if (payload.contains("bundle")) {
        const SplitBundle b(json_io::integers_from(payload["bundle"], "bundle"));
        out["bundle"] = b.twists();
        out["rank"] = b.rank();
        out["degree"] = b.degree();
        out["slope"] = json_io::to_json(b.slope());
        out["hn"] = json_io::to_json(hn(b));
        out["mu_max"] = json_io::to_json(mu_max(hn(b)));
        if (payload.contains("sym")) {
            const auto m = json_io::integer_from(payload["sym"], "sym");
            if (m < 0) throw ValidationError("sym must be nonnegative");
            const auto s = sym(b, static_cast<std::size_t>(m));
            out["sym"] = {{"m", m}, {"twists", s.twists()}, {"hn", json_io::to_json(hn(s))}, {"mu_max", json_io::to_json(mu_max(hn(s)))}};
        }
        if (payload.contains("frobenius")) {
            const auto t = json_io::twist_from(payload["frobenius"]);
            const auto f = frobenius(b, t.p, t.n);
            out["frobenius"] = {{"p", t.p}, {"n", t.n}, {"twists", f.twists()}, {"hn", json_io::to_json(hn(f))}};
        }
        if (payload.contains("tensor")) {
            const SplitBundle other(json_io::integers_from(payload["tensor"], "tensor"));
            out["tensor"] = tensor(b, other).twists();
        }
        if (payload.contains("dual") && payload["dual"] == true) out["dual"] = dual(b).twists();
        if (payload.contains("ess_up_to")) {
            const auto k = json_io::integer_from(payload["ess_up_to"], "ess_up_to");
            if (k < 1) throw ValidationError("ess_up_to must be at least 1");
            const auto e = ess_min_projective(b, static_cast<std::size_t>(k));
            out["ess_min"] = {{"estimate", json_io::to_json(e.estimate)}, {"exact", json_io::to_json(e.exact)}};
        }
    }
    if (payload.contains("profile")) {
        const auto l = l_max(json_io::profile_from(payload["profile"]));
        json norm = json::array();
        for (const auto& [n, v] : l.normalized) norm.push_back({{"n", n}, {"value", json_io::to_json(v)}});
        out["l_max"] = {{"value", json_io::to_json(l.value)}, {"achieved_at", l.achieved_at},
                        {"stabilized", l.stabilized}, {"normalized", norm}};
    }
    if (payload.contains("weight_filtration")) {
        const auto& w = payload["weight_filtration"];
        WeightModule v;
        if (w.contains("sym_standard")) {
            const auto n = json_io::integer_from(json_io::field(w["sym_standard"], "n", "sym_standard"), "sym_standard.n");
            const auto m = json_io::integer_from(json_io::field(w["sym_standard"], "m", "sym_standard"), "sym_standard.m");
            if (n < 1 || m < 0) throw ValidationError("sym_standard needs n >= 1 and m >= 0");
            v = sym_standard_weights(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
        } else {
            const auto& ws = json_io::field(w, "weights", "weight_filtration");
            if (!ws.is_array()) throw ValidationError("weight_filtration.weights: expected an array");
            for (std::size_t i = 0; i < ws.size(); ++i)
                v.weights.push_back({json_io::rationals_from(ws[i], "weights[" + std::to_string(i) + "]")});
        }
        const Cocharacter d{json_io::rationals_from(json_io::field(w, "deg", "weight_filtration"), "deg")};
        json levels = json::array();
        for (const auto& l : weight_filtration(v, d)) {
            json members = json::array(), graded = json::array();
            for (const auto& x : l.members) members.push_back(json_io::to_json(x.coords));
            for (const auto& x : l.graded) graded.push_back(json_io::to_json(x.coords));
            levels.push_back({{"q", json_io::to_json(l.q)}, {"members", members}, {"graded", graded}});
        }
        out["weight_filtration"] = levels;
    }
    if (out.empty()) throw ValidationError("bundle payload needs 'bundle', 'profile' or 'weight_filtration'");
    return out;
}

} // namespace detail

/// Runs one command line; returns the process exit code. Nothing is written
/// to `out` when the command fails validation.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in = std::cin) {
    CLI::App app{"Height filtrations and successive minima of flag bundles over curves"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string input, format = "json";
    std::uint32_t q = 2;
    unsigned max_deg = 2, ext = 1;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--output,--report", format, "json or table")->check(CLI::IsMember({"json", "table"}));
    };

    std::vector<CLI::App*> flag_cmds;
    for (const char* name : {"filtration", "minima", "zhang", "twist"}) {
        auto* sub = app.add_subcommand(name, std::string(name) + " for a flag-height input JSON");
        sub->add_option("--input", input, "input JSON file ('-' for stdin)");
        add_common(sub);
        flag_cmds.push_back(sub);
    }
    std::int64_t twist_p = 0;
    unsigned twist_n = 0;
    flag_cmds[3]->add_option("--p", twist_p, "prime (overrides the input's twist.p)");
    flag_cmds[3]->add_option("--n", twist_n, "Frobenius exponent (overrides twist.n)");

    auto* bundle = app.add_subcommand("bundle", "split bundle / HN polygon / profile computations");
    bundle->add_option("--input", input, "input JSON file ('-' for stdin)");
    add_common(bundle);

    std::string model;
    auto* oracle = app.add_subcommand("oracle", "brute-force point heights on P(E) over F_q(t)");
    oracle->add_option("--model", model, "twists, e.g. 1,0")->required();
    oracle->add_option("--q", q, "prime field size");
    oracle->add_option("--ext", ext, "enumerate over F_{q^ext}(t)");
    oracle->add_option("--max-deg", max_deg, "maximal coordinate degree");
    bool summary_only = false;
    oracle->add_flag("--summary", summary_only, "omit the per-point list");
    add_common(oracle);

    std::string twists, flag_kind = "projective", check, twist_text;
    auto* bridge = app.add_subcommand("bridge", "GL_n bridge from a split bundle");
    bridge->add_option("--twists", twists, "twists, e.g. 1,1,0")->required();
    bridge->add_option("--flag", flag_kind, "projective or full");
    bridge->add_option("--check", check, "compare flag minima, HN slopes and oracle minima, e.g. q=2,maxdeg=1");
    bridge->add_option("--twist", twist_text, "Frobenius twist, e.g. p=2,n=1");
    add_common(bridge);

    std::string suite;
    std::uint64_t seed = VerifyParams{}.seed;
    std::size_t draws = VerifyParams{}.draws;
    auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
    verify_cmd->add_option("--suite", suite, "suite name")->required();
    verify_cmd->add_option("--q", q, "prime field size for oracle suites");
    verify_cmd->add_option("--max-deg", max_deg, "maximal coordinate degree for oracle suites");
    verify_cmd->add_option("--seed", seed, "random seed");
    verify_cmd->add_option("--draws", draws, "random draws per datum");
    bool formal = false;
    verify_cmd->add_flag("--formal", formal, "sample deg_FQ without canonical positivity");
    add_common(verify_cmd);

    std::vector<std::string> storage{"flagheight"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return validation_failure;
    }

    try {
        std::ostringstream buffer;
        auto table = detail::table_report;
        int code = ok;
        if (flag_cmds[0]->parsed() || flag_cmds[1]->parsed() || flag_cmds[2]->parsed()) {
            const auto payload = detail::read_payload(input, in);
            const auto fin = json_io::flag_input_from(payload);
            auto full = json_io::to_json(analyze(fin));
            json r;
            if (flag_cmds[0]->parsed()) r = full;
            else if (flag_cmds[1]->parsed())
                r = {{"cells", full["cells"]}, {"minima", full["minima"]}, {"hypothesis", full["hypothesis"]}};
            else
                r = {{"zhang", full["zhang"]}, {"ess_min", full["ess_min"]}, {"dim", full["dim"]}, {"hypothesis", full["hypothesis"]}};
            detail::emit(buffer, r, format, table);
        } else if (flag_cmds[3]->parsed()) {
            const auto payload = detail::read_payload(input, in);
            const auto fin = json_io::flag_input_from(payload);
            TwistSpec t;
            if (payload.contains("twist")) t = json_io::twist_from(payload["twist"]);
            else if (twist_p == 0) throw ValidationError("twist: input has no 'twist' and --p was not given");
            if (twist_p != 0) {
                t.p = twist_p;
                t.n = twist_n;
            }
            detail::emit(buffer, json_io::to_json(frobenius_twist(fin, t)), format, table);
        } else if (bundle->parsed()) {
            detail::emit(buffer, detail::bundle_command(detail::read_payload(input, in)), format,
                         [](std::ostream& o, const json& j) { o << j.dump(1) << "\n"; });
        } else if (oracle->parsed()) {
            const SplitBundle b(json_io::parse_int_list(model, "--model"));
            const FiniteField f(q, ext);
            std::vector<HeightRecord> recs;
            const auto e = empirical_filtration(f, b, max_deg, summary_only ? nullptr : &recs);
            json pts = json::array();
            for (const auto& r : recs) {
                auto p = json_io::to_json(f, r.point);
                p["height"] = r.height;
                p["stratum"] = r.stratum;
                pts.push_back(p);
            }
            json j = {{"model", b.twists()}, {"q", q}, {"ext", ext}, {"max_deg", max_deg},
                      {"empirical", json_io::to_json(e)}};
            if (!summary_only) j["points"] = pts;
            detail::emit(buffer, j, format, [&](std::ostream& o, const json& r) {
                o << "model O(" << detail::join(r["model"]) << ") over F_" << f.order() << "(t), max_deg " << max_deg << "\n";
                if (r.contains("points"))
                    for (const auto& p : r["points"])
                        o << "  " << p["text"].get<std::string>() << "  height " << p["height"] << "  stratum " << p["stratum"] << "\n";
                o << "stratum minima:";
                for (const auto& m : r["empirical"]["min_height"]) o << " " << (m.is_null() ? "no-data" : m.dump());
                o << "\n";
            });
        } else if (bridge->parsed()) {
            GlnFlagSpec spec{SplitBundle(json_io::parse_int_list(twists, "--twists")), parse_flag_kind(flag_kind), std::nullopt};
            if (!twist_text.empty()) {
                TwistSpec t;
                std::stringstream ss(twist_text);
                for (std::string tok; std::getline(ss, tok, ',');) {
                    auto [k, v] = detail::split_kv(tok);
                    if (k == "p") t.p = detail::to_int(v, "--twist p");
                    else if (k == "n") {
                        const auto n = detail::to_int(v, "--twist n");
                        if (n < 0) throw ValidationError("--twist n must be nonnegative");
                        t.n = static_cast<unsigned>(n);
                    } else throw ValidationError("--twist: unknown key '" + k + "'");
                }
                validate(t);
                spec.twist = t;
            }
            json j = {{"input", json_io::to_json(to_flag_input(spec))}, {"report", json_io::to_json(bridge_report(spec))}};
            if (spec.twist) j["twist"] = {{"p", spec.twist->p}, {"n", spec.twist->n}};
            if (!check.empty()) {
                OracleParams op;
                std::stringstream ss(check);
                for (std::string tok; std::getline(ss, tok, ',');) {
                    auto [k, v] = detail::split_kv(tok);
                    const auto x = detail::to_int(v, "--check " + k);
                    if (x < 0) throw ValidationError("--check values must be nonnegative");
                    if (k == "q") op.q = static_cast<std::uint32_t>(x);
                    else if (k == "maxdeg" || k == "max_deg") op.max_deg = static_cast<unsigned>(x);
                    else if (k == "ext") op.ext = static_cast<unsigned>(x);
                    else throw ValidationError("--check: unknown key '" + k + "'");
                }
                const auto rep = baby_theorem_check(spec, op);
                j["baby"] = json_io::to_json(rep);
                if (!rep.agree()) code = property_violation;
            }
            detail::emit(buffer, j, format, [](std::ostream& o, const json& r) {
                detail::table_report(o, r["report"]);
                if (r.contains("baby"))
                    o << "minima vs HN slopes: " << (r["baby"]["agree"].get<bool>() ? "agree" : "DISAGREE") << "\n";
            });
        } else if (verify_cmd->parsed()) {
            VerifyParams params;
            params.q = q;
            params.max_deg = max_deg;
            params.seed = seed;
            params.draws = draws;
            params.strict = !formal;
            const auto rep = verify(suite, params);
            if (!rep.passed()) code = property_violation;
            detail::emit(buffer, json_io::to_json(rep), format, [](std::ostream& o, const json& r) {
                for (const auto& p : r["properties"]) {
                    o << (p["passed"].get<bool>() ? "PASS " : "FAIL ") << p["name"].get<std::string>() << " (" << p["cases"] << " cases)";
                    if (p.contains("witness")) o << "  witness: " << p["witness"].get<std::string>();
                    o << "\n";
                }
            });
        }
        out << buffer.str();
        return code;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return validation_failure;
    } catch (const PropertyViolation& e) {
        err << "property violation: " << e.what() << "\n";
        out << json{{"error", e.what()}, {"witness", e.witness()}}.dump(2) << "\n";
        return property_violation;
    } catch (const json::exception& e) {
        err << "validation error: " << e.what() << "\n";
        return validation_failure;
    }
}

} // namespace flagheight::cli
