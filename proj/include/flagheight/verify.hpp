#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bundles.hpp"
#include "flag_heights.hpp"
#include "gln_bridge.hpp"
#include "point_oracle.hpp"
#include "random_inputs.hpp"
#include "weyl.hpp"

namespace flagheight {

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string witness;  // first counterexample, empty when passed
};

struct VerifyParams {
    std::uint32_t q = 2;
    unsigned max_deg = 2;
    std::uint64_t seed = 20240917;
    std::size_t draws = 200;
    bool strict = true;  // false: sample deg_FQ without canonical positivity
};

struct VerifyReport {
    std::string suite;
    std::vector<PropertyResult> properties;
    bool passed() const {
        for (const auto& p : properties)
            if (!p.passed) return false;
        return true;
    }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"weyl", "wellposed", "upset", "baby", "twist", "symhn",
                                                "oracle-consistency"};
    return names;
}

namespace detail {

/// Accumulates cases for one property, keeping the first witness.
class Check {
public:
    explicit Check(std::string name) { r_.name = std::move(name); }
    void expect(bool ok, const std::function<std::string()>& witness) {
        ++r_.cases;
        if (!ok && r_.passed) {
            r_.passed = false;
            r_.witness = witness();
        }
    }
    PropertyResult done() { return std::move(r_); }

private:
    PropertyResult r_;
};

inline std::string words(const std::vector<std::size_t>& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + "]";
}

inline std::string coords(const RationalVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

inline std::string describe(const FlagHeightInput& in) {
    std::ostringstream os;
    os << in.datum.name() << " P=" << words(in.p.indices()) << " Q=" << words(in.q.indices())
       << " lambda=" << coords(in.lambda.coords) << " deg=" << coords(in.deg_fq.coords);
    return os.str();
}

inline std::vector<ParabolicSubset> all_subsets(std::size_t d) {
    std::vector<ParabolicSubset> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < d; ++i)
            if (mask >> i & 1) idx.push_back(i);
        out.push_back(ParabolicSubset::make(idx, d));
    }
    return out;
}

inline std::size_t expected_weyl_order(const std::string& name) {
    if (name == "A1" || name == "GL2") return 2;
    if (name == "A2" || name == "GL3") return 6;
    if (name == "A3" || name == "GL4") return 24;
    if (name == "B2") return 8;
    if (name == "G2") return 12;
    return 0;
}

inline std::vector<std::vector<std::int64_t>> split_fixtures(std::size_t min_rank, std::size_t max_rank,
                                                             std::int64_t lo, std::int64_t hi) {
    std::vector<std::vector<std::int64_t>> out;
    std::function<void(std::vector<std::int64_t>&, std::size_t, std::int64_t)> rec =
        [&](std::vector<std::int64_t>& cur, std::size_t left, std::int64_t top) {
            if (left == 0) {
                out.push_back(cur);
                return;
            }
            for (std::int64_t a = top; a >= lo; --a) {
                cur.push_back(a);
                rec(cur, left - 1, a);
                cur.pop_back();
            }
        };
    for (std::size_t r = min_rank; r <= max_rank; ++r) {
        std::vector<std::int64_t> cur;
        rec(cur, r, hi);
    }
    return out;
}

} // namespace detail

/// Descending-sorted split bundles of rank min..max with twists in [lo, hi].
inline std::vector<SplitBundle> split_bundles(std::size_t min_rank, std::size_t max_rank, std::int64_t lo,
                                              std::int64_t hi) {
    std::vector<SplitBundle> out;
    for (auto& t : detail::split_fixtures(min_rank, max_rank, lo, hi)) out.emplace_back(t);
    return out;
}

inline const std::vector<std::string>& property_data() {
    static const std::vector<std::string> names{"A1", "A2", "A3", "B2", "G2", "GL2", "GL3", "GL4"};
    return names;
}

inline VerifyReport verify_weyl(const VerifyParams&) {
    using detail::Check;
    Check order("weyl group orders"), lengths("length = inversions = word length"),
        inv("length(w) = length(w^-1)"), sub("length(uv) <= length(u) + length(v)"),
        part("double cosets partition W"), antisym("closure order is a partial order");
    for (const auto& name : property_data()) {
        const auto rd = make_root_datum(name);
        const auto g = WeylGroup::generate(rd);
        order.expect(g.size() == detail::expected_weyl_order(name),
                     [&] { return name + ": |W| = " + std::to_string(g.size()); });
        for (std::size_t w = 0; w < g.size(); ++w) {
            lengths.expect(g.inversion_count(w) == g.length(w), [&] { return name + " w=" + detail::words(g.element(w).word); });
            inv.expect(g.length(g.inverse(w)) == g.length(w), [&] { return name + " w=" + detail::words(g.element(w).word); });
            for (std::size_t v = 0; v < g.size(); ++v)
                sub.expect(g.length(g.multiply(w, v)) <= g.length(w) + g.length(v),
                           [&] { return name + " u=" + detail::words(g.element(w).word) + " v=" + detail::words(g.element(v).word); });
        }
        for (const auto& q : detail::all_subsets(rd.semisimple_rank()))
            for (const auto& p : detail::all_subsets(rd.semisimple_rank())) {
                const auto dcs = double_cosets(g, q, p);
                std::vector<int> seen(g.size(), 0);
                for (const auto& dc : dcs)
                    for (auto x : dc.elements) ++seen[x];
                part.expect(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }),
                            [&] { return name + " Q=" + detail::words(q.indices()) + " P=" + detail::words(p.indices()); });
                for (std::size_t a = 0; a < dcs.size(); ++a)
                    for (std::size_t b = 0; b < dcs.size(); ++b) {
                        const bool ab = closure_leq(g, dcs[a], dcs[b]), ba = closure_leq(g, dcs[b], dcs[a]);
                        antisym.expect(a == b ? ab : !(ab && ba), [&] {
                            return name + " cosets " + detail::words(g.element(dcs[a].min_rep).word) + " and " +
                                   detail::words(g.element(dcs[b].min_rep).word);
                        });
                    }
            }
    }
    return {"weyl", {order.done(), lengths.done(), inv.done(), sub.done(), part.done(), antisym.done()}};
}

inline VerifyReport verify_wellposed(const VerifyParams& params) {
    using detail::Check;
    Check constant("zeta constant on double cosets"), identity("<d, w' w w'' lambda> = <d, w lambda>");
    InputSampler sampler(params.seed);
    for (const auto& name : property_data()) {
        const auto rd = make_root_datum(name);
        const auto g = WeylGroup::generate(rd);
        for (std::size_t draw = 0; draw < params.draws; ++draw) {
            auto in = sampler.input(rd);
            if (!params.strict) {
                in.deg_fq = sampler.degree(rd, in.q, false);
                in.assume_strongly_canonical = false;
            }
            std::string failure;
            try {
                cells(in, g);
            } catch (const ValidationError& e) {
                failure = e.what();
            }
            constant.expect(failure.empty(), [&] { return detail::describe(in) + ": " + failure; });

            const auto wq = parabolic_elements(g, in.q), wp = parabolic_elements(g, in.p);
            const auto w = static_cast<std::size_t>(sampler.uniform(0, static_cast<std::int64_t>(g.size()) - 1));
            const auto a = wq[static_cast<std::size_t>(sampler.uniform(0, static_cast<std::int64_t>(wq.size()) - 1))];
            const auto b = wp[static_cast<std::size_t>(sampler.uniform(0, static_cast<std::int64_t>(wp.size()) - 1))];
            const auto lhs = pairing(in.deg_fq, g.act(g.multiply(g.multiply(a, w), b), in.lambda));
            const auto rhs = pairing(in.deg_fq, g.act(w, in.lambda));
            identity.expect(lhs == rhs, [&] { return detail::describe(in) + " w=" + detail::words(g.element(w).word); });
        }
    }
    return {"wellposed", {constant.done(), identity.done()}};
}

/// {cells with zeta >= t} upward closed under closure_leq, for one input.
inline std::optional<std::string> upset_counterexample(const WeylGroup& g, const std::vector<Cell>& cs) {
    for (const auto& a : cs)
        for (const auto& b : cs)
            if (closure_leq(g, a.coset, b.coset) && a.zeta > b.zeta)
                return "cell " + detail::words(a.min_rep_word) + " (zeta " + to_string(a.zeta) + ") <= cell " +
                       detail::words(b.min_rep_word) + " (zeta " + to_string(b.zeta) + ")";
    return std::nullopt;
}

inline VerifyReport verify_upset(const VerifyParams& params) {
    using detail::Check;
    Check upset("{zeta >= t} upward closed (Z_t closed)"), zhang("e_i = inf{t : dim Z_t >= d-i+1}"),
        ends("e_1 = ess_min and e_{d+1} = min zeta");
    InputSampler sampler(params.seed + 1);
    for (const auto& name : property_data()) {
        const auto rd = make_root_datum(name);
        const auto g = WeylGroup::generate(rd);
        const auto subsets = detail::all_subsets(rd.semisimple_rank());
        const std::size_t per_pair = std::max<std::size_t>(1, params.draws / (subsets.size() * subsets.size()));
        for (const auto& p : subsets)
            for (const auto& q : subsets)
                for (std::size_t k = 0; k < per_pair; ++k) {
                    FlagHeightInput in{rd, p, q, sampler.antidominant(rd, p), sampler.degree(rd, q, params.strict),
                                       params.strict};
                    const auto r = analyze(in, g);
                    const auto bad = upset_counterexample(g, r.cells);
                    upset.expect(!bad, [&] { return detail::describe(in) + ": " + *bad; });

                    bool ok = true;
                    for (std::size_t i = 1; i <= r.dim + 1; ++i) {
                        // Z_t just above zeta_c holds every cell with zeta <= zeta_c.
                        std::optional<Rational> inf;
                        for (const auto& c : r.cells) {
                            std::optional<std::size_t> dz;
                            for (const auto& o : r.cells)
                                if (o.zeta <= c.zeta) dz = std::max(dz.value_or(0), o.ell);
                            if (dz && *dz >= r.dim - i + 1 && (!inf || c.zeta < *inf)) inf = c.zeta;
                        }
                        ok = ok && inf && *inf == r.zhang[i - 1];
                    }
                    zhang.expect(ok, [&] { return detail::describe(in); });
                    Rational lowest = r.cells.front().zeta;
                    for (const auto& c : r.cells) lowest = std::min(lowest, c.zeta);
                    ends.expect(r.zhang.front() == r.ess_min && r.zhang.back() == lowest,
                                [&] { return detail::describe(in); });
                }
    }
    return {"upset", {upset.done(), zhang.done(), ends.done()}};
}

inline VerifyReport verify_baby(const VerifyParams& params) {
    detail::Check triple("flag minima = HN slopes = oracle minima"), ranks("cell count = HN strata"),
        strict("bridged deg_FQ passes strict validation");
    for (const auto& b : split_bundles(2, 4, -2, 2)) {
        const GlnFlagSpec spec{b, FlagKind::projective, std::nullopt};
        std::optional<OracleParams> op;
        if (b.rank() <= 3) op = OracleParams{params.q, 1, params.max_deg};
        const auto rep = baby_theorem_check(spec, op);
        triple.expect(rep.agree(), [&] { return detail::coords(to_rational(b.twists())) + ": " + rep.discrepancies.front(); });
        ranks.expect(rep.flag_minima.size() == hn(b).pieces().size(), [&] { return detail::coords(to_rational(b.twists())); });
        const auto in = to_flag_input(spec);
        strict.expect(validate_degree_cocharacter(in.datum, in.deg_fq, in.q, true).ok,
                      [&] { return detail::coords(to_rational(b.twists())); });
    }
    return {"baby", {triple.done(), ranks.done(), strict.done()}};
}

inline VerifyReport verify_twist(const VerifyParams& params) {
    detail::Check scaling("twisted minima = minima / p^n"), pipeline("bridge(frobenius(E)) scaled = bridge(E)");
    InputSampler sampler(params.seed + 2);
    std::vector<FlagHeightInput> inputs;
    for (const auto& name : property_data())
        for (int k = 0; k < 3; ++k) inputs.push_back(sampler.input(make_root_datum(name)));
    for (const auto& in : inputs) {
        const auto base = analyze(in);
        for (std::int64_t p : {2, 3, 5})
            for (unsigned n = 0; n <= 3; ++n) {
                const auto tw = frobenius_twist(base, {p, n});
                const auto f = rational_power(p, n);
                bool ok = tw.report.ess_min * f == base.ess_min;
                for (std::size_t i = 0; i < base.minima.size(); ++i) ok = ok && tw.report.minima[i].zeta * f == base.minima[i].zeta;
                for (std::size_t i = 0; i < base.zhang.size(); ++i) ok = ok && tw.report.zhang[i] * f == base.zhang[i];
                for (std::size_t i = 0; i < base.filtration.thresholds.size(); ++i)
                    ok = ok && tw.report.filtration.thresholds[i] * f == base.filtration.thresholds[i];
                scaling.expect(ok, [&] { return detail::describe(in) + " p=" + std::to_string(p) + " n=" + std::to_string(n); });
            }
    }
    for (const auto& b : split_bundles(2, 3, -2, 2))
        for (std::int64_t p : {2, 3, 5})
            for (unsigned n = 0; n <= 3; ++n) {
                const auto direct = bridge_report({b, FlagKind::projective, std::nullopt});
                const auto twisted = bridge_report({b, FlagKind::projective, TwistSpec{p, n}});
                bool ok = direct.minima.size() == twisted.minima.size() && direct.ess_min == twisted.ess_min;
                for (std::size_t i = 0; ok && i < direct.minima.size(); ++i) ok = direct.minima[i].zeta == twisted.minima[i].zeta;
                pipeline.expect(ok, [&] { return detail::coords(to_rational(b.twists())) + " p=" + std::to_string(p) + " n=" + std::to_string(n); });
            }
    return {"twist", {scaling.done(), pipeline.done()}};
}

inline VerifyReport verify_symhn(const VerifyParams&) {
    detail::Check agree("weight filtration of Sym^m = hn(Sym^m E)"), slope("mu_max(Sym^m E) = m mu_max(E)");
    for (const auto& b : split_bundles(1, 3, -2, 2))
        for (std::size_t m = 0; m <= 6; ++m) {
            const auto lhs = polygon_of(weight_filtration(sym_standard_weights(b.rank(), m), slope_cocharacter(hn(b))));
            const auto rhs = hn(sym(b, m));
            agree.expect(lhs == rhs, [&] { return detail::coords(to_rational(b.twists())) + " m=" + std::to_string(m); });
            slope.expect(mu_max(rhs) == mu_max(hn(b)) * static_cast<std::int64_t>(m),
                         [&] { return detail::coords(to_rational(b.twists())) + " m=" + std::to_string(m); });
        }
    return {"symhn", {agree.done(), slope.done()}};
}

inline VerifyReport verify_oracle(const VerifyParams& params) {
    detail::Check algos("gcd-of-forms height = chart height"), bound("height >= zeta of the stratum cell"),
        rescale("height invariant under common rescaling"), minima("empirical stratum minima = HN slopes");
    const FiniteField f(params.q);
    for (const auto& b : split_bundles(2, 3, -2, 2)) {
        const GlnFlagSpec spec{b, FlagKind::projective, std::nullopt};
        std::vector<Rational> zeta;
        for (std::size_t j = 0; j < hn(b).pieces().size(); ++j) zeta.push_back(stratum_to_cell(spec, j).zeta);
        std::vector<HeightRecord> recs;
        const auto e = empirical_filtration(f, b, params.max_deg, &recs);
        const Poly factor = Poly(std::vector<Poly::Element>{1, 1});  // 1 + t
        for (const auto& r : recs) {
            auto wit = [&] { return detail::coords(to_rational(b.twists())) + " x=" + format(f, r.point); };
            algos.expect(height_by_charts(f, b, r.point) == r.height, wit);
            bound.expect(Rational(r.height) >= zeta[r.stratum], wit);
            PolyPoint scaled;
            for (const auto& c : r.point.coords) scaled.coords.push_back(mul(f, c, factor));
            rescale.expect(height(f, b, scaled) == r.height && normalize(f, scaled) == r.point, wit);
        }
        bool ok = true;
        for (std::size_t j = 0; j < zeta.size(); ++j) ok = ok && e.min_height[j] && Rational(*e.min_height[j]) == zeta[j];
        minima.expect(ok, [&] { return detail::coords(to_rational(b.twists())); });
    }
    return {"oracle-consistency", {algos.done(), bound.done(), rescale.done(), minima.done()}};
}

inline VerifyReport verify(const std::string& suite, const VerifyParams& params = {}) {
    if (suite == "weyl") return verify_weyl(params);
    if (suite == "wellposed") return verify_wellposed(params);
    if (suite == "upset") return verify_upset(params);
    if (suite == "baby") return verify_baby(params);
    if (suite == "twist") return verify_twist(params);
    if (suite == "symhn") return verify_symhn(params);
    if (suite == "oracle-consistency") return verify_oracle(params);
    throw ValidationError("unknown verify suite '" + suite + "'");
}

} // namespace flagheight
