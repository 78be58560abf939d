#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bundles.hpp"
#include "flag_heights.hpp"
#include "point_oracle.hpp"

namespace flagheight {

enum class FlagKind { projective, full };

inline std::string to_string(FlagKind k) { return k == FlagKind::projective ? "projective" : "full"; }

inline FlagKind parse_flag_kind(const std::string& s) {
    if (s == "projective") return FlagKind::projective;
    if (s == "full") return FlagKind::full;
    throw ValidationError("flag kind must be 'projective' or 'full', got '" + s + "'");
}

struct GlnFlagSpec {
    SplitBundle bundle;
    FlagKind flag_kind = FlagKind::projective;
    std::optional<TwistSpec> twist;
};

/// GL_n data of P(E) (rank-one quotients) or of the full flag bundle. The
/// canonical reduction of a split bundle is its HN filtration, so Delta_Q
/// omits the simple roots at the HN break points and deg_FQ is the slope
/// vector.
inline FlagHeightInput to_flag_input(const SplitBundle& bundle, FlagKind kind) {
    const std::size_t n = bundle.rank();
    if (n < 2) throw ValidationError("bridge needs rank at least 2");
    if (n > 5) throw ValidationError("bridge supports GL2..GL5");
    FlagHeightInput in{general_linear(n), {}, {}, {}, {}, true};

    const auto poly = hn(bundle);
    std::vector<std::size_t> breaks;
    std::size_t pos = 0;
    for (const auto& piece : poly.pieces()) {
        pos += static_cast<std::size_t>(piece.rank);
        if (pos < n) breaks.push_back(pos - 1);  // alpha_{pos}, zero-based
    }
    std::vector<std::size_t> q;
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (std::find(breaks.begin(), breaks.end(), i) == breaks.end()) q.push_back(i);
    in.q = ParabolicSubset::make(q, n - 1);
    in.deg_fq = slope_cocharacter(poly);

    in.lambda.coords.assign(n, 0);
    if (kind == FlagKind::projective) {
        std::vector<std::size_t> p;
        for (std::size_t i = 0; i + 2 < n; ++i) p.push_back(i);
        in.p = ParabolicSubset::make(p, n - 1);
        in.lambda.coords[n - 1] = 1;
    } else {
        in.p = ParabolicSubset{};
        for (std::size_t i = 0; i < n; ++i) in.lambda.coords[i] = static_cast<std::int64_t>(i);
    }
    return in;
}

inline FlagHeightInput to_flag_input(const GlnFlagSpec& spec) { return to_flag_input(spec.bundle, spec.flag_kind); }

/// Flag-height report for the spec. With a twist, heights are computed on the
/// Frobenius pullback and scaled back by 1/p^n.
inline FlagHeightReport bridge_report(const GlnFlagSpec& spec) {
    if (!spec.twist) return analyze(to_flag_input(spec));
    validate(*spec.twist);
    const auto pulled = frobenius(spec.bundle, spec.twist->p, spec.twist->n);
    return frobenius_twist(analyze(to_flag_input(pulled, spec.flag_kind)), *spec.twist).report;
}

/// Cell of P(E) matching stratum j, i.e. with zeta = mu_{j+1}.
inline Cell stratum_to_cell(const GlnFlagSpec& spec, std::size_t j) {
    if (spec.flag_kind != FlagKind::projective) throw ValidationError("stratum_to_cell needs a projective flag");
    const auto poly = hn(spec.bundle);
    if (j >= poly.pieces().size())
        throw ValidationError("stratum index " + std::to_string(j) + " out of range (" +
                              std::to_string(poly.pieces().size()) + " strata)");
    const auto cs = cells(to_flag_input(spec));
    if (cs.size() != poly.pieces().size())
        throw PropertyViolation("cells and HN strata are not in bijection",
                                std::to_string(cs.size()) + " cells, " + std::to_string(poly.pieces().size()) +
                                    " strata");
    std::optional<Cell> match;
    for (const auto& c : cs) {
        if (c.zeta != poly.pieces()[j].slope) continue;
        if (match) throw PropertyViolation("two cells share an HN slope", to_string(c.zeta));
        match = c;
    }
    if (!match) throw PropertyViolation("no cell for HN stratum", std::to_string(j));
    return *match;
}

struct OracleParams {
    std::uint32_t q = 2;
    unsigned ext = 1;
    unsigned max_deg = 1;
};

struct BabyReport {
    std::vector<Rational> flag_minima;       // zeta over cells, descending
    std::vector<Rational> hn_slopes;         // HN graded slopes, descending
    std::optional<std::vector<Rational>> oracle_minima;  // per stratum
    std::vector<std::string> discrepancies;
    bool agree() const { return discrepancies.empty(); }
};

/// flag_heights minima vs HN slopes vs (optionally) brute-force point heights.
inline BabyReport baby_theorem_check(const GlnFlagSpec& spec, const std::optional<OracleParams>& oracle = {}) {
    if (spec.flag_kind != FlagKind::projective) throw ValidationError("minima check needs a projective flag");
    BabyReport r;
    for (const auto& m : bridge_report(spec).minima) r.flag_minima.push_back(m.zeta);

    const auto scale = spec.twist ? 1 / rational_power(spec.twist->p, spec.twist->n) : Rational(1);
    const auto bundle =
        spec.twist ? frobenius(spec.bundle, spec.twist->p, spec.twist->n) : spec.bundle;
    for (const auto& s : hn(bundle).slopes()) r.hn_slopes.push_back(s * scale);

    auto render = [](const std::vector<Rational>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
        return s + "}";
    };
    if (r.flag_minima != r.hn_slopes)
        r.discrepancies.push_back("flag minima " + render(r.flag_minima) + " != HN slopes " + render(r.hn_slopes));

    if (oracle) {
        const FiniteField f(oracle->q, oracle->ext);
        const auto e = empirical_filtration(f, spec.bundle, oracle->max_deg);
        std::vector<Rational> mins;
        bool complete = true;
        for (const auto& m : e.min_height) {
            if (!m) complete = false;
            else mins.push_back(Rational(*m));
        }
        if (!complete) r.discrepancies.push_back("oracle: some stratum has no points at this max_deg");
        if (mins != hn(spec.bundle).slopes())
            r.discrepancies.push_back("oracle minima " + render(mins) + " != HN slopes of E " +
                                      render(hn(spec.bundle).slopes()));
        r.oracle_minima = std::move(mins);
    }
    return r;
}

} // namespace flagheight
