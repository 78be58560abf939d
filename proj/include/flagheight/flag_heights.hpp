#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "root_datum.hpp"
#include "weyl.hpp"

namespace flagheight {

/// Data of the flag bundle F/P with its line bundle L_lambda, given through
/// the degree cocharacter of the canonical reduction F_Q.
struct FlagHeightInput {
    RootDatum datum;
    ParabolicSubset p;
    ParabolicSubset q;
    Character lambda;
    Cocharacter deg_fq;
    bool assume_strongly_canonical = true;
};

/// Throws ValidationError naming every violated hypothesis.
inline void validate(const FlagHeightInput& in) {
    std::vector<std::string> errs;
    for (const auto& s : validate_strictly_antidominant(in.datum, in.lambda, in.p).diagnostics) errs.push_back(s);
    for (const auto& s :
         validate_degree_cocharacter(in.datum, in.deg_fq, in.q, in.assume_strongly_canonical).diagnostics)
        errs.push_back(s);
    if (errs.empty()) return;
    std::string msg;
    for (const auto& e : errs) msg += (msg.empty() ? "" : "; ") + e;
    throw ValidationError(msg);
}

/// Schubert cell C_w for a double coset w in W_Q\W/W_P.
struct Cell {
    DoubleCoset coset;
    std::vector<std::size_t> min_rep_word;
    std::size_t ell = 0;
    Rational zeta;
};

/// Z_t at each jump: strata[k] are the indices of cells with zeta < thresholds[k].
struct Filtration {
    std::vector<Rational> thresholds;  // distinct zeta values, increasing
    std::vector<std::vector<std::size_t>> strata;
    std::size_t cell_count = 0;
};

struct TwistSpec {
    std::int64_t p = 2;
    unsigned n = 0;
};

inline void validate(const TwistSpec& t) {
    if (!is_prime(t.p)) throw ValidationError("twist: p = " + std::to_string(t.p) + " is not prime");
}

/// One cell per double coset; zeta checked constant over the whole coset.
/// Sorted by (ell descending, zeta descending).
inline std::vector<Cell> cells(const FlagHeightInput& in, const WeylGroup& g) {
    validate(in);
    if (!(g.datum() == in.datum)) throw ValidationError("Weyl group built over a different root datum");
    std::vector<Cell> out;
    for (auto& dc : double_cosets(g, in.q, in.p)) {
        Cell c;
        c.zeta = pairing(in.deg_fq, g.act(dc.min_rep, in.lambda));
        for (auto w : dc.elements) {
            const Rational z = pairing(in.deg_fq, g.act(w, in.lambda));
            if (z != c.zeta) {
                std::string wit = "zeta(";
                for (auto i : g.element(dc.min_rep).word) wit += std::to_string(i);
                wit += ") = " + to_string(c.zeta) + " but zeta(";
                for (auto i : g.element(w).word) wit += std::to_string(i);
                wit += ") = " + to_string(z);
                throw ValidationError("zeta is not constant on a double coset (invalid deg_FQ or lambda): " + wit);
            }
        }
        c.min_rep_word = g.element(dc.min_rep).word;
        c.ell = dc.ell;
        c.coset = std::move(dc);
        out.push_back(std::move(c));
    }
    std::stable_sort(out.begin(), out.end(), [](const Cell& a, const Cell& b) {
        if (a.ell != b.ell) return a.ell > b.ell;
        return a.zeta > b.zeta;
    });
    return out;
}

inline std::vector<Cell> cells(const FlagHeightInput& in) { return cells(in, WeylGroup::generate(in.datum)); }

/// Indices of cells with zeta < t, i.e. the cells making up Z_t.
inline std::vector<std::size_t> stratum_at(const std::vector<Cell>& cs, const Rational& t) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (cs[i].zeta < t) out.push_back(i);
    return out;
}

/// dim Z_t as the largest cell dimension it contains; nullopt when empty.
inline std::optional<std::size_t> dim_at(const std::vector<Cell>& cs, const Rational& t) {
    std::optional<std::size_t> d;
    for (const auto& c : cs)
        if (c.zeta < t) d = std::max(d.value_or(0), c.ell);
    return d;
}

inline Filtration height_filtration(const std::vector<Cell>& cs) {
    Filtration f;
    f.cell_count = cs.size();
    for (const auto& c : cs) f.thresholds.push_back(c.zeta);
    std::sort(f.thresholds.begin(), f.thresholds.end());
    f.thresholds.erase(std::unique(f.thresholds.begin(), f.thresholds.end()), f.thresholds.end());
    for (const auto& t : f.thresholds) f.strata.push_back(stratum_at(cs, t));
    return f;
}

struct Minimum {
    Rational zeta;
    std::size_t cell;
};

/// Every cell with its zeta, descending by zeta.
inline std::vector<Minimum> successive_minima(const std::vector<Cell>& cs) {
    std::vector<Minimum> out;
    for (std::size_t i = 0; i < cs.size(); ++i) out.push_back({cs[i].zeta, i});
    std::stable_sort(out.begin(), out.end(), [](const Minimum& a, const Minimum& b) { return a.zeta > b.zeta; });
    return out;
}

inline std::size_t open_cell(const std::vector<Cell>& cs, std::size_t dim) {
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].ell != dim) continue;
        if (found) throw PropertyViolation("several cells of full dimension", std::to_string(dim));
        found = i;
    }
    if (!found) throw PropertyViolation("no cell of full dimension", std::to_string(dim));
    return *found;
}

/// e_i = min{zeta_w : ell(w) >= dim - i + 1}, i = 1..dim+1.
inline std::vector<Rational> zhang_minima(const std::vector<Cell>& cs, std::size_t dim) {
    open_cell(cs, dim);
    std::vector<Rational> e;
    for (std::size_t i = 1; i <= dim + 1; ++i) {
        const std::size_t need = dim - i + 1;
        std::optional<Rational> m;
        for (const auto& c : cs)
            if (c.ell >= need && (!m || c.zeta < *m)) m = c.zeta;
        e.push_back(*m);
    }
    return e;
}

inline Rational essential_minimum(const std::vector<Cell>& cs, std::size_t dim) {
    return cs[open_cell(cs, dim)].zeta;
}

inline bool check_lower_bound(const Cell& cell, const Rational& observed_height) {
    return observed_height >= cell.zeta;
}

/// Everything the CLI reports for one flag bundle.
struct FlagHeightReport {
    std::vector<Cell> cells;
    std::size_t dim = 0;
    Filtration filtration;
    std::vector<Minimum> minima;
    std::vector<Rational> zhang;
    Rational ess_min;
    bool formal = false;  // strongly-canonical hypothesis not assumed
};

inline FlagHeightReport analyze(const FlagHeightInput& in, const WeylGroup& g) {
    FlagHeightReport r;
    r.cells = cells(in, g);
    r.dim = dim_flag(in.datum, in.p);
    r.filtration = height_filtration(r.cells);
    r.minima = successive_minima(r.cells);
    r.zhang = zhang_minima(r.cells, r.dim);
    r.ess_min = essential_minimum(r.cells, r.dim);
    r.formal = !in.assume_strongly_canonical;
    return r;
}

inline FlagHeightReport analyze(const FlagHeightInput& in) { return analyze(in, WeylGroup::generate(in.datum)); }

struct TwistedResult {
    TwistSpec twist;
    Rational scale;  // 1/p^n
    FlagHeightReport report;
    std::string note;
};

/// Heights on X from the data of X~ = ((Fr^n)^* F / P)_K: every value is
/// divided by p^n, cells keep their double-coset indexing.
inline TwistedResult frobenius_twist(const FlagHeightReport& twisted, const TwistSpec& t) {
    validate(t);
    TwistedResult out;
    out.twist = t;
    out.scale = 1 / rational_power(t.p, t.n);
    out.report = twisted;
    for (auto& c : out.report.cells) c.zeta *= out.scale;
    for (auto& th : out.report.filtration.thresholds) th *= out.scale;
    for (auto& m : out.report.minima) m.zeta *= out.scale;
    for (auto& e : out.report.zhang) e *= out.scale;
    out.report.ess_min *= out.scale;
    out.note = "strata transported along phi_K; cell indexing unchanged";
    return out;
}

inline TwistedResult frobenius_twist(const FlagHeightInput& twisted_input, const TwistSpec& t) {
    validate(t);
    return frobenius_twist(analyze(twisted_input), t);
}

} // namespace flagheight
