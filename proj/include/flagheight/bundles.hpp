#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "root_datum.hpp"

namespace flagheight {

/// E = O(a_1) + ... + O(a_r) on the projective line, twists sorted descending.
class SplitBundle {
public:
    SplitBundle() = default;
    explicit SplitBundle(std::vector<std::int64_t> twists) : twists_(std::move(twists)) {
        if (twists_.empty()) throw ValidationError("split bundle needs at least one summand");
        std::sort(twists_.begin(), twists_.end(), std::greater<>());
    }

    const std::vector<std::int64_t>& twists() const { return twists_; }
    std::size_t rank() const { return twists_.size(); }
    std::int64_t degree() const {
        std::int64_t s = 0;
        for (auto a : twists_) s += a;
        return s;
    }
    Rational slope() const { return Rational(degree(), static_cast<std::int64_t>(rank())); }

    friend bool operator==(const SplitBundle&, const SplitBundle&) = default;

private:
    std::vector<std::int64_t> twists_;
};

struct HNPiece {
    std::int64_t rank = 0;
    Rational slope;
    bool strongly_semistable = true;
    friend bool operator==(const HNPiece&, const HNPiece&) = default;
};

/// Harder-Narasimhan profile with strictly decreasing slopes. Adjacent pieces
/// of equal slope are merged on construction: an extension of semistable
/// bundles of the same slope is semistable of that slope.
class HNPolygon {
public:
    HNPolygon() = default;
    explicit HNPolygon(const std::vector<HNPiece>& pieces) {
        for (const auto& p : pieces) {
            if (p.rank <= 0) throw ValidationError("HN piece rank must be positive");
            if (!pieces_.empty() && pieces_.back().slope == p.slope) {
                pieces_.back().rank += p.rank;
                pieces_.back().strongly_semistable = pieces_.back().strongly_semistable && p.strongly_semistable;
                continue;
            }
            if (!pieces_.empty() && pieces_.back().slope < p.slope)
                throw ValidationError("HN slopes must be decreasing (" + to_string(pieces_.back().slope) + " then " +
                                      to_string(p.slope) + ")");
            pieces_.push_back(p);
        }
        if (pieces_.empty()) throw ValidationError("HN polygon needs at least one piece");
    }

    const std::vector<HNPiece>& pieces() const { return pieces_; }
    std::int64_t rank() const {
        std::int64_t r = 0;
        for (const auto& p : pieces_) r += p.rank;
        return r;
    }
    Rational degree() const {
        Rational d = 0;
        for (const auto& p : pieces_) d += p.slope * p.rank;
        return d;
    }
    std::vector<Rational> slopes() const {
        std::vector<Rational> s;
        for (const auto& p : pieces_) s.push_back(p.slope);
        return s;
    }

    friend bool operator==(const HNPolygon&, const HNPolygon&) = default;

private:
    std::vector<HNPiece> pieces_;
};

inline HNPolygon hn(const SplitBundle& b) {
    std::vector<HNPiece> pieces;
    for (auto a : b.twists()) pieces.push_back({1, Rational(a), true});
    return HNPolygon(pieces);
}

inline Rational mu_max(const HNPolygon& poly) { return poly.pieces().front().slope; }

/// Sym^m over the summands: one line bundle per monomial of degree m.
inline SplitBundle sym(const SplitBundle& b, std::size_t m) {
    const auto& a = b.twists();
    std::vector<std::int64_t> out;
    std::function<void(std::size_t, std::size_t, std::int64_t)> rec = [&](std::size_t from, std::size_t left,
                                                                          std::int64_t acc) {
        if (left == 0) {
            out.push_back(acc);
            return;
        }
        for (std::size_t i = from; i < a.size(); ++i) rec(i, left - 1, acc + a[i]);
    };
    rec(0, m, 0);
    return SplitBundle(std::move(out));
}

inline SplitBundle tensor(const SplitBundle& x, const SplitBundle& y) {
    std::vector<std::int64_t> out;
    for (auto a : x.twists())
        for (auto b : y.twists()) out.push_back(a + b);
    return SplitBundle(std::move(out));
}

inline SplitBundle dual(const SplitBundle& b) {
    std::vector<std::int64_t> out;
    for (auto a : b.twists()) out.push_back(-a);
    return SplitBundle(std::move(out));
}

/// (Fr^n)^* O(a) = O(p^n a).
inline SplitBundle frobenius(const SplitBundle& b, std::int64_t p, unsigned n) {
    if (!is_prime(p)) throw ValidationError("frobenius: p = " + std::to_string(p) + " is not prime");
    std::int64_t f = 1;
    for (unsigned i = 0; i < n; ++i) f *= p;
    std::vector<std::int64_t> out;
    for (auto a : b.twists()) out.push_back(a * f);
    return SplitBundle(std::move(out));
}

struct EssMinEstimate {
    Rational estimate;  // mu_max(Sym^m E) / m
    Rational exact;     // mu_max(E)
};

inline EssMinEstimate ess_min_projective(const SplitBundle& b, std::size_t up_to) {
    if (up_to == 0) throw ValidationError("ess_min_projective: up_to must be at least 1");
    EssMinEstimate r;
    r.exact = mu_max(hn(b));
    for (std::size_t m = 1; m <= up_to; ++m) {
        const Rational est = mu_max(hn(sym(b, m))) / static_cast<std::int64_t>(m);
        if (est != r.exact)
            throw PropertyViolation("mu_max(Sym^m E)/m differs from mu_max(E) for a split bundle",
                                    "m = " + std::to_string(m) + ": " + to_string(est) + " vs " + to_string(r.exact));
        r.estimate = est;
    }
    return r;
}

/// HN polygons of (Fr^n)^* E for the listed n.
struct FrobeniusProfile {
    std::int64_t p = 2;
    std::map<unsigned, HNPolygon> table;
};

inline void validate(const FrobeniusProfile& f) {
    if (!is_prime(f.p)) throw ValidationError("profile: p = " + std::to_string(f.p) + " is not prime");
    if (!f.table.count(0)) throw ValidationError("profile: table must contain n = 0");
}

inline FrobeniusProfile profile_of(const SplitBundle& b, std::int64_t p, unsigned up_to) {
    FrobeniusProfile f;
    f.p = p;
    for (unsigned n = 0; n <= up_to; ++n) f.table.emplace(n, hn(frobenius(b, p, n)));
    return f;
}

struct LMax {
    Rational value;
    unsigned achieved_at = 0;
    bool stabilized = false;  // last two consecutive entries agree
    std::vector<std::pair<unsigned, Rational>> normalized;
};

/// max_n mu_max((Fr^n)^* E) / p^n over the table.
inline LMax l_max(const FrobeniusProfile& f) {
    validate(f);
    LMax r;
    bool first = true;
    for (const auto& [n, poly] : f.table) {
        const Rational v = mu_max(poly) / rational_power(f.p, n);
        r.normalized.emplace_back(n, v);
        if (first || v > r.value) {
            r.value = v;
            r.achieved_at = n;
            first = false;
        }
    }
    const auto& s = r.normalized;
    if (s.size() >= 2) {
        const auto& a = s[s.size() - 2];
        const auto& b = s.back();
        r.stabilized = b.first == a.first + 1 && a.second == b.second;
    }
    return r;
}

/// Multiset of T-weights of a representation, multiplicity = dim V[nu].
struct WeightModule {
    std::vector<Character> weights;
};

struct WeightLevel {
    Rational q;
    std::vector<Character> members;  // V_q: weights with <d, nu> >= q
    std::vector<Character> graded;   // gr_q: weights with <d, nu> == q
};

/// V_q = sum of V[nu] with <d, nu> >= q, at each jump q, largest q first.
inline std::vector<WeightLevel> weight_filtration(const WeightModule& v, const Cocharacter& d) {
    if (v.weights.empty()) throw ValidationError("weight module must be nonempty");
    std::vector<Rational> values;
    for (const auto& w : v.weights) values.push_back(pairing(d, w));
    std::vector<Rational> jumps = values;
    std::sort(jumps.begin(), jumps.end(), std::greater<>());
    jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());
    std::vector<WeightLevel> out;
    for (const auto& q : jumps) {
        WeightLevel lvl;
        lvl.q = q;
        for (std::size_t i = 0; i < v.weights.size(); ++i) {
            if (values[i] >= q) lvl.members.push_back(v.weights[i]);
            if (values[i] == q) lvl.graded.push_back(v.weights[i]);
        }
        out.push_back(std::move(lvl));
    }
    return out;
}

/// HN profile read off the graded pieces of a weight filtration.
inline HNPolygon polygon_of(const std::vector<WeightLevel>& levels) {
    std::vector<HNPiece> pieces;
    for (const auto& l : levels) pieces.push_back({static_cast<std::int64_t>(l.graded.size()), l.q, true});
    return HNPolygon(pieces);
}

/// Weights of Sym^m of the standard representation of GL_n.
inline WeightModule sym_standard_weights(std::size_t n, std::size_t m) {
    WeightModule out;
    RationalVector cur(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t left) {
        if (left == 0) {
            out.weights.push_back(Character{cur});
            return;
        }
        for (std::size_t i = from; i < n; ++i) {
            cur[i] += 1;
            rec(i, left - 1);
            cur[i] -= 1;
        }
    };
    rec(0, m);
    return out;
}

/// (mu_1 repeated r_1 times, mu_2 repeated r_2 times, ...).
inline Cocharacter slope_cocharacter(const HNPolygon& poly) {
    Cocharacter d;
    for (const auto& p : poly.pieces())
        for (std::int64_t i = 0; i < p.rank; ++i) d.coords.push_back(p.slope);
    return d;
}

} // namespace flagheight
