#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bundles.hpp"
#include "poly.hpp"

namespace flagheight {

/// A K-point [f_1 : ... : f_n] of P(V), K = F_q(t). Coordinates follow the
/// descending twist order of the model bundle.
struct PolyPoint {
    std::vector<Poly> coords;
    friend bool operator==(const PolyPoint&, const PolyPoint&) = default;
};

struct HeightRecord {
    PolyPoint point;
    std::int64_t height = 0;
    std::size_t stratum = 0;
};

inline bool is_zero(const PolyPoint& x) {
    return std::all_of(x.coords.begin(), x.coords.end(), [](const Poly& p) { return p.is_zero(); });
}

/// Divides by the gcd of the coordinates and makes the first nonzero one monic.
inline PolyPoint normalize(const FiniteField& f, const PolyPoint& x) {
    if (is_zero(x)) throw ValidationError("the zero tuple is not a point");
    Poly g;
    for (const auto& c : x.coords) g = gcd(f, g, c);
    PolyPoint out;
    for (const auto& c : x.coords) out.coords.push_back(divmod(f, c, g).first);
    for (const auto& c : out.coords)
        if (!c.is_zero()) {
            const auto s = f.inv(c.lead());
            for (auto& d : out.coords) d = scale(f, d, s);
            break;
        }
    return out;
}

inline bool is_normalized(const FiniteField& f, const PolyPoint& x) {
    if (is_zero(x)) return false;
    Poly g;
    for (const auto& c : x.coords) g = gcd(f, g, c);
    if (g.degree() != 0) return false;
    for (const auto& c : x.coords)
        if (!c.is_zero()) return c.lead() == 1;
    return false;
}

namespace detail {

inline void check_point(const SplitBundle& model, const PolyPoint& x) {
    if (x.coords.size() != model.rank())
        throw ValidationError("point has " + std::to_string(x.coords.size()) + " coordinates, model has rank " +
                              std::to_string(model.rank()));
    if (is_zero(x)) throw ValidationError("the zero tuple is not a point");
}

} // namespace detail

/// Degree of the rank-one quotient of E = sum O(a_i) cut out by x.
/// c = max(deg f_i + a_i); each f_i is homogenized to a form of degree
/// c - a_i in (S, T); the answer is c - deg gcd(forms). The gcd is taken in
/// the chart T = 1 plus the power of T dividing every form.
inline std::int64_t height(const FiniteField& f, const SplitBundle& model, const PolyPoint& x) {
    detail::check_point(model, x);
    const auto& a = model.twists();
    std::optional<std::int64_t> c;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!x.coords[i].is_zero()) c = std::max(c.value_or(x.coords[i].degree() + a[i]), x.coords[i].degree() + a[i]);
    std::optional<std::size_t> t_power;
    Poly g;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& fi = x.coords[i];
        if (fi.is_zero()) continue;
        const auto form_degree = static_cast<std::size_t>(*c - a[i]);
        t_power = std::min(t_power.value_or(fi.valuation()), fi.valuation());
        // F_i(s, 1) = s^(c - a_i) f_i(1/s)
        g = gcd(f, g, reversed(fi, form_degree));
    }
    return *c - static_cast<std::int64_t>(*t_power) - g.degree();
}

/// Same degree computed on the two standard charts: on t != inf the quotient
/// is generated by gcd(f_i); at t = inf the local generator of O(a_i) maps to
/// t^(a_i) f_i, of order -(a_i + deg f_i).
inline std::int64_t height_by_charts(const FiniteField& f, const SplitBundle& model, const PolyPoint& x) {
    detail::check_point(model, x);
    const auto& a = model.twists();
    Poly g0;
    std::optional<std::int64_t> min_order_at_infinity;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& fi = x.coords[i];
        if (fi.is_zero()) continue;
        g0 = gcd(f, g0, fi);
        const std::int64_t ord = -(a[i] + fi.degree());
        min_order_at_infinity = std::min(min_order_at_infinity.value_or(ord), ord);
    }
    // deg L = -(sum of orders of the local generators).
    return -static_cast<std::int64_t>(g0.degree()) - *min_order_at_infinity;
}

/// Largest j such that x vanishes on the first j HN blocks of the model.
inline std::size_t stratum(const SplitBundle& model, const PolyPoint& x) {
    detail::check_point(model, x);
    std::size_t j = 0, pos = 0;
    const auto poly = hn(model);
    for (const auto& piece : poly.pieces()) {
        for (std::int64_t k = 0; k < piece.rank; ++k)
            if (!x.coords[pos + static_cast<std::size_t>(k)].is_zero()) return j;
        pos += static_cast<std::size_t>(piece.rank);
        ++j;
    }
    return j;
}

inline constexpr std::uint64_t default_point_guard = 10'000'000;

/// Visits every normalized point with all coordinate degrees <= max_deg,
/// in lexicographic order of the coefficient encodings.
inline void for_each_point(const FiniteField& f, std::size_t n, unsigned max_deg,
                           const std::function<void(const PolyPoint&)>& visit,
                           std::uint64_t guard = default_point_guard) {
    const std::size_t width = max_deg + 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n * width; ++i) {
        total *= f.order();
        if (total > guard)
            throw ValidationError("point enumeration exceeds the guard of " + std::to_string(guard) + " tuples");
    }
    std::vector<Poly::Element> digits(n * width, 0);
    // Odometer with the last digit fastest, so the tuple order is
    // lexicographic in (f_1, ..., f_n) with each f_i read big-endian.
    for (std::uint64_t it = 0; it < total; ++it) {
        PolyPoint x;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Poly::Element> c(width);
            for (std::size_t k = 0; k < width; ++k) c[k] = digits[i * width + (width - 1 - k)];
            x.coords.emplace_back(std::move(c));
        }
        if (is_normalized(f, x)) visit(x);
        for (std::size_t pos = digits.size(); pos-- > 0;) {
            if (++digits[pos] < f.order()) break;
            digits[pos] = 0;
        }
    }
}

inline std::vector<PolyPoint> enumerate_points(const FiniteField& f, const SplitBundle& model, unsigned max_deg,
                                               std::uint64_t guard = default_point_guard) {
    std::vector<PolyPoint> out;
    for_each_point(f, model.rank(), max_deg, [&](const PolyPoint& x) { out.push_back(x); }, guard);
    return out;
}

struct EmpiricalFiltration {
    std::vector<std::optional<std::int64_t>> min_height;  // per stratum; nullopt = no data
    std::vector<std::pair<std::int64_t, std::size_t>> entering;  // (threshold, stratum) ascending
    std::size_t points = 0;
};

inline EmpiricalFiltration empirical_filtration(const FiniteField& f, const SplitBundle& model, unsigned max_deg,
                                                std::vector<HeightRecord>* records = nullptr,
                                                std::uint64_t guard = default_point_guard) {
    EmpiricalFiltration e;
    e.min_height.assign(hn(model).pieces().size(), std::nullopt);
    for_each_point(
        f, model.rank(), max_deg,
        [&](const PolyPoint& x) {
            const auto h = height(f, model, x);
            const auto s = stratum(model, x);
            auto& m = e.min_height[s];
            m = std::min(m.value_or(h), h);
            ++e.points;
            if (records) records->push_back({x, h, s});
        },
        guard);
    for (std::size_t s = 0; s < e.min_height.size(); ++s)
        if (e.min_height[s]) e.entering.emplace_back(*e.min_height[s], s);
    std::sort(e.entering.begin(), e.entering.end());
    return e;
}

inline std::string format(const FiniteField& f, const PolyPoint& x) {
    std::string s = "[";
    for (std::size_t i = 0; i < x.coords.size(); ++i) s += (i ? " : " : "") + format(f, x.coords[i]);
    return s + "]";
}

} // namespace flagheight
