#pragma once

#include <string>
#include <utility>
#include <vector>

#include "finite_field.hpp"

namespace flagheight {

/// Univariate polynomial over a FiniteField, little-endian, no trailing zeros.
class Poly {
public:
    using Element = FiniteField::Element;

    Poly() = default;
    explicit Poly(std::vector<Element> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(Element a) { return Poly(std::vector<Element>{a}); }
    static Poly monomial(Element a, std::size_t k) {
        std::vector<Element> c(k + 1, 0);
        c[k] = a;
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Element lead() const { return c_.empty() ? 0 : c_.back(); }
    Element coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
    const std::vector<Element>& coeffs() const { return c_; }

    /// Index of the lowest nonzero coefficient (the t-adic valuation).
    std::size_t valuation() const {
        std::size_t k = 0;
        while (k < c_.size() && c_[k] == 0) ++k;
        return k;
    }

    friend bool operator==(const Poly&, const Poly&) = default;
    friend bool operator<(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (std::size_t k = a.c_.size(); k-- > 0;)
            if (a.c_[k] != b.c_[k]) return a.c_[k] < b.c_[k];
        return false;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Element> c_;
};

inline Poly add(const FiniteField& f, const Poly& a, const Poly& b) {
    std::vector<Poly::Element> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = f.add(a.coeff(k), b.coeff(k));
    return Poly(std::move(c));
}

inline Poly sub(const FiniteField& f, const Poly& a, const Poly& b) {
    std::vector<Poly::Element> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = f.sub(a.coeff(k), b.coeff(k));
    return Poly(std::move(c));
}

inline Poly mul(const FiniteField& f, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Poly::Element> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = f.add(c[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
    return Poly(std::move(c));
}

inline Poly scale(const FiniteField& f, const Poly& a, Poly::Element s) {
    std::vector<Poly::Element> c(a.coeffs());
    for (auto& x : c) x = f.mul(x, s);
    return Poly(std::move(c));
}

/// (quotient, remainder); b must be nonzero.
inline std::pair<Poly, Poly> divmod(const FiniteField& f, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Poly::Element> r(a.coeffs());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    if (r.size() <= db) return {Poly{}, a};
    std::vector<Poly::Element> q(r.size() - db, 0);
    const auto inv = f.inv(b.lead());
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k] == 0) continue;
        const auto factor = f.mul(r[k], inv);
        q[k - db] = factor;
        for (std::size_t i = 0; i <= db; ++i) r[k - db + i] = f.sub(r[k - db + i], f.mul(factor, b.coeffs()[i]));
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

inline Poly make_monic(const FiniteField& f, const Poly& a) {
    if (a.is_zero()) return a;
    return scale(f, a, f.inv(a.lead()));
}

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(const FiniteField& f, Poly a, Poly b) {
    while (!b.is_zero()) {
        auto r = divmod(f, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(f, a);
}

/// Coefficients reversed inside degree `total`: t^total * a(1/t), as a
/// polynomial in the other affine coordinate.
inline Poly reversed(const Poly& a, std::size_t total) {
    std::vector<Poly::Element> c(total + 1, 0);
    for (std::size_t k = 0; k < a.coeffs().size(); ++k) c[total - k] = a.coeffs()[k];
    return Poly(std::move(c));
}

inline std::string format(const FiniteField& f, const Poly& a) {
    if (a.is_zero()) return "0";
    std::string s;
    for (std::size_t k = a.coeffs().size(); k-- > 0;) {
        const auto c = a.coeffs()[k];
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        if (k == 0 || c != 1) s += f.format(c);
        if (k > 0) s += (k == 0 || c != 1) ? "*t" : "t";
        if (k > 1) s += "^" + std::to_string(k);
    }
    return s;
}

} // namespace flagheight
