#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace flagheight {

/// F_q with q = p^m, elements encoded as 0..q-1 (base-p digits are the
/// coefficients of a polynomial modulo a fixed irreducible of degree m).
/// Arithmetic goes through precomputed tables.
class FiniteField {
public:
    using Element = std::uint32_t;

    static constexpr std::uint32_t max_order = 256;

    FiniteField(std::uint32_t p, unsigned m = 1) : p_(p), m_(m) {
        if (!is_prime(p)) throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
        if (m == 0) throw ValidationError("field extension degree must be at least 1");
        q_ = 1;
        for (unsigned i = 0; i < m; ++i) {
            q_ *= p;
            if (q_ > max_order) throw ValidationError("field order exceeds " + std::to_string(max_order));
        }
        modulus_ = find_irreducible();
        build_tables();
    }

    std::uint32_t characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    std::uint32_t order() const { return q_; }
    /// Monic irreducible modulus over F_p, little-endian, length m+1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Element add(Element a, Element b) const { return add_[a * q_ + b]; }
    Element mul(Element a, Element b) const { return mul_[a * q_ + b]; }
    Element neg(Element a) const { return neg_[a]; }
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    Element inv(Element a) const {
        if (a == 0) throw std::domain_error("inverse of zero in finite field");
        return inv_[a];
    }

    std::string format(Element a) const {
        if (m_ == 1) return std::to_string(a);
        return "[" + std::to_string(a) + "]";
    }

private:
    using Digits = std::vector<std::uint32_t>;

    Digits digits(Element a) const {
        Digits d(m_, 0);
        for (unsigned i = 0; i < m_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }

    Element encode(const Digits& d) const {
        Element a = 0;
        for (unsigned i = m_; i-- > 0;) a = a * p_ + d[i];
        return a;
    }

    // Remainder of a prime-field polynomial by a monic divisor.
    Digits mod_prime(Digits a, const Digits& b) const {
        const std::size_t db = b.size() - 1;
        while (a.size() > db) {
            const auto lead = a.back();
            if (lead != 0) {
                const std::size_t shift = a.size() - 1 - db;
                for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + p_ * p_ - lead * b[i]) % p_;
            }
            a.pop_back();
        }
        return a;
    }

    // Lexicographically first monic irreducible of degree m: no monic factor
    // of degree 1..m/2.
    Digits find_irreducible() const {
        if (m_ == 1) return {0, 1};
        std::uint64_t count = 1;
        for (unsigned i = 0; i < m_; ++i) count *= p_;
        for (std::uint64_t code = 0; code < count; ++code) {
            Digits f(m_ + 1, 0);
            std::uint64_t c = code;
            for (unsigned i = 0; i < m_; ++i) {
                f[i] = static_cast<std::uint32_t>(c % p_);
                c /= p_;
            }
            f[m_] = 1;
            bool irreducible = true;
            for (unsigned dg = 1; dg <= m_ / 2 && irreducible; ++dg) {
                std::uint64_t n = 1;
                for (unsigned i = 0; i < dg; ++i) n *= p_;
                for (std::uint64_t gcode = 0; gcode < n && irreducible; ++gcode) {
                    Digits g(dg + 1, 0);
                    std::uint64_t x = gcode;
                    for (unsigned i = 0; i < dg; ++i) {
                        g[i] = static_cast<std::uint32_t>(x % p_);
                        x /= p_;
                    }
                    g[dg] = 1;
                    auto r = mod_prime(f, g);
                    bool zero = true;
                    for (auto v : r) zero = zero && v == 0;
                    if (zero) irreducible = false;
                }
            }
            if (irreducible) return f;
        }
        throw std::logic_error("no irreducible polynomial found");
    }

    void build_tables() {
        add_.assign(q_ * q_, 0);
        mul_.assign(q_ * q_, 0);
        neg_.assign(q_, 0);
        inv_.assign(q_, 0);
        for (Element a = 0; a < q_; ++a) {
            const auto da = digits(a);
            Digits n(m_);
            for (unsigned i = 0; i < m_; ++i) n[i] = (p_ - da[i]) % p_;
            neg_[a] = encode(n);
            for (Element b = 0; b < q_; ++b) {
                const auto db = digits(b);
                Digits s(m_);
                for (unsigned i = 0; i < m_; ++i) s[i] = (da[i] + db[i]) % p_;
                add_[a * q_ + b] = encode(s);
                Digits prod(2 * m_ - 1, 0);
                for (unsigned i = 0; i < m_; ++i)
                    for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
                auto r = mod_prime(prod, modulus_);
                r.resize(m_, 0);
                mul_[a * q_ + b] = encode(r);
            }
        }
        for (Element a = 1; a < q_; ++a)
            for (Element b = 1; b < q_; ++b)
                if (mul_[a * q_ + b] == 1) inv_[a] = b;
    }

    std::uint32_t p_;
    unsigned m_;
    std::uint32_t q_ = 1;
    Digits modulus_;
    std::vector<Element> add_, mul_, neg_, inv_;
};

} // namespace flagheight
