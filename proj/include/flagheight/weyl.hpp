#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "root_datum.hpp"

namespace flagheight {

/// An element of W: its matrix on X(T) coordinates and its lexicographically
/// least reduced word in the simple reflections.
struct WeylElement {
    IntMatrix matrix;
    std::vector<std::size_t> word;

    std::size_t length() const { return word.size(); }
};

inline std::size_t default_weyl_size_guard() {
    if (const char* env = std::getenv("FLAGHEIGHT_MAX_W")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 1'000'000;
}

namespace detail {

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size();
    IntMatrix c(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

inline IntMatrix identity(std::size_t n) {
    IntMatrix m(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

} // namespace detail

/// Finite Weyl group with Cayley tables for the simple reflections. Element
/// indices follow shortlex order of the canonical words; index 0 is e.
class WeylGroup {
public:
    static WeylGroup generate(const RootDatum& rd, std::size_t max_size = default_weyl_size_guard());

    const RootDatum& datum() const { return datum_; }
    std::size_t size() const { return elements_.size(); }
    std::size_t generators() const { return datum_.semisimple_rank(); }
    const WeylElement& element(std::size_t w) const { return elements_.at(w); }
    const std::vector<WeylElement>& elements() const { return elements_; }

    std::size_t identity() const { return 0; }
    std::size_t length(std::size_t w) const { return elements_[w].word.size(); }

    /// s_i * w
    std::size_t left(std::size_t i, std::size_t w) const { return left_[w][i]; }
    /// w * s_i
    std::size_t right(std::size_t w, std::size_t i) const { return right_[w][i]; }

    std::size_t multiply(std::size_t u, std::size_t v) const {
        for (auto i : elements_[v].word) u = right(u, i);
        return u;
    }

    std::size_t inverse(std::size_t w) const {
        std::size_t r = identity();
        for (auto i : elements_[w].word) r = left(i, r);
        return r;
    }

    std::size_t longest() const { return elements_.size() - 1; }

    std::optional<std::size_t> find(const IntMatrix& m) const {
        auto it = index_.find(m);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<std::size_t> from_word(const std::vector<std::size_t>& word) const {
        std::size_t w = identity();
        for (auto i : word) {
            if (i >= generators()) return std::nullopt;
            w = right(w, i);
        }
        return w;
    }

    Character act(std::size_t w, const Character& x) const {
        datum_.check_rank(x, "act");
        const auto& m = elements_[w].matrix;
        Character out{RationalVector(x.coords.size(), 0)};
        for (std::size_t r = 0; r < m.size(); ++r)
            for (std::size_t c = 0; c < m.size(); ++c)
                if (m[r][c] != 0) out.coords[r] += m[r][c] * x.coords[c];
        return out;
    }

    /// Number of positive roots sent to negative roots.
    std::size_t inversion_count(std::size_t w) const {
        const std::size_t d = generators();
        // Root-coordinate action: s_i(alpha_j) = alpha_j - a_ij alpha_i.
        IntMatrix r = detail::identity(d);
        for (auto i : elements_[w].word) {
            IntMatrix s = detail::identity(d);
            for (std::size_t j = 0; j < d; ++j) s[i][j] -= datum_.cartan()[i][j];
            r = detail::multiply(r, s);
        }
        std::size_t count = 0;
        for (const auto& beta : datum_.positive_roots()) {
            for (std::size_t k = 0; k < d; ++k) {
                std::int64_t c = 0;
                for (std::size_t j = 0; j < d; ++j) c += r[k][j] * beta.coefficients[j];
                if (c != 0) {
                    count += c < 0;
                    break;
                }
            }
        }
        return count;
    }

private:
    RootDatum datum_;
    std::vector<WeylElement> elements_;
    std::vector<std::vector<std::size_t>> left_, right_;
    std::map<IntMatrix, std::size_t> index_;
};

inline WeylGroup WeylGroup::generate(const RootDatum& rd, std::size_t max_size) {
    WeylGroup g;
    g.datum_ = rd;
    const std::size_t n = rd.rank(), d = rd.semisimple_rank();

    std::vector<IntMatrix> refl;
    for (std::size_t i = 0; i < d; ++i) {
        IntMatrix m = detail::identity(n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m[r][c] -= rd.simple_roots()[i][r] * rd.simple_coroots()[i][c];
        refl.push_back(std::move(m));
    }

    // Level-by-level BFS appending generators on the right. Processing a level
    // in lex order of words and generators in increasing order discovers each
    // element first through its lex-least reduced word.
    g.elements_.push_back({detail::identity(n), {}});
    g.index_.emplace(g.elements_[0].matrix, 0);
    std::size_t level_begin = 0;
    while (level_begin < g.elements_.size()) {
        const std::size_t level_end = g.elements_.size();
        for (std::size_t u = level_begin; u < level_end; ++u) {
            for (std::size_t i = 0; i < d; ++i) {
                IntMatrix m = detail::multiply(g.elements_[u].matrix, refl[i]);
                if (g.index_.count(m)) continue;
                if (g.elements_.size() >= max_size)
                    throw ValidationError("Weyl group exceeds the size guard of " + std::to_string(max_size) +
                                          " elements (set FLAGHEIGHT_MAX_W to raise it)");
                auto word = g.elements_[u].word;
                word.push_back(i);
                g.index_.emplace(m, g.elements_.size());
                g.elements_.push_back({std::move(m), std::move(word)});
            }
        }
        level_begin = level_end;
    }

    g.left_.assign(g.size(), std::vector<std::size_t>(d));
    g.right_.assign(g.size(), std::vector<std::size_t>(d));
    for (std::size_t w = 0; w < g.size(); ++w)
        for (std::size_t i = 0; i < d; ++i) {
            g.right_[w][i] = g.index_.at(detail::multiply(g.elements_[w].matrix, refl[i]));
            g.left_[w][i] = g.index_.at(detail::multiply(refl[i], g.elements_[w].matrix));
        }
    return g;
}

inline std::size_t length(const WeylGroup& w, std::size_t element) { return w.length(element); }

inline Character act(const WeylGroup& w, std::size_t element, const Character& x) { return w.act(element, x); }

/// Bruhat order by the descent recursion: for a left descent s of v,
/// u <= v iff min(u, su) <= sv.
inline bool bruhat_leq(const WeylGroup& g, std::size_t u, std::size_t v) {
    while (true) {
        if (u == v) return true;
        if (g.length(u) >= g.length(v)) return false;
        std::size_t s = g.generators();
        for (std::size_t i = 0; i < g.generators(); ++i)
            if (g.length(g.left(i, v)) < g.length(v)) {
                s = i;
                break;
            }
        const std::size_t su = g.left(s, u);
        if (g.length(su) < g.length(u)) u = su;
        v = g.left(s, v);
    }
}

/// Elements of the parabolic subgroup W_P.
inline std::vector<std::size_t> parabolic_elements(const WeylGroup& g, const ParabolicSubset& p) {
    std::vector<bool> seen(g.size(), false);
    std::vector<std::size_t> out{g.identity()}, stack{g.identity()};
    seen[g.identity()] = true;
    while (!stack.empty()) {
        const auto w = stack.back();
        stack.pop_back();
        for (auto i : p.indices()) {
            const auto x = g.right(w, i);
            if (!seen[x]) {
                seen[x] = true;
                out.push_back(x);
                stack.push_back(x);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct DoubleCoset {
    std::vector<std::size_t> elements;  // sorted element indices
    std::size_t min_rep = 0;
    std::size_t ell = 0;  // max over left cosets sigma W_P of their minimal length
};

/// Partition of W into W_Q \ W / W_P, sorted by (ell, min_rep word).
inline std::vector<DoubleCoset> double_cosets(const WeylGroup& g, const ParabolicSubset& q,
                                              const ParabolicSubset& p) {
    constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
    std::vector<std::size_t> owner(g.size(), unassigned);
    std::vector<DoubleCoset> out;

    for (std::size_t w = 0; w < g.size(); ++w) {
        if (owner[w] != unassigned) continue;
        const std::size_t id = out.size();
        DoubleCoset dc;
        std::vector<std::size_t> stack{w};
        owner[w] = id;
        while (!stack.empty()) {
            const auto x = stack.back();
            stack.pop_back();
            dc.elements.push_back(x);
            auto visit = [&](std::size_t y) {
                if (owner[y] == unassigned) {
                    owner[y] = id;
                    stack.push_back(y);
                }
            };
            for (auto i : q.indices()) visit(g.left(i, x));
            for (auto i : p.indices()) visit(g.right(x, i));
        }
        std::sort(dc.elements.begin(), dc.elements.end());

        // Element indices are shortlex ordered, so the first is of minimal length.
        dc.min_rep = dc.elements.front();
        std::size_t at_min = 0;
        for (auto x : dc.elements) at_min += g.length(x) == g.length(dc.min_rep);
        if (at_min != 1)
            throw PropertyViolation("double coset has several elements of minimal length",
                                    "min_rep index " + std::to_string(dc.min_rep));

        std::vector<bool> done(g.size(), false);
        for (auto sigma : dc.elements) {
            if (done[sigma]) continue;
            std::size_t best = g.length(sigma);
            std::vector<std::size_t> st{sigma};
            done[sigma] = true;
            while (!st.empty()) {
                const auto x = st.back();
                st.pop_back();
                best = std::min(best, g.length(x));
                for (auto i : p.indices()) {
                    const auto y = g.right(x, i);
                    if (!done[y]) {
                        done[y] = true;
                        st.push_back(y);
                    }
                }
            }
            dc.ell = std::max(dc.ell, best);
        }
        out.push_back(std::move(dc));
    }

    std::sort(out.begin(), out.end(), [&](const DoubleCoset& a, const DoubleCoset& b) {
        if (a.ell != b.ell) return a.ell < b.ell;
        return g.element(a.min_rep).word < g.element(b.min_rep).word;
    });
    return out;
}

/// Closure order on double cosets: some element of a lies Bruhat-below some
/// element of b. The minimal representative of a is below every element of
/// a, so it suffices to test it.
inline bool closure_leq(const WeylGroup& g, const DoubleCoset& a, const DoubleCoset& b) {
    for (auto u : b.elements)
        if (bruhat_leq(g, a.min_rep, u)) return true;
    return false;
}

} // namespace flagheight
