#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace flagheight {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

/// Element of X(T)_Q.
struct Character {
    RationalVector coords;
    friend bool operator==(const Character&, const Character&) = default;
};

/// Element of X(T)^v_Q.
struct Cocharacter {
    RationalVector coords;
    friend bool operator==(const Cocharacter&, const Cocharacter&) = default;
};

inline Rational pairing(const Cocharacter& c, const Character& x) {
    if (c.coords.size() != x.coords.size())
        throw ValidationError("pairing: rank mismatch (" + std::to_string(c.coords.size()) + " vs " +
                              std::to_string(x.coords.size()) + ")");
    return dot(c.coords, x.coords);
}

/// Subset of the simple roots, stored sorted. Selects Delta_P (or Delta_Q).
class ParabolicSubset {
public:
    ParabolicSubset() = default;

    static ParabolicSubset make(std::vector<std::size_t> indices, std::size_t semisimple_rank) {
        std::sort(indices.begin(), indices.end());
        if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
            throw ValidationError("parabolic subset has repeated indices");
        for (auto i : indices)
            if (i >= semisimple_rank)
                throw ValidationError("parabolic index " + std::to_string(i) + " out of range [0, " +
                                      std::to_string(semisimple_rank) + ")");
        ParabolicSubset p;
        p.indices_ = std::move(indices);
        return p;
    }

    static ParabolicSubset all(std::size_t semisimple_rank) {
        ParabolicSubset p;
        for (std::size_t i = 0; i < semisimple_rank; ++i) p.indices_.push_back(i);
        return p;
    }

    bool contains(std::size_t i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }
    const std::vector<std::size_t>& indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }

    friend bool operator==(const ParabolicSubset&, const ParabolicSubset&) = default;

private:
    std::vector<std::size_t> indices_;
};

/// A positive root: coefficients in the simple-root basis plus its image in X(T).
struct PositiveRoot {
    IntVector coefficients;
    Character character;

    std::int64_t height() const {
        std::int64_t h = 0;
        for (auto c : coefficients) h += c;
        return h;
    }
};

/// Reduced root datum of finite type, given by simple roots in X(T) and
/// simple coroots in X(T)^v. Immutable once built.
class RootDatum {
public:
    static RootDatum make(std::size_t rank, IntMatrix simple_roots, IntMatrix simple_coroots,
                          std::string name = {});

    std::size_t rank() const { return rank_; }
    std::size_t semisimple_rank() const { return roots_.size(); }
    const std::string& name() const { return name_; }
    const IntMatrix& simple_roots() const { return roots_; }
    const IntMatrix& simple_coroots() const { return coroots_; }

    /// cartan()[i][j] = <alpha_i^v, alpha_j>.
    const IntMatrix& cartan() const { return cartan_; }

    Character root(std::size_t i) const { return Character{to_rational(roots_.at(i))}; }
    Cocharacter coroot(std::size_t i) const { return Cocharacter{to_rational(coroots_.at(i))}; }

    /// Graded-lex order: by height, then coefficient vectors descending.
    const std::vector<PositiveRoot>& positive_roots() const { return positive_roots_; }

    void check_rank(const Character& x, const char* what) const { check_len(x.coords.size(), what); }
    void check_rank(const Cocharacter& x, const char* what) const { check_len(x.coords.size(), what); }

    friend bool operator==(const RootDatum& a, const RootDatum& b) {
        return a.rank_ == b.rank_ && a.roots_ == b.roots_ && a.coroots_ == b.coroots_;
    }

private:
    void check_len(std::size_t n, const char* what) const {
        if (n != rank_)
            throw ValidationError(std::string(what) + ": expected " + std::to_string(rank_) +
                                  " coordinates, got " + std::to_string(n));
    }

    std::size_t rank_ = 0;
    IntMatrix roots_;
    IntMatrix coroots_;
    IntMatrix cartan_;
    std::string name_;
    std::vector<PositiveRoot> positive_roots_;
};

namespace detail {

inline void validate_cartan(const IntMatrix& a) {
    const std::size_t d = a.size();
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i][i] != 2) throw ValidationError("invalid Cartan matrix: diagonal entry " + std::to_string(i) + " is not 2");
        for (std::size_t j = 0; j < d; ++j) {
            if (i == j) continue;
            if (a[i][j] > 0) throw ValidationError("invalid Cartan matrix: positive off-diagonal entry");
            if ((a[i][j] == 0) != (a[j][i] == 0))
                throw ValidationError("invalid Cartan matrix: zero pattern not symmetric");
            const auto prod = a[i][j] * a[j][i];
            if (prod < 0 || prod > 3) throw ValidationError("invalid Cartan matrix: a_ij*a_ji not in {0,1,2,3}");
        }
    }
    // Finite type: every principal minor is positive.
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << d); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < d; ++i)
            if (mask >> i & 1) idx.push_back(i);
        linalg::Matrix sub(idx.size(), RationalVector(idx.size()));
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t c = 0; c < idx.size(); ++c) sub[r][c] = a[idx[r]][idx[c]];
        if (linalg::determinant(sub) <= 0) throw ValidationError("invalid Cartan matrix: not of finite type");
    }
}

inline std::vector<PositiveRoot> compute_positive_roots(const IntMatrix& cartan, const IntMatrix& roots,
                                                         std::size_t rank) {
    const std::size_t d = cartan.size();
    std::set<IntVector> seen;
    std::vector<IntVector> frontier;
    for (std::size_t i = 0; i < d; ++i) {
        IntVector e(d, 0);
        e[i] = 1;
        seen.insert(e);
        frontier.push_back(e);
    }
    // s_i(beta) = beta - <alpha_i^v, beta> alpha_i; every positive root is
    // reached from a simple root through positive roots.
    while (!frontier.empty()) {
        std::vector<IntVector> next;
        for (const auto& beta : frontier) {
            for (std::size_t i = 0; i < d; ++i) {
                std::int64_t p = 0;
                for (std::size_t j = 0; j < d; ++j) p += cartan[i][j] * beta[j];
                IntVector img = beta;
                img[i] -= p;
                if (std::any_of(img.begin(), img.end(), [](auto c) { return c < 0; })) continue;
                if (seen.insert(img).second) next.push_back(img);
            }
        }
        frontier = std::move(next);
    }
    std::vector<PositiveRoot> out;
    for (const auto& coeffs : seen) {
        PositiveRoot r;
        r.coefficients = coeffs;
        r.character.coords.assign(rank, 0);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < rank; ++k) r.character.coords[k] += coeffs[j] * roots[j][k];
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
        if (a.height() != b.height()) return a.height() < b.height();
        return a.coefficients > b.coefficients;
    });
    return out;
}

} // namespace detail

inline RootDatum RootDatum::make(std::size_t rank, IntMatrix simple_roots, IntMatrix simple_coroots,
                                 std::string name) {
    if (rank == 0) throw ValidationError("root datum rank must be positive");
    if (simple_roots.size() != simple_coroots.size())
        throw ValidationError("simple_roots and simple_coroots have different counts");
    const std::size_t d = simple_roots.size();
    if (d > rank) throw ValidationError("more simple roots than the rank");
    for (const auto* m : {&simple_roots, &simple_coroots})
        for (const auto& v : *m)
            if (v.size() != rank) throw ValidationError("root/coroot vector length differs from rank");

    RootDatum rd;
    rd.rank_ = rank;
    rd.roots_ = std::move(simple_roots);
    rd.coroots_ = std::move(simple_coroots);
    rd.name_ = std::move(name);
    rd.cartan_.assign(d, IntVector(d, 0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < rank; ++k) rd.cartan_[i][j] += rd.coroots_[i][k] * rd.roots_[j][k];

    auto to_matrix = [](const IntMatrix& m) {
        linalg::Matrix r;
        for (const auto& v : m) r.push_back(to_rational(v));
        return r;
    };
    if (d > 0 && linalg::rank(to_matrix(rd.roots_)) != d) throw ValidationError("simple roots are linearly dependent");
    if (d > 0 && linalg::rank(to_matrix(rd.coroots_)) != d)
        throw ValidationError("simple coroots are linearly dependent");
    detail::validate_cartan(rd.cartan_);
    rd.positive_roots_ = detail::compute_positive_roots(rd.cartan_, rd.roots_, rank);
    return rd;
}

/// Simply connected realization: X(T) has the fundamental-weight basis, so
/// alpha_j has coordinates given by column j of the Cartan matrix.
inline RootDatum simply_connected(const IntMatrix& cartan, std::string name) {
    const std::size_t d = cartan.size();
    IntMatrix roots(d, IntVector(d)), coroots(d, IntVector(d, 0));
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) roots[j][i] = cartan[i][j];
        coroots[j][j] = 1;
    }
    return RootDatum::make(d, std::move(roots), std::move(coroots), std::move(name));
}

inline IntMatrix cartan_type_a(std::size_t n) {
    IntMatrix a(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = 2;
        if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
    }
    return a;
}

inline RootDatum general_linear(std::size_t n) {
    IntMatrix roots;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        IntVector v(n, 0);
        v[i] = 1;
        v[i + 1] = -1;
        roots.push_back(v);
    }
    return RootDatum::make(n, roots, roots, "GL" + std::to_string(n));
}

/// Presets: A1..A3, B2, G2 (simply connected), SL2..SL5, GL2..GL5.
inline RootDatum make_root_datum(const std::string& preset) {
    if (preset.size() == 2 && preset[0] == 'A' && preset[1] >= '1' && preset[1] <= '3')
        return simply_connected(cartan_type_a(static_cast<std::size_t>(preset[1] - '0')), preset);
    if (preset == "B2") return simply_connected({{2, -2}, {-1, 2}}, preset);
    if (preset == "G2") return simply_connected({{2, -1}, {-3, 2}}, preset);
    if (preset.size() == 3 && preset.rfind("SL", 0) == 0 && preset[2] >= '2' && preset[2] <= '5')
        return simply_connected(cartan_type_a(static_cast<std::size_t>(preset[2] - '1')), preset);
    if (preset.size() == 3 && preset.rfind("GL", 0) == 0 && preset[2] >= '2' && preset[2] <= '5')
        return general_linear(static_cast<std::size_t>(preset[2] - '0'));
    throw ValidationError("unknown root datum preset '" + preset + "'");
}

inline const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"A1",  "A2",  "A3",  "B2",  "G2",  "SL2", "SL3",
                                                "SL4", "SL5", "GL2", "GL3", "GL4", "GL5"};
    return names;
}

inline std::vector<Character> positive_roots(const RootDatum& rd) {
    std::vector<Character> out;
    for (const auto& r : rd.positive_roots()) out.push_back(r.character);
    return out;
}

/// dim G/P: positive roots not in the span of Delta_P.
inline std::size_t dim_flag(const RootDatum& rd, const ParabolicSubset& p) {
    std::size_t levi = 0;
    for (const auto& r : rd.positive_roots()) {
        bool inside = true;
        for (std::size_t j = 0; j < r.coefficients.size(); ++j)
            if (r.coefficients[j] != 0 && !p.contains(j)) inside = false;
        levi += inside;
    }
    return rd.positive_roots().size() - levi;
}

struct Validation {
    bool ok = true;
    std::vector<std::string> diagnostics;

    void fail(std::string msg) {
        ok = false;
        diagnostics.push_back(std::move(msg));
    }
    explicit operator bool() const { return ok; }
};

inline std::string alpha_name(std::size_t i) { return "α_" + std::to_string(i + 1); }

/// <alpha_i^v, lambda> = 0 on Delta_P and < 0 off Delta_P.
inline Validation validate_strictly_antidominant(const RootDatum& rd, const Character& lambda,
                                                 const ParabolicSubset& p) {
    rd.check_rank(lambda, "lambda");
    Validation v;
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
        const Rational x = pairing(rd.coroot(i), lambda);
        if (p.contains(i) && x != 0)
            v.fail("lambda not strictly antidominant at " + alpha_name(i) + ": <" + alpha_name(i) +
                   "^v, lambda> = " + to_string(x) + " must be 0 on Delta_P");
        else if (!p.contains(i) && x >= 0)
            v.fail("lambda not strictly antidominant at " + alpha_name(i) + ": <" + alpha_name(i) +
                   "^v, lambda> = " + to_string(x) + " must be negative");
    }
    return v;
}

/// The fundamental weight varpi_i taken in the Q-span of the simple roots:
/// <alpha_j^v, varpi_i> = delta_ij, trivial on the centre.
inline Character fundamental_weight(const RootDatum& rd, std::size_t i) {
    const std::size_t d = rd.semisimple_rank();
    linalg::Matrix a(d, RationalVector(d));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) a[r][c] = rd.cartan()[r][c];
    RationalVector e(d, 0);
    e.at(i) = 1;
    auto sol = linalg::solve(a, e);
    if (!sol || !sol->kernel.empty()) throw ValidationError("fundamental weight: Cartan matrix is singular");
    Character w{RationalVector(rd.rank(), 0)};
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < rd.rank(); ++k) w.coords[k] += sol->particular[j] * rd.simple_roots()[j][k];
    return w;
}

/// Directions of X(T)_Q killed by every simple coroot (the central characters).
inline std::vector<RationalVector> central_characters(const RootDatum& rd) {
    linalg::Matrix a;
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) a.push_back(rd.coroot(i).coords);
    if (a.empty()) {
        std::vector<RationalVector> basis;
        for (std::size_t k = 0; k < rd.rank(); ++k) {
            RationalVector e(rd.rank(), 0);
            e[k] = 1;
            basis.push_back(e);
        }
        return basis;
    }
    return linalg::solve(a, RationalVector(a.size(), 0))->kernel;
}

struct FundamentalPairing {
    std::size_t index;
    Rational value;              // <d, varpi_i> with varpi_i in the root span
    bool depends_on_solution;    // d pairs nonzero with a central character
};

struct DegreeValidation : Validation {
    std::vector<FundamentalPairing> fundamental_pairings;
};

/// Always: <d, alpha_j> = 0 for j in Delta_Q. With strict: <d, alpha_i> > 0
/// for i outside Delta_Q, which is positivity on every nonzero character of Q
/// that is a nonnegative combination of simple roots.
inline DegreeValidation validate_degree_cocharacter(const RootDatum& rd, const Cocharacter& d,
                                                    const ParabolicSubset& q, bool strict) {
    rd.check_rank(d, "deg_FQ");
    DegreeValidation v;
    bool central = false;
    for (const auto& z : central_characters(rd))
        if (dot(d.coords, z) != 0) central = true;
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
        const Rational x = pairing(d, rd.root(i));
        if (q.contains(i)) {
            if (x != 0)
                v.fail("deg_FQ not in the image of the slope map: <deg_FQ, " + alpha_name(i) + "> = " + to_string(x) +
                       " must be 0 on Delta_Q");
        } else {
            if (strict && x <= 0)
                v.fail("deg_FQ fails canonical positivity at " + alpha_name(i) + ": <deg_FQ, " + alpha_name(i) +
                       "> = " + to_string(x) + " must be positive");
            v.fundamental_pairings.push_back({i, pairing(d, fundamental_weight(rd, i)), central});
        }
    }
    return v;
}

} // namespace flagheight
