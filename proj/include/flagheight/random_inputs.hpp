#pragma once

#include <random>
#include <vector>

#include "flag_heights.hpp"
#include "linalg.hpp"

namespace flagheight {

/// Deterministic generators of valid flag-height inputs for property suites.
class InputSampler {
public:
    explicit InputSampler(std::uint64_t seed) : rng_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    Rational small_rational(std::int64_t lo, std::int64_t hi) {
        return Rational(uniform(lo, hi), uniform(1, 3));
    }

    ParabolicSubset subset(std::size_t d) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < d; ++i)
            if (uniform(0, 1)) idx.push_back(i);
        return ParabolicSubset::make(idx, d);
    }

    /// <alpha_i^v, lambda> = 0 on P and a random negative value elsewhere,
    /// plus a random central character.
    Character antidominant(const RootDatum& rd, const ParabolicSubset& p) {
        linalg::Matrix a;
        RationalVector b;
        for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
            a.push_back(rd.coroot(i).coords);
            b.push_back(p.contains(i) ? Rational(0) : Rational(-uniform(1, 3)));
        }
        return Character{sample(a, b, rd.rank())};
    }

    /// <d, alpha_j> = 0 on Q and (when strict) a random positive rational
    /// elsewhere, plus a random component orthogonal to every root.
    Cocharacter degree(const RootDatum& rd, const ParabolicSubset& q, bool strict = true) {
        linalg::Matrix a;
        RationalVector b;
        for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
            a.push_back(rd.root(i).coords);
            if (q.contains(i)) b.push_back(0);
            else b.push_back(strict ? small_rational(1, 4) : small_rational(-4, 4));
        }
        return Cocharacter{sample(a, b, rd.rank())};
    }

    FlagHeightInput input(const RootDatum& rd) {
        FlagHeightInput in{rd, subset(rd.semisimple_rank()), subset(rd.semisimple_rank()), {}, {}, true};
        in.lambda = antidominant(rd, in.p);
        in.deg_fq = degree(rd, in.q);
        return in;
    }

private:
    RationalVector sample(const linalg::Matrix& a, const RationalVector& b, std::size_t rank) {
        if (a.empty()) {
            RationalVector v(rank);
            for (auto& x : v) x = uniform(-3, 3);
            return v;
        }
        auto sol = linalg::solve(a, b);
        if (!sol) throw std::logic_error("sampler: inconsistent system");
        auto v = sol->particular;
        for (const auto& k : sol->kernel) {
            const Rational c = uniform(-3, 3);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * k[i];
        }
        return v;
    }

    std::mt19937_64 rng_;
};

} // namespace flagheight
