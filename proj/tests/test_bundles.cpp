#include <gtest/gtest.h>

#include "flagheight/flagheight.hpp"

using namespace flagheight;

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<Rational> rats(std::initializer_list<Rational> v) { return v; }

} // namespace

TEST(Bundles, SplitBundleIsSortedDescending) {
    const SplitBundle b({0, 3, -1, 3});
    EXPECT_EQ(b.twists(), (std::vector<std::int64_t>{3, 3, 0, -1}));
    EXPECT_EQ(b.rank(), 4u);
    EXPECT_EQ(b.degree(), 5);
    EXPECT_EQ(b.slope(), Rational(5, 4));
    EXPECT_THROW(SplitBundle(std::vector<std::int64_t>{}), ValidationError);
}

TEST(Bundles, HNOfSplitBundleMergesEqualTwists) {
    const auto p = hn(SplitBundle({2, 0, 2, 0, -1}));
    ASSERT_EQ(p.pieces().size(), 3u);
    EXPECT_EQ(p.pieces()[0], (HNPiece{2, 2, true}));
    EXPECT_EQ(p.pieces()[1], (HNPiece{2, 0, true}));
    EXPECT_EQ(p.pieces()[2], (HNPiece{1, -1, true}));
    EXPECT_EQ(p.rank(), 5);
    EXPECT_EQ(p.degree(), 3);
    EXPECT_EQ(mu_max(p), 2);
}

TEST(Bundles, PolygonValidation) {
    EXPECT_THROW(HNPolygon({{1, 0, true}, {1, 1, true}}), ValidationError);
    EXPECT_THROW(HNPolygon({{0, 1, true}}), ValidationError);
    EXPECT_THROW(HNPolygon(std::vector<HNPiece>{}), ValidationError);
    const HNPolygon merged({{1, Rational(1, 2), true}, {3, Rational(1, 2), false}, {2, -3, true}});
    ASSERT_EQ(merged.pieces().size(), 2u);
    EXPECT_EQ(merged.pieces()[0], (HNPiece{4, Rational(1, 2), false}));
}

TEST(Bundles, PolygonSplitAndMergeRoundTrip) {
    // Splitting every piece into rank-one pieces and rebuilding is the identity.
    for (const auto& b : split_bundles(1, 4, -3, 3)) {
        const auto p = hn(b);
        std::vector<HNPiece> unit;
        for (const auto& piece : p.pieces())
            for (std::int64_t k = 0; k < piece.rank; ++k) unit.push_back({1, piece.slope, true});
        EXPECT_EQ(HNPolygon(unit), p);
        EXPECT_EQ(p.degree(), b.degree());
        EXPECT_EQ(p.rank(), static_cast<std::int64_t>(b.rank()));
    }
}

TEST(Bundles, SymmetricPowers) {
    const SplitBundle b({1, 0});
    EXPECT_EQ(sym(b, 3).twists(), (std::vector<std::int64_t>{3, 2, 1, 0}));
    EXPECT_EQ(sym(b, 0).twists(), (std::vector<std::int64_t>{0}));
    for (const auto& e : split_bundles(1, 3, -2, 2))
        for (std::int64_t m = 0; m <= 5; ++m) {
            const auto s = sym(e, static_cast<std::size_t>(m));
            const auto r = static_cast<std::int64_t>(e.rank());
            EXPECT_EQ(static_cast<std::int64_t>(s.rank()), binomial(r + m - 1, m));
            // deg Sym^m E = (m / r) deg E rank Sym^m E.
            EXPECT_EQ(Rational(s.degree()), Rational(m * e.degree() * binomial(r + m - 1, m), r));
            EXPECT_EQ(mu_max(hn(s)), m * e.twists().front());
        }
}

TEST(Bundles, TensorAndDual) {
    const SplitBundle x({2, -1}), y({1, 1, 0});
    EXPECT_EQ(tensor(x, y).twists(), (std::vector<std::int64_t>{3, 3, 2, 0, 0, -1}));
    EXPECT_EQ(tensor(x, y).degree(), static_cast<std::int64_t>(x.rank()) * y.degree() +
                                         static_cast<std::int64_t>(y.rank()) * x.degree());
    EXPECT_EQ(dual(x).twists(), (std::vector<std::int64_t>{1, -2}));
    EXPECT_EQ(dual(dual(y)), y);
    EXPECT_EQ(mu_max(hn(tensor(x, y))), mu_max(hn(x)) + mu_max(hn(y)));
}

TEST(Bundles, FrobeniusPullback) {
    const SplitBundle b({1, 0, -2});
    EXPECT_EQ(frobenius(b, 3, 2).twists(), (std::vector<std::int64_t>{9, 0, -18}));
    EXPECT_EQ(frobenius(b, 5, 0), b);
    EXPECT_THROW(frobenius(b, 6, 1), ValidationError);
}

TEST(Bundles, EssentialMinimumOfProjectiveBundle) {
    const auto e = ess_min_projective(SplitBundle({3, 1, -1}), 8);
    EXPECT_EQ(e.exact, 3);
    EXPECT_EQ(e.estimate, 3);
    EXPECT_THROW(ess_min_projective(SplitBundle({1}), 0), ValidationError);
}

TEST(Bundles, LMaxFromProfile) {
    FrobeniusProfile f;
    f.p = 2;
    f.table.emplace(0u, HNPolygon({{2, 0, false}}));
    f.table.emplace(1u, HNPolygon({{1, 1, true}, {1, -1, true}}));
    const auto l = l_max(f);
    EXPECT_EQ(l.value, Rational(1, 2));
    EXPECT_EQ(l.achieved_at, 1u);
    EXPECT_FALSE(l.stabilized);
    ASSERT_EQ(l.normalized.size(), 2u);
    EXPECT_EQ(l.normalized[0].second, 0);

    FrobeniusProfile bad;
    bad.p = 2;
    bad.table.emplace(1u, HNPolygon({{1, 0, true}}));
    EXPECT_THROW(l_max(bad), ValidationError);
}

TEST(Bundles, LMaxOfSplitBundleStabilizes) {
    for (const auto& b : split_bundles(2, 3, -2, 2)) {
        const auto l = l_max(profile_of(b, 3, 3));
        EXPECT_EQ(l.value, mu_max(hn(b)));
        EXPECT_TRUE(l.stabilized);
    }
}

TEST(Bundles, WeightFiltrationOfSym2) {
    const auto levels = weight_filtration(sym_standard_weights(2, 2), Cocharacter{{1, 0}});
    ASSERT_EQ(levels.size(), 3u);
    EXPECT_EQ(levels[0].q, 2);
    EXPECT_EQ(levels[1].q, 1);
    EXPECT_EQ(levels[2].q, 0);
    EXPECT_EQ(levels[0].members.size(), 1u);
    EXPECT_EQ(levels[1].members.size(), 2u);
    EXPECT_EQ(levels[2].members.size(), 3u);
    EXPECT_EQ(levels[1].graded, (std::vector<Character>{Character{{1, 1}}}));
    EXPECT_EQ(polygon_of(levels), hn(sym(SplitBundle({1, 0}), 2)));
    EXPECT_THROW(weight_filtration(WeightModule{}, Cocharacter{{1}}), ValidationError);
}

TEST(Bundles, WeightFiltrationMatchesHNOfSymmetricPowers) {
    for (const auto& b : split_bundles(1, 4, -2, 2))
        for (std::size_t m = 0; m <= 4; ++m) {
            const auto d = slope_cocharacter(hn(b));
            EXPECT_EQ(polygon_of(weight_filtration(sym_standard_weights(b.rank(), m), d)), hn(sym(b, m)));
        }
}

TEST(Bundles, SlopeCocharacter) {
    EXPECT_EQ(slope_cocharacter(hn(SplitBundle({2, 2, -1}))).coords, rats({2, 2, -1}));
}
