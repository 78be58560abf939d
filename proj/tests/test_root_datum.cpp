#include <gtest/gtest.h>

#include <set>

#include "flagheight/flagheight.hpp"

using namespace flagheight;

namespace {

// Independent oracle: close the simple roots under the simple reflections in
// root coordinates and keep the positive ones.
std::set<IntVector> roots_by_reflection(const IntMatrix& cartan) {
    const std::size_t d = cartan.size();
    std::set<IntVector> all;
    std::vector<IntVector> todo;
    for (std::size_t i = 0; i < d; ++i) {
        IntVector e(d, 0);
        e[i] = 1;
        todo.push_back(e);
    }
    while (!todo.empty()) {
        auto b = todo.back();
        todo.pop_back();
        if (!all.insert(b).second) continue;
        for (std::size_t i = 0; i < d; ++i) {
            // s_i(beta) = beta - <alpha_i^v, beta> alpha_i
            std::int64_t c = 0;
            for (std::size_t j = 0; j < d; ++j) c += cartan[i][j] * b[j];
            auto r = b;
            r[i] -= c;
            todo.push_back(r);
        }
    }
    std::set<IntVector> pos;
    for (const auto& r : all)
        if (std::all_of(r.begin(), r.end(), [](auto x) { return x >= 0; })) pos.insert(r);
    return pos;
}

Character chr(std::initializer_list<Rational> v) { return Character{RationalVector(v)}; }
Cocharacter cochr(std::initializer_list<Rational> v) { return Cocharacter{RationalVector(v)}; }

} // namespace

TEST(RootDatum, CartanMatricesOfPresets) {
    EXPECT_EQ(make_root_datum("A2").cartan(), (IntMatrix{{2, -1}, {-1, 2}}));
    EXPECT_EQ(make_root_datum("B2").cartan(), (IntMatrix{{2, -2}, {-1, 2}}));
    EXPECT_EQ(make_root_datum("G2").cartan(), (IntMatrix{{2, -1}, {-3, 2}}));
    EXPECT_EQ(make_root_datum("GL3").cartan(), (IntMatrix{{2, -1}, {-1, 2}}));
    EXPECT_EQ(make_root_datum("SL4").cartan(), cartan_type_a(3));
}

TEST(RootDatum, GeneralLinearRootsAreDifferencesOfBasisVectors) {
    const auto gl = make_root_datum("GL4");
    EXPECT_EQ(gl.rank(), 4u);
    EXPECT_EQ(gl.semisimple_rank(), 3u);
    EXPECT_EQ(gl.root(1), chr({0, 1, -1, 0}));
    EXPECT_EQ(gl.coroot(2), cochr({0, 0, 1, -1}));
}

TEST(RootDatum, PositiveRootsMatchReflectionClosure) {
    const std::map<std::string, std::size_t> expected{{"A1", 1}, {"A2", 3}, {"A3", 6}, {"B2", 4},  {"G2", 6},
                                                      {"SL5", 10}, {"GL2", 1}, {"GL3", 3}, {"GL5", 10}};
    for (const auto& [name, count] : expected) {
        const auto rd = make_root_datum(name);
        std::set<IntVector> ours;
        for (const auto& r : rd.positive_roots()) ours.insert(r.coefficients);
        EXPECT_EQ(ours.size(), count) << name;
        EXPECT_EQ(ours, roots_by_reflection(rd.cartan())) << name;
        EXPECT_EQ(positive_roots(rd).size(), count) << name;
    }
}

TEST(RootDatum, HighestRootOfG2) {
    const auto g2 = make_root_datum("G2");
    const auto& pr = g2.positive_roots();
    EXPECT_EQ(pr.back().coefficients, (IntVector{2, 3}));
    EXPECT_EQ(pr.back().height(), 5);
}

TEST(RootDatum, PositiveRootCharacterIsCoefficientCombination) {
    for (const auto& name : preset_names()) {
        const auto rd = make_root_datum(name);
        for (const auto& r : rd.positive_roots()) {
            RationalVector v(rd.rank(), 0);
            for (std::size_t j = 0; j < rd.semisimple_rank(); ++j)
                for (std::size_t k = 0; k < rd.rank(); ++k) v[k] += r.coefficients[j] * rd.simple_roots()[j][k];
            EXPECT_EQ(r.character.coords, v) << name;
        }
    }
}

TEST(RootDatum, PairingIsBilinear) {
    InputSampler s(7);
    for (int it = 0; it < 100; ++it) {
        const Cocharacter a{{s.small_rational(-5, 5), s.small_rational(-5, 5), s.small_rational(-5, 5)}};
        const Cocharacter b{{s.small_rational(-5, 5), s.small_rational(-5, 5), s.small_rational(-5, 5)}};
        const Character x{{s.small_rational(-5, 5), s.small_rational(-5, 5), s.small_rational(-5, 5)}};
        const Character y{{s.small_rational(-5, 5), s.small_rational(-5, 5), s.small_rational(-5, 5)}};
        const Rational c = s.small_rational(-5, 5);
        Cocharacter ab{a.coords};
        for (std::size_t i = 0; i < 3; ++i) ab.coords[i] = a.coords[i] + c * b.coords[i];
        Character xy{x.coords};
        for (std::size_t i = 0; i < 3; ++i) xy.coords[i] = x.coords[i] + c * y.coords[i];
        EXPECT_EQ(pairing(ab, x), pairing(a, x) + c * pairing(b, x));
        EXPECT_EQ(pairing(a, xy), pairing(a, x) + c * pairing(a, y));
    }
}

TEST(RootDatum, PairingRankMismatchThrows) {
    EXPECT_THROW(pairing(cochr({1, 2}), chr({1, 2, 3})), ValidationError);
}

TEST(RootDatum, RejectsNonFiniteAndMalformedData) {
    // Affine A1: <a^v, b> <b^v, a> = 4.
    EXPECT_THROW(RootDatum::make(2, {{2, -2}, {-2, 2}}, {{1, 0}, {0, 1}}), ValidationError);
    EXPECT_THROW(RootDatum::make(2, {{1, 0}}, {{1, 0}, {0, 1}}), ValidationError);
    EXPECT_THROW(RootDatum::make(2, {{1, 0, 0}}, {{1, 0}}), ValidationError);
    EXPECT_THROW(make_root_datum("E8"), ValidationError);
    EXPECT_THROW(ParabolicSubset::make({0, 0}, 2), ValidationError);
    EXPECT_THROW(ParabolicSubset::make({2}, 2), ValidationError);
}

TEST(RootDatum, ExplicitDatumMatchesPreset) {
    const auto b2 = RootDatum::make(2, {{2, -1}, {-2, 2}}, {{1, 0}, {0, 1}}, "B2-explicit");
    EXPECT_EQ(b2.cartan(), make_root_datum("B2").cartan());
    EXPECT_EQ(b2.positive_roots().size(), 4u);
}

TEST(RootDatum, DimensionOfFlagVarieties) {
    const auto gl3 = make_root_datum("GL3");
    EXPECT_EQ(dim_flag(gl3, ParabolicSubset::make({0}, 2)), 2u);
    EXPECT_EQ(dim_flag(gl3, ParabolicSubset{}), 3u);
    EXPECT_EQ(dim_flag(gl3, ParabolicSubset::all(2)), 0u);
    EXPECT_EQ(dim_flag(make_root_datum("G2"), ParabolicSubset::make({1}, 2)), 5u);
    EXPECT_EQ(dim_flag(make_root_datum("A3"), ParabolicSubset::make({0, 2}, 3)), 4u);
    EXPECT_EQ(dim_flag(make_root_datum("GL5"), ParabolicSubset::make({0, 1, 2}, 4)), 4u);
}

TEST(RootDatum, StrictAntidominance) {
    const auto gl3 = make_root_datum("GL3");
    const auto p = ParabolicSubset::make({0}, 2);
    EXPECT_TRUE(validate_strictly_antidominant(gl3, chr({0, 0, 1}), p).ok);
    const auto bad = validate_strictly_antidominant(gl3, chr({1, 0, 0}), p);
    EXPECT_FALSE(bad.ok);
    ASSERT_EQ(bad.diagnostics.size(), 2u);
    EXPECT_NE(bad.diagnostics[0].find("α_1"), std::string::npos);
    EXPECT_TRUE(validate_strictly_antidominant(make_root_datum("G2"), chr({-1, 0}), ParabolicSubset::make({1}, 2)));
    EXPECT_FALSE(validate_strictly_antidominant(make_root_datum("G2"), chr({0, 0}), ParabolicSubset{}));
}

TEST(RootDatum, FundamentalWeightsAreDual) {
    for (const auto& name : preset_names()) {
        const auto rd = make_root_datum(name);
        for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
            const auto w = fundamental_weight(rd, i);
            for (std::size_t j = 0; j < rd.semisimple_rank(); ++j)
                EXPECT_EQ(pairing(rd.coroot(j), w), i == j ? 1 : 0) << name;
        }
    }
}

TEST(RootDatum, GL3FundamentalWeightInRootSpan) {
    // varpi_2 = (1/3, 1/3, -2/3) is the root-span representative of e_1 + e_2.
    EXPECT_EQ(fundamental_weight(make_root_datum("GL3"), 1), chr({Rational(1, 3), Rational(1, 3), Rational(-2, 3)}));
}

TEST(RootDatum, CentralCharacters) {
    EXPECT_TRUE(central_characters(make_root_datum("G2")).empty());
    const auto z = central_characters(make_root_datum("GL3"));
    ASSERT_EQ(z.size(), 1u);
    EXPECT_EQ(z[0][0], z[0][1]);
    EXPECT_EQ(z[0][1], z[0][2]);
}

TEST(RootDatum, DegreeCocharacterValidation) {
    const auto gl3 = make_root_datum("GL3");
    const auto q = ParabolicSubset::make({0}, 2);
    const auto ok = validate_degree_cocharacter(gl3, cochr({1, 1, 0}), q, true);
    EXPECT_TRUE(ok.ok);
    ASSERT_EQ(ok.fundamental_pairings.size(), 1u);
    EXPECT_EQ(ok.fundamental_pairings[0].index, 1u);
    EXPECT_EQ(ok.fundamental_pairings[0].value, Rational(2, 3));
    EXPECT_TRUE(ok.fundamental_pairings[0].depends_on_solution);

    EXPECT_FALSE(validate_degree_cocharacter(gl3, cochr({1, 0, 0}), q, false).ok);  // off the Levi centre
    EXPECT_FALSE(validate_degree_cocharacter(gl3, cochr({0, 0, 1}), q, true).ok);   // negative at alpha_2
    EXPECT_TRUE(validate_degree_cocharacter(gl3, cochr({0, 0, 1}), q, false).ok);
    EXPECT_THROW(validate_degree_cocharacter(gl3, cochr({1, 1}), q, true), ValidationError);
}

TEST(RootDatum, DegreeZeroIsFormalOnly) {
    const auto a2 = make_root_datum("A2");
    EXPECT_FALSE(validate_degree_cocharacter(a2, cochr({0, 0}), ParabolicSubset{}, true).ok);
    EXPECT_TRUE(validate_degree_cocharacter(a2, cochr({0, 0}), ParabolicSubset::all(2), true).ok);
}
