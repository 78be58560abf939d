#include <gtest/gtest.h>

#include <set>

#include "flagheight/flagheight.hpp"

using namespace flagheight;

namespace {

// Subword property: u <= v iff some subword of a reduced word of v is a word for u.
bool bruhat_by_subwords(const WeylGroup& g, std::size_t u, std::size_t v) {
    const auto& word = g.element(v).word;
    for (std::size_t mask = 0; mask < (std::size_t{1} << word.size()); ++mask) {
        std::vector<std::size_t> sub;
        for (std::size_t k = 0; k < word.size(); ++k)
            if (mask >> k & 1) sub.push_back(word[k]);
        if (*g.from_word(sub) == u) return true;
    }
    return false;
}

Character chr(std::initializer_list<Rational> v) { return Character{RationalVector(v)}; }

std::vector<std::size_t> sizes(const std::vector<DoubleCoset>& dcs) {
    std::vector<std::size_t> out;
    for (const auto& d : dcs) out.push_back(d.elements.size());
    return out;
}

std::vector<std::size_t> ells(const std::vector<DoubleCoset>& dcs) {
    std::vector<std::size_t> out;
    for (const auto& d : dcs) out.push_back(d.ell);
    return out;
}

} // namespace

TEST(Weyl, GroupOrders) {
    const std::map<std::string, std::size_t> orders{{"A1", 2}, {"A2", 6},  {"A3", 24},  {"B2", 8},  {"G2", 12},
                                                    {"SL5", 120}, {"GL2", 2}, {"GL4", 24}, {"GL5", 120}};
    for (const auto& [name, n] : orders) EXPECT_EQ(WeylGroup::generate(make_root_datum(name)).size(), n) << name;
}

TEST(Weyl, LongestElementLengthIsNumberOfPositiveRoots) {
    for (const auto& name : preset_names()) {
        const auto rd = make_root_datum(name);
        const auto g = WeylGroup::generate(rd);
        EXPECT_EQ(g.length(g.longest()), rd.positive_roots().size()) << name;
        for (std::size_t w = 0; w < g.size(); ++w) EXPECT_LE(g.length(w), g.length(g.longest()));
    }
}

TEST(Weyl, LengthEqualsInversionCount) {
    for (const auto& name : {"A3", "B2", "G2", "GL4"}) {
        const auto g = WeylGroup::generate(make_root_datum(name));
        for (std::size_t w = 0; w < g.size(); ++w) EXPECT_EQ(g.inversion_count(w), g.length(w)) << name;
    }
}

TEST(Weyl, IndicesAreShortlexAndWordsAreLexLeast) {
    const auto g = WeylGroup::generate(make_root_datum("A2"));
    const std::vector<std::vector<std::size_t>> words{{}, {0}, {1}, {0, 1}, {1, 0}, {0, 1, 0}};
    ASSERT_EQ(g.size(), words.size());
    for (std::size_t w = 0; w < g.size(); ++w) EXPECT_EQ(g.element(w).word, words[w]);
}

TEST(Weyl, GroupLaws) {
    const auto g = WeylGroup::generate(make_root_datum("B2"));
    for (std::size_t u = 0; u < g.size(); ++u) {
        EXPECT_EQ(g.multiply(u, g.inverse(u)), g.identity());
        EXPECT_EQ(g.multiply(g.identity(), u), u);
        for (std::size_t i = 0; i < g.generators(); ++i) {
            EXPECT_EQ(g.left(i, g.left(i, u)), u);
            EXPECT_EQ(g.right(u, i), g.multiply(u, *g.from_word({i})));
            EXPECT_EQ(g.left(i, u), g.multiply(*g.from_word({i}), u));
        }
        for (std::size_t v = 0; v < g.size(); ++v)
            for (std::size_t w = 0; w < g.size(); w += 3)
                EXPECT_EQ(g.multiply(g.multiply(u, v), w), g.multiply(u, g.multiply(v, w)));
    }
    EXPECT_FALSE(g.from_word({2}).has_value());
}

TEST(Weyl, ActionOnGL3Characters) {
    const auto g = WeylGroup::generate(make_root_datum("GL3"));
    EXPECT_EQ(g.act(*g.from_word({0}), chr({1, 2, 3})), chr({2, 1, 3}));
    EXPECT_EQ(g.act(*g.from_word({1}), chr({1, 2, 3})), chr({1, 3, 2}));
    EXPECT_EQ(g.act(g.longest(), chr({1, 2, 3})), chr({3, 2, 1}));
    // s_1 s_2 moves the third coordinate to the front.
    EXPECT_EQ(act(g, *g.from_word({0, 1}), chr({0, 0, 1})), chr({1, 0, 0}));
}

TEST(Weyl, ActionIsAHomomorphism) {
    const auto rd = make_root_datum("G2");
    const auto g = WeylGroup::generate(rd);
    const auto x = chr({Rational(3, 2), -7});
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = 0; v < g.size(); ++v) EXPECT_EQ(g.act(g.multiply(u, v), x), g.act(u, g.act(v, x)));
}

TEST(Weyl, ReflectionsNegateTheirRoot) {
    for (const auto& name : preset_names()) {
        const auto rd = make_root_datum(name);
        const auto g = WeylGroup::generate(rd);
        for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
            auto neg = rd.root(i);
            for (auto& c : neg.coords) c = -c;
            EXPECT_EQ(g.act(*g.from_word({i}), rd.root(i)), neg) << name;
        }
    }
}

TEST(Weyl, BruhatMatchesSubwordOracle) {
    for (const auto& name : {"A2", "A3", "B2", "G2", "GL4"}) {
        const auto g = WeylGroup::generate(make_root_datum(name));
        for (std::size_t u = 0; u < g.size(); ++u)
            for (std::size_t v = 0; v < g.size(); ++v)
                EXPECT_EQ(bruhat_leq(g, u, v), bruhat_by_subwords(g, u, v)) << name << " " << u << " " << v;
    }
}

TEST(Weyl, BruhatExtremes) {
    const auto g = WeylGroup::generate(make_root_datum("A3"));
    for (std::size_t w = 0; w < g.size(); ++w) {
        EXPECT_TRUE(bruhat_leq(g, g.identity(), w));
        EXPECT_TRUE(bruhat_leq(g, w, g.longest()));
    }
    EXPECT_FALSE(bruhat_leq(g, *g.from_word({0}), *g.from_word({1})));
}

TEST(Weyl, ParabolicSubgroups) {
    const auto g = WeylGroup::generate(make_root_datum("A3"));
    EXPECT_EQ(parabolic_elements(g, ParabolicSubset{}).size(), 1u);
    EXPECT_EQ(parabolic_elements(g, ParabolicSubset::make({0, 2}, 3)).size(), 4u);
    EXPECT_EQ(parabolic_elements(g, ParabolicSubset::make({0, 1}, 3)).size(), 6u);
    EXPECT_EQ(parabolic_elements(g, ParabolicSubset::all(3)).size(), 24u);
}

TEST(Weyl, GL3DoubleCosetExamples) {
    const auto g = WeylGroup::generate(make_root_datum("GL3"));
    const auto s1 = ParabolicSubset::make({0}, 2), s2 = ParabolicSubset::make({1}, 2);

    const auto same = double_cosets(g, s1, s1);
    EXPECT_EQ(sizes(same), (std::vector<std::size_t>{2, 4}));
    EXPECT_EQ(ells(same), (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(g.element(same[1].min_rep).word, (std::vector<std::size_t>{1}));

    const auto mixed = double_cosets(g, s1, s2);
    EXPECT_EQ(sizes(mixed), (std::vector<std::size_t>{4, 2}));
    EXPECT_EQ(ells(mixed), (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(g.element(mixed[1].min_rep).word, (std::vector<std::size_t>{1, 0}));

    const auto projective = double_cosets(g, ParabolicSubset{}, s1);
    EXPECT_EQ(sizes(projective), (std::vector<std::size_t>{2, 2, 2}));
    EXPECT_EQ(ells(projective), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Weyl, DoubleCosetsPartitionAndMinRepIsUnique) {
    for (const auto& name : {"A3", "B2", "G2"}) {
        const auto rd = make_root_datum(name);
        const auto g = WeylGroup::generate(rd);
        const std::size_t d = rd.semisimple_rank();
        for (std::size_t qm = 0; qm < (1u << d); ++qm)
            for (std::size_t pm = 0; pm < (1u << d); ++pm) {
                std::vector<std::size_t> qi, pi;
                for (std::size_t i = 0; i < d; ++i) {
                    if (qm >> i & 1) qi.push_back(i);
                    if (pm >> i & 1) pi.push_back(i);
                }
                const auto q = ParabolicSubset::make(qi, d), p = ParabolicSubset::make(pi, d);
                const auto wq = parabolic_elements(g, q), wp = parabolic_elements(g, p);
                std::set<std::size_t> covered;
                for (const auto& dc : double_cosets(g, q, p)) {
                    // Brute force: the double coset is W_Q min_rep W_P.
                    std::set<std::size_t> expect;
                    for (auto a : wq)
                        for (auto b : wp) expect.insert(g.multiply(g.multiply(a, dc.min_rep), b));
                    EXPECT_EQ(std::set<std::size_t>(dc.elements.begin(), dc.elements.end()), expect);
                    for (auto x : dc.elements) {
                        EXPECT_TRUE(covered.insert(x).second);
                        if (x != dc.min_rep) {
                            EXPECT_GT(g.length(x), g.length(dc.min_rep));
                        }
                    }
                }
                EXPECT_EQ(covered.size(), g.size());
            }
    }
}

TEST(Weyl, EllWithTrivialPIsLongestElement) {
    const auto g = WeylGroup::generate(make_root_datum("A3"));
    const auto dcs = double_cosets(g, ParabolicSubset::make({1}, 3), ParabolicSubset{});
    for (const auto& dc : dcs) {
        std::size_t longest = 0;
        for (auto x : dc.elements) longest = std::max(longest, g.length(x));
        EXPECT_EQ(dc.ell, longest);
    }
}

TEST(Weyl, ClosureOrder) {
    const auto g = WeylGroup::generate(make_root_datum("GL3"));
    const auto s1 = ParabolicSubset::make({0}, 2);
    const auto dcs = double_cosets(g, s1, s1);
    EXPECT_TRUE(closure_leq(g, dcs[0], dcs[1]));
    EXPECT_FALSE(closure_leq(g, dcs[1], dcs[0]));
    EXPECT_TRUE(closure_leq(g, dcs[1], dcs[1]));

    // Trivial parabolics: closure order is Bruhat order.
    const auto b = double_cosets(g, ParabolicSubset{}, ParabolicSubset{});
    for (const auto& x : b)
        for (const auto& y : b) EXPECT_EQ(closure_leq(g, x, y), bruhat_leq(g, x.min_rep, y.min_rep));
}

TEST(Weyl, SizeGuard) {
    EXPECT_THROW(WeylGroup::generate(make_root_datum("A3"), 10), ValidationError);
    EXPECT_NO_THROW(WeylGroup::generate(make_root_datum("A3"), 24));
}
