#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace bltest;

TEST(CartanMatrix, RejectsNonFiniteType) {
    EXPECT_THROW(CartanMatrix({{2, -3}, {-3, 2}}), Error);
    EXPECT_THROW(CartanMatrix({{2, -1}, {0, 2}}), Error);
    EXPECT_THROW(CartanMatrix({{2, 1}, {1, 2}}), Error);
    EXPECT_NO_THROW(CartanMatrix({{2, -1}, {-3, 2}}));
}

TEST(RootSystem, PositiveRootCounts) {
    const std::map<std::string, std::size_t> expected{{"A1", 1}, {"A2", 3}, {"A3", 6}, {"B2", 4}, {"C2", 4}, {"G2", 6}, {"D4", 12}};
    for (const auto& [type, count] : expected) EXPECT_EQ(RootSystem(CartanMatrix::of_type(type)).num_positive(), count) << type;
}

TEST(RootSystem, RootsMatchWeylOrbitsOfSimpleRoots) {
    for (const std::string type : {"A2", "A3", "B2", "C2", "G2"}) {
        RootSystem rs(CartanMatrix::of_type(type));
        std::set<IntVec> from_orbits;
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            IntVec beta = rs.simple_root(i);
            std::set<IntVec> seen{beta};
            std::vector<IntVec> queue{beta};
            for (std::size_t k = 0; k < queue.size(); ++k)
                for (std::size_t j = 0; j < rs.rank(); ++j) {
                    IntVec r = rs.reflect_root(queue[k], j);
                    if (seen.insert(r).second) queue.push_back(r);
                }
            from_orbits.insert(seen.begin(), seen.end());
        }
        auto all = rs.roots();
        EXPECT_EQ(from_orbits, std::set<IntVec>(all.begin(), all.end())) << type;
    }
}

TEST(RootSystem, WeylGroupOrderFromRhoOrbit) {
    const std::map<std::string, std::size_t> order{{"A1", 2}, {"A2", 6}, {"A3", 24}, {"B2", 8}, {"G2", 12}};
    for (const auto& [type, n] : order) {
        RootSystem rs(CartanMatrix::of_type(type));
        EXPECT_EQ(weyl_orbit(rs, rs.rho()).size(), n) << type;
        EXPECT_EQ(rs.longest_word().size(), rs.num_positive()) << type;
    }
}

TEST(RootSystem, LongestElementSendsDominantToAntidominant) {
    for (const std::string type : {"A2", "A3", "B2", "G2"}) {
        RootSystem rs(CartanMatrix::of_type(type));
        for (const auto& w : dominant_weights_up_to(rs.rank(), 3)) {
            IntVec k = rs.longest_element_action(w);
            for (long x : k) EXPECT_LE(x, 0);
            EXPECT_TRUE(weyl_orbit(rs, w).count(k));
        }
    }
    RootSystem a2(CartanMatrix::of_type("A2"));
    EXPECT_EQ(a2.longest_element_action({2, 1}), (IntVec{-1, -2}));
    RootSystem b2(CartanMatrix::of_type("B2"));
    EXPECT_EQ(b2.longest_element_action({2, 1}), (IntVec{-2, -1}));
}

TEST(RootSystem, WeylDimensionKnownValues) {
    RootSystem a2(CartanMatrix::of_type("A2"));
    EXPECT_EQ(a2.weyl_dimension({1, 1}), Rational(8));
    EXPECT_EQ(a2.weyl_dimension({2, 0}), Rational(6));
    RootSystem g2(CartanMatrix::of_type("G2"));
    std::set<Rational> dims{g2.weyl_dimension({1, 0}), g2.weyl_dimension({0, 1})};
    EXPECT_EQ(dims, (std::set<Rational>{Rational(7), Rational(14)}));
    RootSystem a1(CartanMatrix::of_type("A1"));
    for (long n = 0; n < 10; ++n) EXPECT_EQ(a1.weyl_dimension({n}), Rational(n + 1));
}

TEST(RootSystem, FreudenthalSumsToWeylDimension) {
    for (const std::string type : {"A2", "B2", "C2", "G2", "A3"}) {
        RootSystem rs(CartanMatrix::of_type(type));
        for (const auto& w : dominant_weights_up_to(rs.rank(), 3)) {
            long total = 0;
            for (const auto& [mu, m] : rs.weight_multiplicities(w)) total += m;
            EXPECT_EQ(Rational(total), rs.weyl_dimension(w)) << type;
        }
    }
}

TEST(RootSystem, FreudenthalIsWeylInvariant) {
    RootSystem rs(CartanMatrix::of_type("B2"));
    auto mult = rs.weight_multiplicities({1, 2});
    for (const auto& [mu, m] : mult)
        for (std::size_t i = 0; i < rs.rank(); ++i) EXPECT_EQ(mult.at(rs.reflect_weight(mu, i)), m);
}

TEST(RootSystem, DecomposeDominantRejectsNonIntegral) {
    RootSystem rs(CartanMatrix::of_type("A2"));
    Vec half{Scalar(Rational(1, 2)), Scalar(0)};
    EXPECT_THROW(rs.decompose_dominant(half), Error);
}
