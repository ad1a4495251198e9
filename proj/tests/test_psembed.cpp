#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace bltest;

TEST(DualWeight, KnownTypes) {
    EXPECT_EQ(dual_weight(algebra("A2")->root_system(), {2, 1}), (IntVec{1, 2}));
    EXPECT_EQ(dual_weight(algebra("A3")->root_system(), {1, 2, 3}), (IntVec{3, 2, 1}));
    EXPECT_EQ(dual_weight(algebra("B2")->root_system(), {1, 3}), (IntVec{1, 3}));
    EXPECT_EQ(dual_weight(algebra("G2")->root_system(), {2, 1}), (IntVec{2, 1}));
}

TEST(DualWeight, InvolutionAndNegatedCharacter) {
    for (const std::string type : {"A2", "A3", "C2", "G2"}) {
        const RootSystem& rs = algebra(type)->root_system();
        for (const auto& w : dominant_weights_up_to(rs.rank(), 3)) {
            IntVec c = dual_weight(rs, w);
            EXPECT_EQ(dual_weight(rs, c), w);
            std::map<IntVec, long> negated;
            for (const auto& [mu, m] : weight_multiplicities(rs, w)) negated[RootSystem::negate(mu)] = m;
            EXPECT_EQ(weight_multiplicities(rs, c), negated) << type;
        }
    }
}

TEST(PrincipalSeries, Parameters) {
    const RealFormData& sl2 = *preset("sl2R").rf;
    for (long n = 0; n <= 5; ++n) {
        PrincipalSeriesParams p = ps_params({n}, sl2);
        EXPECT_EQ(p.lambda_c, (IntVec{n}));
        EXPECT_EQ(p.delta.zeta, (std::vector<int>{n % 2 == 0 ? 1 : -1}));
        EXPECT_TRUE(p.xi_consistent);
        EXPECT_EQ(p.xi, Scalar(-1) * restrict_to_a({n}, sl2));
    }
    const RealFormData& su21 = *preset("su21").rf;
    PrincipalSeriesParams p = ps_params({1, 0}, su21);
    EXPECT_EQ(p.lambda_c, (IntVec{0, 1}));
    EXPECT_EQ(p.nu_c, (Vec{Scalar(-1)}));
    EXPECT_EQ(p.delta.nu, (Vec{Scalar(1)}));
    EXPECT_EQ(longest_word_m(*preset("su31").rf), (std::vector<std::size_t>{1}));
    EXPECT_EQ(kappa_m(*preset("su31").rf, {0, 1, 0}), (IntVec{1, -1, 1}));
}

TEST(PrincipalSeries, XiConsistentOnAllPresets) {
    for (const auto& name : preset_names()) {
        const RealFormData& rf = *preset(name).rf;
        for (const auto& w : dominant_weights_up_to(rf.rank(), 4)) EXPECT_TRUE(ps_params(w, rf).xi_consistent) << name;
    }
}

TEST(PrincipalSeries, BorelWeilCore) {
    for (const auto& name : preset_names()) {
        const Preset& p = preset(name);
        for (const auto& w : weights_with_dim_at_most(p.g->root_system(), 60, 3)) {
            BorelWeilReport rep = verify_borel_weil_annihilation(w, *p.rf);
            EXPECT_TRUE(rep.ok) << name;
            EXPECT_GE(rep.coinvariants.dim_coinvariants, 1u);
        }
    }
}

TEST(PrincipalSeries, KTypeBound) {
    for (const auto& name : preset_names()) {
        const Preset& p = preset(name);
        for (const auto& w : weights_with_dim_at_most(p.g->root_system(), 60, 3)) {
            KTypeBoundReport rep = ps_ktype_bound(build_irrep(p.g, w), *p.ks);
            EXPECT_TRUE(rep.ok) << name;
            for (const auto& e : rep.entries) EXPECT_LE(e.mult, e.delta.primary_dim) << name;
        }
    }
}

TEST(PrincipalSeries, Sl2DeltaComponentIsParityMatch) {
    const Preset& p = preset("sl2R");
    for (long m = -4; m <= 4; ++m) {
        KType Z = build_k_type(*p.ks, {Scalar(m)});
        for (int zeta : {1, -1}) {
            DeltaComponent d = delta_component(Z, {{zeta}, {}}, *p.rf);
            bool match = ((m % 2) == 0) == (zeta == 1);
            EXPECT_EQ(d.primary_dim, match ? 1u : 0u);
        }
    }
}

TEST(Parity, SemisimpleZHasMatchingParity) {
    for (const auto& name : preset_names()) {
        const Preset& p = preset(name);
        for (const auto& w : weights_with_dim_at_most(p.g->root_system(), 60, 3)) {
            HWModule V = build_irrep(p.g, w);
            for (std::size_t i : p.rf->I_s) EXPECT_TRUE(z_exponential_matches_parity(V, *p.rf, i)) << name;
            EXPECT_TRUE(k_type_parities_match(V, *p.ks)) << name;
        }
    }
}

TEST(Parity, IntegralSpectrum) {
    SparseMatrix d(3, 3);
    d.add(0, 0, Scalar(2));
    d.add(1, 1, Scalar(-1));
    d.add(2, 2, Scalar(2));
    auto s = integral_spectrum(d);
    ASSERT_TRUE(s.has_value());
    std::sort(s->begin(), s->end());
    EXPECT_EQ(*s, (std::vector<long>{-1, 2, 2}));
}
