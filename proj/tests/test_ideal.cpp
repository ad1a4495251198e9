#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace bltest;

TEST(QPolynomial, RootsAndCoefficients) {
    QPolynomial q = q_polynomial(2, true);
    EXPECT_EQ(q.roots(), (std::vector<long>{2, 0, -2}));
    EXPECT_EQ(q.coefficients(), (std::vector<Scalar>{Scalar(0), Scalar(-4), Scalar(0), Scalar(1)}));
    EXPECT_EQ(q.to_string(), "t^3 - 4t");
    QPolynomial nil = q_polynomial(2, false);
    EXPECT_EQ(nil.to_string(), "t^3");
    EXPECT_EQ(q_polynomial(0, true).to_string(), "t");
    for (long t = -3; t <= 3; ++t) EXPECT_EQ(q.evaluate(Scalar(t)), Scalar(t * t * t - 4 * t));
}

TEST(ZVector, FixedByThetaWithNormalization) {
    for (const auto& name : preset_names()) {
        const RealFormData& rf = *preset(name).rf;
        for (std::size_t i : rf.I_n) {
            ZVectorCheck c = check_z_vector(rf, i);
            EXPECT_TRUE(c.fixed_by_theta) << name;
            EXPECT_TRUE(c.norm_ok) << name;
            EXPECT_TRUE(c.bracket_zero) << name;
            EXPECT_TRUE(c.nilpotent) << name;
        }
        for (std::size_t i : rf.I_m) EXPECT_THROW(z_vector(rf, i), Error);
    }
}

TEST(ZVector, SemisimpleZHasSpectrumOfTheCoroot) {
    // for i in I_s, ad z_i on g has the same spectrum as ad h_i
    for (const std::string name : {"sl2R", "sl3R", "sp4R", "g2split"}) {
        const RealFormData& rf = *preset(name).rf;
        const LieAlgebra& g = *rf.g;
        for (std::size_t i : rf.I_s) {
            SparseMatrix adz = g.ad(z_vector(rf, i));
            std::map<long, std::size_t> spec_z, spec_h;
            for (long v = -4; v <= 4; ++v) {
                std::size_t dz = shifted_kernel(adz, Scalar(v)).size();
                if (dz) spec_z[v] = dz;
            }
            for (std::size_t b = 0; b < g.dim(); ++b) spec_h[g.root_system().pairing_coroot(g.root_of(b), i)] += 1;
            EXPECT_EQ(spec_z, spec_h) << name;
        }
    }
}

TEST(Annihilator, GeneratorsKillHighestVector) {
    for (const auto& name : preset_names()) {
        const Preset& p = preset(name);
        for (const auto& w : weights_with_dim_at_most(p.g->root_system(), 60, 3)) {
            HWModule V = build_irrep(p.g, w);
            AnnihilatorReport rep = verify_annihilator(V, *p.rf);
            EXPECT_TRUE(rep.ok) << name;
            for (const auto& probe : rep.probes) EXPECT_TRUE(probe.nonzero) << name << " " << probe.label;
        }
    }
}

TEST(Annihilator, GeneratorSetShape) {
    const RealFormData& rf = *preset("su31").rf;
    GeneratorSet G = generator_set(rf, {1, 2, 3});
    // I_m = {2}: one lowering power, two Cartan shifts, one m_+ generator; I_n = {1,3}: two q(z)
    EXPECT_EQ(G.m_part.size(), 4u);
    EXPECT_EQ(G.n_star_part.size(), 2u);
    EXPECT_EQ(G.m_part[0].power, 3);
    EXPECT_FALSE(G.n_star_part[0].q.semisimple);
    EXPECT_EQ(G.n_star_part[0].q.to_string(), "t^2");
}

TEST(Annihilator, Sl2ExampleQ) {
    const RealFormData& rf = *preset("sl2R").rf;
    EXPECT_EQ(q_polynomial(rf, {2}, 0).to_string(), "t^3 - 4t");
}
