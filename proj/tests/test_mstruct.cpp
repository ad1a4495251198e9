#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace bltest;

namespace {

/// lambda on an element of h given in simple-coroot coordinates.
Scalar pair_with(const IntVec& lambda, const LieAlgebra& g, const Vec& h) {
    Scalar s(0);
    for (std::size_t i = 0; i < g.rank(); ++i) s += Scalar(lambda[i]) * h[g.cartan_index(i)];
    return s;
}

FiberLabel label_by_hand(const IntVec& lambda, const RealFormData& rf) {
    FiberLabel l;
    for (std::size_t i : rf.I_s) l.zeta.push_back(lambda[i] % 2 == 0 ? 1 : -1);
    for (const auto& y : rf.h_m_basis) l.nu.push_back(pair_with(lambda, *rf.g, y));
    return l;
}

}  // namespace

TEST(MStructure, Summaries) {
    EXPECT_EQ(m_structure(*preset("sl2R").rf).summary, "M = Z_2^1 x M_e");
    EXPECT_EQ(m_structure(*preset("sl3R").rf).summary, "M = Z_2^2 x M_e");
    EXPECT_EQ(m_structure(*preset("su21").rf).summary, "M = M_e");
    MStructureData su31 = m_structure(*preset("su31").rf);
    EXPECT_EQ(su31.h_m_dim, 2u);
    EXPECT_EQ(su31.center_dim, 1u);
}

TEST(MStructure, MTrivialityAndLabels) {
    const RealFormData& su21 = *preset("su21").rf;
    EXPECT_FALSE(m_trivial({1, 0}, su21));
    EXPECT_TRUE(m_trivial({1, 1}, su21));
    FiberLabel l = fiber_label({2, 1}, su21);
    EXPECT_TRUE(l.zeta.empty());
    EXPECT_EQ(l.nu, (Vec{Scalar(1)}));
    for (const auto& name : preset_names()) {
        const RealFormData& rf = *preset(name).rf;
        for (const auto& w : dominant_weights_up_to(rf.rank(), 4)) EXPECT_EQ(fiber_label(w, rf), label_by_hand(w, rf)) << name;
    }
}

TEST(MStructure, SphericalMeansTrivialKTypeOccurs) {
    for (const auto& name : preset_names()) {
        const Preset& p = preset(name);
        for (const auto& w : weights_with_dim_at_most(p.g->root_system(), 80, 4)) {
            std::size_t m = branch_oracle(build_irrep(p.g, w), *p.ks).multiplicity(Vec(p.ks->rank()));
            EXPECT_LE(m, 1u) << name;
            EXPECT_EQ(m == 1, is_spherical(w, *p.rf)) << name;
        }
    }
}

TEST(MStructure, Sl2Fibers) {
    const RealFormData& rf = *preset("sl2R").rf;
    FiberReport even = fiber_enumerate({{1}, {}}, 6, rf);
    EXPECT_EQ(even.members, (std::vector<IntVec>{{0}, {2}, {4}, {6}}));
    FiberReport odd = fiber_enumerate({{-1}, {}}, 6, rf);
    EXPECT_EQ(odd.members, (std::vector<IntVec>{{1}, {3}, {5}}));
    EXPECT_EQ(odd.minimal, (IntVec{1}));
}

TEST(MStructure, MinimalElements) {
    const RealFormData& su21 = *preset("su21").rf;
    EXPECT_EQ(minimal_fiber_element({{}, {Scalar(-2)}}, su21), (IntVec{0, 2}));
    EXPECT_EQ(minimal_fiber_element({{}, {Scalar(3)}}, su21), (IntVec{3, 0}));
    try {
        minimal_fiber_element({{}, {Scalar(Rational(1, 2))}}, su21);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidLabel);
    }
    EXPECT_THROW(minimal_fiber_element({{1}, {}}, su21), Error);
    try {
        minimal_fiber_element({{2}, {}}, *preset("sl2R").rf);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidLabel);
    }
}

TEST(MStructure, FibersAreSphericalTranslatesOnAllPresets) {
    for (const auto& name : preset_names()) {
        const RealFormData& rf = *preset(name).rf;
        std::set<std::string> seen;
        for (const auto& w : dominant_weights_up_to(rf.rank(), 5)) {
            FiberLabel l = fiber_label(w, rf);
            if (!seen.insert(l.to_string()).second) continue;
            FiberReport rep = fiber_enumerate(l, 5, rf);
            EXPECT_TRUE(rep.equals_translate && rep.minimal_ok) << name;
            // brute-force minimality: the minimal element is below every member in the dominance order on coefficients
            for (const auto& m : rep.members) EXPECT_LE(weight_sum(rep.minimal), weight_sum(m)) << name;
        }
    }
}

TEST(MStructure, EveryLabelIsHit) {
    // surjectivity onto labels with small nu
    for (const auto& name : preset_names()) {
        const RealFormData& rf = *preset(name).rf;
        const std::size_t d = rf.h_m_basis.size();
        std::vector<FiberLabel> labels{{std::vector<int>(rf.I_s.size(), 1), Vec(d)}};
        for (std::size_t k = 0; k < rf.I_s.size(); ++k) {
            FiberLabel l = labels[0];
            l.zeta[k] = -1;
            labels.push_back(l);
        }
        for (std::size_t k = 0; k < d; ++k)
            for (long v : {-2L, 1L, 2L}) {
                if (k < rf.I_m.size() && v < 0) continue;
                FiberLabel l = labels[0];
                l.nu[k] = Scalar(v);
                labels.push_back(l);
            }
        for (const auto& l : labels) EXPECT_EQ(fiber_label(minimal_fiber_element(l, rf), rf), l) << name << " " << l.to_string();
    }
}

TEST(MStructure, TrivialKTypeAtFundamentalWeightsOfIs) {
    for (const std::string name : {"sl2R", "sl3R", "sp4R", "g2split"}) {
        const Preset& p = preset(name);
        for (std::size_t i : p.rf->I_s) {
            IntVec w(p.g->rank(), 0);
            w[i] = 1;
            EXPECT_FALSE(is_spherical(w, *p.rf));
            w[i] = 2;
            EXPECT_EQ(branch_oracle(build_irrep(p.g, w), *p.ks).multiplicity(Vec(p.ks->rank())), 1u) << name;
        }
    }
}
