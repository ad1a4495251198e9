#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace bltest;

namespace {

struct Expected {
    std::vector<std::size_t> I_m, I_n, I_s, I_nil, I_1, I_2;
    std::size_t split_rank, center_dim, dim_k, restricted;
};

std::vector<std::size_t> idx(std::initializer_list<std::size_t> one_based) {
    std::vector<std::size_t> v;
    for (auto i : one_based) v.push_back(i - 1);
    return v;
}

}  // namespace

TEST(RealForm, ClassificationOfPresets) {
    const std::map<std::string, Expected> table{
        {"sl2R", {{}, idx({1}), idx({1}), {}, idx({1}), {}, 1, 0, 1, 2}},
        {"sl3R", {{}, idx({1, 2}), idx({1, 2}), {}, idx({1, 2}), {}, 2, 0, 3, 6}},
        {"sp4R", {{}, idx({1, 2}), idx({1, 2}), {}, idx({1, 2}), {}, 2, 0, 4, 8}},
        {"so32R", {{}, idx({1, 2}), idx({1, 2}), {}, idx({1, 2}), {}, 2, 0, 4, 8}},
        {"g2split", {{}, idx({1, 2}), idx({1, 2}), {}, idx({1, 2}), {}, 2, 0, 6, 12}},
        {"su21", {{}, idx({1, 2}), {}, idx({1, 2}), {}, idx({1, 2}), 1, 1, 4, 4}},
        {"su31", {idx({2}), idx({1, 3}), {}, idx({1, 3}), {}, idx({1, 3}), 1, 1, 9, 4}},
    };
    for (const auto& [name, e] : table) {
        const RealFormData& rf = *preset(name).rf;
        EXPECT_EQ(rf.I_m, e.I_m) << name;
        EXPECT_EQ(rf.I_n, e.I_n) << name;
        EXPECT_EQ(rf.I_s, e.I_s) << name;
        EXPECT_EQ(rf.I_nil, e.I_nil) << name;
        EXPECT_EQ(rf.I_1, e.I_1) << name;
        EXPECT_EQ(rf.I_2, e.I_2) << name;
        EXPECT_EQ(rf.split_rank(), e.split_rank) << name;
        EXPECT_EQ(rf.center_dim(), e.center_dim) << name;
        EXPECT_EQ(rf.k_basis.size(), e.dim_k) << name;
        EXPECT_EQ(rf.restricted.size(), e.restricted) << name;
    }
}

TEST(RealForm, ThetaIsAnInvolutiveAutomorphism) {
    for (const auto& name : preset_names()) {
        const RealFormData& rf = *preset(name).rf;
        const LieAlgebra& g = *rf.g;
        EXPECT_TRUE(rf.theta * rf.theta == SparseMatrix::identity(g.dim())) << name;
        for (std::size_t a = 0; a < g.dim(); ++a)
            for (std::size_t b = 0; b < g.dim(); ++b) {
                Vec x = g.basis_vector(a), y = g.basis_vector(b);
                ASSERT_EQ(rf.apply_theta(g.bracket(x, y)), g.bracket(rf.apply_theta(x), rf.apply_theta(y))) << name;
            }
    }
}

TEST(RealForm, IwasawaDecompositionSpansG) {
    for (const auto& name : preset_names()) {
        const RealFormData& rf = *preset(name).rf;
        std::vector<Vec> all = rf.k_basis;
        all.insert(all.end(), rf.a_basis.begin(), rf.a_basis.end());
        all.insert(all.end(), rf.n_basis.begin(), rf.n_basis.end());
        EXPECT_EQ(rank_of(all), rf.g->dim()) << name;
        // a is abelian and n is a subalgebra normalized by a
        for (const auto& x : rf.a_basis)
            for (const auto& y : rf.a_basis) EXPECT_TRUE(is_zero(rf.g->bracket(x, y)));
        SpanBasis nspan;
        for (const auto& x : rf.n_basis) nspan.add(x);
        for (const auto& x : rf.n_basis)
            for (const auto& y : rf.n_basis) EXPECT_TRUE(nspan.contains(rf.g->bracket(x, y))) << name;
    }
}

TEST(RealForm, StructureIdentitiesPass) {
    for (const auto& name : preset_names())
        for (const auto& c : structure_identities(*preset(name).rf)) EXPECT_TRUE(c.passed) << name << ": " << c.name << " " << c.detail;
}

TEST(RealForm, HmBasisOfSu31) {
    const RealFormData& rf = *preset("su31").rf;
    ASSERT_EQ(rf.h_m_basis.size(), 2u);
    EXPECT_EQ(rf.h_m_basis[0], rf.h(1));
    EXPECT_EQ(rf.h_m_basis[1], rf.h(0) - rf.h(2));
    EXPECT_EQ(rf.pairs, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}}));
}

TEST(RealForm, RejectsBadInvolutions) {
    auto g = algebra("A2");
    ThetaSpec bad = theta_preset("sl3R");
    bad.root_map = {{0, 1}, {1, 0}};  // T(alpha) = swap; squares to id but theta with these signs fails
    bad.signs_plus = {Scalar(1), Scalar(-1)};
    bad.signs_minus = {Scalar(1), Scalar(1)};
    EXPECT_THROW(build_real_form(g, bad), Error);

    ThetaSpec not_inv = theta_preset("sl3R");
    not_inv.root_map = {{0, -1}, {1, -1}};
    try {
        build_real_form(g, not_inv);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotInvolution);
    }
}

TEST(RealForm, LowestWeightsPartitionPiN) {
    for (const auto& name : preset_names()) {
        const RealFormData& rf = *preset(name).rf;
        auto cls = classify_simple_restricted(rf);
        EXPECT_EQ(cls.J_2.size(), rf.center_dim()) << name;
        EXPECT_EQ(rf.I_n.size(), rf.split_rank() + rf.center_dim()) << name;
    }
}
