#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace bltest;

namespace {

const std::vector<std::string> kTypes{"A1", "A2", "A3", "B2", "C2", "G2"};

}  // namespace

TEST(Chevalley, DimensionAndBasisOrder) {
    const LieAlgebra& g = *algebra("A2");
    EXPECT_EQ(g.dim(), 8u);
    EXPECT_EQ(g.basis_label(0), "e(1,0)");
    EXPECT_EQ(g.basis_label(3), "h1");
    EXPECT_EQ(g.basis_label(7), "e(-1,-1)");
}

TEST(Chevalley, StructureConstantsAreIntegralAndAntisymmetric) {
    for (const auto& type : kTypes) {
        const LieAlgebra& g = *algebra(type);
        for (std::size_t a = 0; a < g.dim(); ++a)
            for (std::size_t b = 0; b < g.dim(); ++b) {
                for (const auto& [k, v] : g.bracket_basis(a, b)) EXPECT_TRUE(v.is_integer());
                SparseVec neg = g.bracket_basis(b, a);
                scale(neg, Scalar(-1));
                EXPECT_TRUE(g.bracket_basis(a, b) == neg);
            }
    }
}

TEST(Chevalley, JacobiIdentityOnBasis) {
    for (const auto& type : kTypes) {
        const LieAlgebra& g = *algebra(type);
        const std::size_t n = g.dim();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                for (std::size_t c = b + 1; c < n; ++c) {
                    Vec x = g.basis_vector(a), y = g.basis_vector(b), z = g.basis_vector(c);
                    Vec s = g.bracket(x, g.bracket(y, z)) + g.bracket(y, g.bracket(z, x)) + g.bracket(z, g.bracket(x, y));
                    ASSERT_TRUE(is_zero(s)) << type << " " << a << " " << b << " " << c;
                }
    }
}

TEST(Chevalley, CartanRelations) {
    for (const auto& type : kTypes) {
        const LieAlgebra& g = *algebra(type);
        const RootSystem& rs = g.root_system();
        for (std::size_t i = 0; i < g.rank(); ++i) {
            Vec h = g.basis_vector(g.cartan_index(i));
            for (std::size_t b = 0; b < g.dim(); ++b) {
                if (g.is_cartan(b)) continue;
                Vec expected = Scalar(rs.pairing_coroot(g.root_of(b), i)) * g.basis_vector(b);
                EXPECT_EQ(g.bracket(h, g.basis_vector(b)), expected) << type;
            }
            // [e_i, f_j] = delta_ij h_i
            for (std::size_t j = 0; j < g.rank(); ++j) {
                Vec e = g.basis_vector(g.root_index(rs.simple_root(i)));
                Vec f = g.basis_vector(g.root_index(RootSystem::negate(rs.simple_root(j))));
                EXPECT_EQ(g.bracket(e, f), i == j ? h : Vec(g.dim())) << type;
            }
        }
    }
}

TEST(Chevalley, ChevalleyBasisIntegrality) {
    // [e_phi, e_psi] = +-(p+1) e_{phi+psi}, p the largest with psi - p phi a root
    for (const auto& type : kTypes) {
        const LieAlgebra& g = *algebra(type);
        const RootSystem& rs = g.root_system();
        for (const auto& phi : rs.roots())
            for (const auto& psi : rs.roots()) {
                IntVec sum = RootSystem::add(phi, psi);
                if (!rs.is_root(sum)) continue;
                long p = 0;
                IntVec down = RootSystem::sub(psi, phi);
                while (rs.is_root(down)) {
                    ++p;
                    down = RootSystem::sub(down, phi);
                }
                Vec br = g.bracket(g.basis_vector(g.root_index(phi)), g.basis_vector(g.root_index(psi)));
                Scalar c = br[g.root_index(sum)];
                EXPECT_TRUE(c == Scalar(p + 1) || c == Scalar(-(p + 1))) << type;
            }
    }
}

TEST(Chevalley, KillingFormValues) {
    auto cartan_entry = [](const std::string& type, std::size_t i, std::size_t j) {
        const LieAlgebra& g = *algebra(type);
        return g.killing(g.basis_vector(g.cartan_index(i)), g.basis_vector(g.cartan_index(j)));
    };
    EXPECT_EQ(cartan_entry("A1", 0, 0), Scalar(8));
    EXPECT_EQ(cartan_entry("A2", 0, 0), Scalar(12));
    EXPECT_EQ(cartan_entry("A2", 0, 1), Scalar(-6));
    EXPECT_EQ(cartan_entry("A3", 0, 0), Scalar(16));
    EXPECT_EQ(cartan_entry("A3", 0, 1), Scalar(-8));
    EXPECT_EQ(cartan_entry("B2", 0, 0), Scalar(12));
    EXPECT_EQ(cartan_entry("B2", 0, 1), Scalar(-12));
    EXPECT_EQ(cartan_entry("C2", 0, 0), Scalar(24));
    EXPECT_EQ(cartan_entry("C2", 0, 1), Scalar(-12));
    EXPECT_EQ(cartan_entry("G2", 0, 0), Scalar(16));
    EXPECT_EQ(cartan_entry("G2", 0, 1), Scalar(-24));
    EXPECT_EQ(algebra("A1")->root_system().simple_form()[0][0], Scalar(Rational(1, 2)));
}

TEST(Chevalley, KillingFormIsInvariant) {
    for (const std::string type : {"A2", "B2", "G2"}) {
        const LieAlgebra& g = *algebra(type);
        const std::size_t n = g.dim();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; c += 3) {
                    Vec x = g.basis_vector(a), y = g.basis_vector(b), z = g.basis_vector(c);
                    ASSERT_EQ(g.killing(g.bracket(x, y), z), g.killing(x, g.bracket(y, z)));
                }
    }
}

TEST(Chevalley, KillingFormIsTraceOfAdProduct) {
    const LieAlgebra& g = *algebra("C2");
    for (std::size_t a = 0; a < g.dim(); ++a)
        for (std::size_t b = 0; b < g.dim(); ++b) EXPECT_EQ(g.killing(g.basis_vector(a), g.basis_vector(b)), (g.ad_basis(a) * g.ad_basis(b)).trace());
}
