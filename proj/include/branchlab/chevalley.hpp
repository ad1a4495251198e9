#pragma once

#include "errors.hpp"
#include "generator.hpp"
#include "linalg.hpp"
#include "rootsys.hpp"

#include <memory>
#include <string>
#include <vector>

namespace branchlab {

/// How a non-simple positive root vector is produced: e_phi = [e_{alpha_i}, e_{phi - alpha_i}] / (p + 1).
struct RootPath {
    std::size_t simple = 0;
    std::size_t sub = 0;  // index of phi - alpha_i among the positive roots
    long p = 0;
};

/// Extraspecial choice: smallest i with phi - alpha_i a root.
inline std::vector<RootPath> chevalley_paths(const RootSystem& rs) {
    std::vector<RootPath> paths(rs.num_positive());
    for (std::size_t k = 0; k < rs.num_positive(); ++k) {
        const IntVec& phi = rs.positive_roots()[k];
        if (RootSystem::height(phi) == 1) continue;
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            IntVec sub = phi;
            sub[i] -= 1;
            long idx = rs.positive_index(sub);
            if (idx < 0) continue;
            long p = 0;
            IntVec down = sub;
            while (true) {
                down[i] -= 1;
                if (!rs.is_root(down)) break;
                ++p;
            }
            paths[k] = RootPath{i, static_cast<std::size_t>(idx), p};
            break;
        }
    }
    return paths;
}

/// Matrices of the full Chevalley basis in a representation given by E_i, F_i, H_i.
/// Basis order: positive roots, h_1..h_l, negative roots (e_{-phi} = [e_{-(phi - alpha_i)}, e_{-alpha_i}] / (p + 1)).
inline std::vector<SparseMatrix> realize_chevalley_basis(const RootSystem& rs, const std::vector<RootPath>& paths,
                                                         const std::vector<SparseMatrix>& E, const std::vector<SparseMatrix>& F,
                                                         const std::vector<SparseMatrix>& H) {
    const std::size_t P = rs.num_positive(), l = rs.rank();
    std::vector<SparseMatrix> pos(P), neg(P);
    for (std::size_t k = 0; k < P; ++k) {
        const IntVec& phi = rs.positive_roots()[k];
        if (RootSystem::height(phi) == 1) {
            std::size_t i = std::find(phi.begin(), phi.end(), 1) - phi.begin();
            pos[k] = E[i];
            neg[k] = F[i];
        } else {
            const RootPath& path = paths[k];
            Scalar d = Scalar(1) / Scalar(path.p + 1);
            pos[k] = d * commutator(E[path.simple], pos[path.sub]);
            neg[k] = d * commutator(neg[path.sub], F[path.simple]);
        }
    }
    std::vector<SparseMatrix> out;
    out.reserve(2 * P + l);
    for (auto& m : pos) out.push_back(std::move(m));
    for (std::size_t i = 0; i < l; ++i) out.push_back(H[i]);
    for (auto& m : neg) out.push_back(std::move(m));
    return out;
}

/// Complex semisimple Lie algebra in a Chevalley basis with exact structure constants.
class LieAlgebra {
public:
    explicit LieAlgebra(const RootSystem& rs) : rs_(rs), paths_(chevalley_paths(rs)) {
        P_ = rs.num_positive();
        l_ = rs.rank();
        dim_ = 2 * P_ + l_;
        build_structure_constants();
        build_killing();
        inject_form();
    }

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return l_; }
    std::size_t num_positive() const { return P_; }

    /// Root system carrying the Killing-induced form on h*.
    const RootSystem& root_system() const { return rs_; }
    const std::vector<RootPath>& paths() const { return paths_; }

    std::size_t positive_index(std::size_t k) const { return k; }
    std::size_t cartan_index(std::size_t i) const { return P_ + i; }
    std::size_t negative_index(std::size_t k) const { return P_ + l_ + k; }

    bool is_cartan(std::size_t b) const { return b >= P_ && b < P_ + l_; }
    bool is_positive(std::size_t b) const { return b < P_; }
    bool is_negative(std::size_t b) const { return b >= P_ + l_; }

    /// Root of a basis element in simple-root coordinates (zero for h_i).
    IntVec root_of(std::size_t b) const {
        if (b < P_) return rs_.positive_roots()[b];
        if (b < P_ + l_) return IntVec(l_, 0);
        return RootSystem::negate(rs_.positive_roots()[b - P_ - l_]);
    }

    /// Basis index of e_phi, or -1 if phi is not a root.
    long root_index(const IntVec& phi) const {
        long k = rs_.positive_index(phi);
        if (k >= 0) return k;
        k = rs_.positive_index(RootSystem::negate(phi));
        if (k >= 0) return static_cast<long>(P_ + l_) + k;
        return -1;
    }

    std::string basis_label(std::size_t b) const {
        auto fmt = [](const IntVec& r) {
            std::string s = "(";
            for (std::size_t k = 0; k < r.size(); ++k) s += (k ? "," : "") + std::to_string(r[k]);
            return s + ")";
        };
        if (is_cartan(b)) return "h" + std::to_string(b - P_ + 1);
        return "e" + fmt(root_of(b));
    }

    Vec basis_vector(std::size_t b) const { return unit_vec(dim_, b); }

    /// Coordinates of [b_a, b_b].
    const SparseVec& bracket_basis(std::size_t a, std::size_t b) const { return table_[a * dim_ + b]; }

    Vec bracket(const Vec& x, const Vec& y) const {
        Vec out(dim_);
        for (std::size_t a = 0; a < dim_; ++a) {
            if (x[a].is_zero()) continue;
            for (std::size_t b = 0; b < dim_; ++b) {
                if (y[b].is_zero()) continue;
                Scalar c = x[a] * y[b];
                for (const auto& [k, v] : table_[a * dim_ + b]) out[k] += c * v;
            }
        }
        return out;
    }

    /// Matrix of ad x in the basis.
    SparseMatrix ad(const Vec& x) const {
        SparseMatrix m(dim_, dim_);
        for (std::size_t a = 0; a < dim_; ++a) {
            if (x[a].is_zero()) continue;
            m = m + x[a] * ad_basis_[a];
        }
        return m;
    }

    const SparseMatrix& ad_basis(std::size_t a) const { return ad_basis_[a]; }

    Scalar killing(const Vec& x, const Vec& y) const {
        Scalar s;
        for (std::size_t a = 0; a < dim_; ++a) {
            if (x[a].is_zero()) continue;
            for (std::size_t b = 0; b < dim_; ++b)
                if (!y[b].is_zero() && !killing_[a][b].is_zero()) s += x[a] * y[b] * killing_[a][b];
        }
        return s;
    }

    const Mat& killing_matrix() const { return killing_; }

    /// Coroot h_phi = [e_phi, e_{-phi}] for a positive root phi, as an element of g.
    Vec coroot(const IntVec& phi) const {
        long k = rs_.positive_index(phi);
        if (k < 0) fail(ErrorKind::InvalidArgument, "coroot needs a positive root");
        return to_dense(bracket_basis(k, negative_index(k)), dim_);
    }

    /// Element of h with the given coordinates in h_1..h_l.
    Vec cartan_element(const Vec& c) const {
        Vec v(dim_);
        for (std::size_t i = 0; i < l_; ++i) v[P_ + i] = c[i];
        return v;
    }

    Vec cartan_coords(const Vec& x) const { return Vec(x.begin() + P_, x.begin() + P_ + l_); }

    /// phi(h) for h given by coordinates on h_1..h_l.
    Scalar root_value(const IntVec& phi, const Vec& hc) const {
        Scalar s;
        for (std::size_t i = 0; i < l_; ++i) {
            if (hc[i].is_zero()) continue;
            s += hc[i] * Scalar(rs_.pairing_coroot(phi, i));
        }
        return s;
    }

private:
    void build_structure_constants() {
        // faithful representation: sum of the fundamental modules
        std::vector<GeneratedModule> fund;
        for (std::size_t i = 0; i < l_; ++i) fund.push_back(generate_irreducible(rs_.cartan().entries(), rs_.fundamental_weight(i), 1u << 20));
        std::size_t n = 0;
        for (const auto& m : fund) n += m.dim;
        auto block = [&](auto getter) {
            std::vector<SparseMatrix> out;
            for (std::size_t i = 0; i < l_; ++i) {
                SparseMatrix s(n, n);
                std::size_t off = 0;
                for (const auto& m : fund) {
                    SparseMatrix part = getter(m, i);
                    for (std::size_t r = 0; r < m.dim; ++r)
                        for (const auto& [c, v] : part.row(r)) s.row(off + r).emplace_back(off + c, v);
                    off += m.dim;
                }
                out.push_back(std::move(s));
            }
            return out;
        };
        auto E = block([](const GeneratedModule& m, std::size_t i) { return m.E[i]; });
        auto F = block([](const GeneratedModule& m, std::size_t i) { return m.F[i]; });
        auto H = block([](const GeneratedModule& m, std::size_t i) { return m.H(i); });
        std::vector<SparseMatrix> basis = realize_chevalley_basis(rs_, paths_, E, F, H);
        SpanBasis span;
        for (const auto& b : basis)
            if (!span.add(b.flatten())) fail(ErrorKind::StructureViolation, "representation is not faithful");
        table_.assign(dim_ * dim_, {});
        for (std::size_t a = 0; a < dim_; ++a)
            for (std::size_t b = a + 1; b < dim_; ++b) {
                auto c = span.coordinates(commutator(basis[a], basis[b]).flatten());
                if (!c) fail(ErrorKind::StructureViolation, "bracket leaves the span of the basis");
                for (const auto& [k, v] : *c)
                    if (!v.is_integer()) fail(ErrorKind::StructureViolation, "non-integral structure constant");
                table_[a * dim_ + b] = *c;
                SparseVec neg = *c;
                scale(neg, Scalar(-1));
                table_[b * dim_ + a] = std::move(neg);
            }
    }

    void build_killing() {
        ad_basis_.clear();
        for (std::size_t a = 0; a < dim_; ++a) {
            std::vector<SparseVec> cols(dim_);
            for (std::size_t b = 0; b < dim_; ++b) cols[b] = table_[a * dim_ + b];
            ad_basis_.push_back(SparseMatrix::from_columns(dim_, cols));
        }
        killing_.assign(dim_, Vec(dim_));
        for (std::size_t a = 0; a < dim_; ++a)
            for (std::size_t b = a; b < dim_; ++b) {
                Scalar t = (ad_basis_[a] * ad_basis_[b]).trace();
                killing_[a][b] = t;
                killing_[b][a] = t;
            }
    }

    void inject_form() {
        Mat bh(l_, Vec(l_));
        for (std::size_t i = 0; i < l_; ++i)
            for (std::size_t j = 0; j < l_; ++j) bh[i][j] = killing_[P_ + i][P_ + j];
        Mat a = int_to_mat(rs_.cartan().entries());
        rs_ = rs_.with_form(mat_mul(mat_mul(transpose(a), inverse(bh)), a));
    }

    RootSystem rs_;
    std::vector<RootPath> paths_;
    std::size_t P_ = 0, l_ = 0, dim_ = 0;
    std::vector<SparseVec> table_;
    std::vector<SparseMatrix> ad_basis_;
    Mat killing_;
};

inline std::shared_ptr<const LieAlgebra> build_lie_algebra(const RootSystem& rs) { return std::make_shared<const LieAlgebra>(rs); }

inline Scalar killing_form(const LieAlgebra& g, const Vec& x, const Vec& y) { return g.killing(x, y); }

} // namespace branchlab
