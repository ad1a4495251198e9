#pragma once

#include "chevalley.hpp"
#include "errors.hpp"
#include "generator.hpp"

#include <memory>
#include <string>
#include <vector>

namespace branchlab {

/// Finite-dimensional irreducible g-module with a weight basis; v_lambda is basis vector 0.
struct HWModule {
    std::shared_ptr<const LieAlgebra> g;
    IntVec highest_weight;
    GeneratedModule gen;
    std::vector<SparseMatrix> action;  // one matrix per basis element of g

    std::size_t dim() const { return gen.dim; }
    const std::vector<IntVec>& weights() const { return gen.weights; }
    Vec highest_vector() const { return unit_vec(dim(), 0); }

    SparseMatrix act(const Vec& x) const {
        SparseMatrix m(dim(), dim());
        for (std::size_t a = 0; a < x.size(); ++a)
            if (!x[a].is_zero()) m = m + x[a] * action[a];
        return m;
    }

    Vec apply(const Vec& x, const Vec& v) const {
        Vec out(dim());
        for (std::size_t a = 0; a < x.size(); ++a)
            if (!x[a].is_zero()) out = out + x[a] * action[a].apply(v);
        return out;
    }
};

inline HWModule build_irrep(std::shared_ptr<const LieAlgebra> g, const IntVec& lambda, std::size_t cap = default_dim_cap()) {
    const RootSystem& rs = g->root_system();
    if (lambda.size() != rs.rank()) fail(ErrorKind::InvalidArgument, "weight length differs from rank");
    if (!RootSystem::is_dominant(lambda)) fail(ErrorKind::NotDominant, "highest weight must be dominant");
    Rational wd = rs.weyl_dimension(lambda);
    if (wd > Rational(static_cast<unsigned long>(cap)))
        fail(ErrorKind::ResourceLimit, "dim V = " + wd.get_str() + " exceeds cap " + std::to_string(cap));
    HWModule V;
    V.g = g;
    V.highest_weight = lambda;
    V.gen = generate_irreducible(rs.cartan().entries(), lambda, cap);
    std::vector<SparseMatrix> H;
    for (std::size_t i = 0; i < rs.rank(); ++i) H.push_back(V.gen.H(i));
    V.action = realize_chevalley_basis(rs, g->paths(), V.gen.E, V.gen.F, H);
    if (Rational(static_cast<unsigned long>(V.dim())) != wd)
        fail(ErrorKind::IdentityViolation, "module dimension differs from the Weyl dimension");
    return V;
}

inline std::map<IntVec, long> weight_multiplicities(const RootSystem& rs, const IntVec& lambda) {
    return rs.weight_multiplicities(lambda);
}

/// Checks action([X, Y]) = [action X, action Y] on all basis pairs.
inline bool check_bracket_compatibility(const HWModule& V) {
    const LieAlgebra& g = *V.g;
    for (std::size_t a = 0; a < g.dim(); ++a)
        for (std::size_t b = a + 1; b < g.dim(); ++b) {
            SparseMatrix lhs(V.dim(), V.dim());
            for (const auto& [k, c] : g.bracket_basis(a, b)) lhs = lhs + c * V.action[k];
            if (!(lhs == commutator(V.action[a], V.action[b]))) return false;
        }
    return true;
}

struct PrvEntry {
    std::size_t index;
    long n;
    bool top_power_kills;    // e_{-alpha_i}^{n+1} v = 0
    bool lower_power_alive;  // e_{-alpha_i}^{n} v != 0
};

struct PrvReport {
    std::vector<PrvEntry> entries;
    bool ok = true;
};

inline Vec apply_power(const SparseMatrix& m, Vec v, long k) {
    for (long t = 0; t < k; ++t) v = m.apply(v);
    return v;
}

/// e_{-alpha_i}^{n_i+1} v_lambda = 0 and e_{-alpha_i}^{n_i} v_lambda != 0 for every simple root.
inline PrvReport verify_prv_annihilation(const HWModule& V) {
    PrvReport rep;
    const LieAlgebra& g = *V.g;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        const SparseMatrix& f = V.action[g.root_index(RootSystem::negate(g.root_system().simple_root(i)))];
        long n = V.highest_weight[i];
        Vec w = apply_power(f, V.highest_vector(), n);
        PrvEntry e{i, n, is_zero(f.apply(w)), !is_zero(w)};
        rep.entries.push_back(e);
        if (!e.top_power_kills || !e.lower_power_alive) {
            rep.ok = false;
            fail(ErrorKind::IdentityViolation, "PRV annihilation fails at simple index " + std::to_string(i + 1));
        }
    }
    return rep;
}

/// Contravariant form is nondegenerate on every weight space.
inline bool contravariant_form_nondegenerate(const HWModule& V) {
    for (const auto& [wt, idx] : V.gen.by_weight)
        if (determinant(contravariant_gram(V.gen, wt)).is_zero()) return false;
    return true;
}

} // namespace branchlab
