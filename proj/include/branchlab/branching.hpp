#pragma once

#include "generator.hpp"
#include "hwmodule.hpp"
#include "ideal.hpp"
#include "realform.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace branchlab {

// ---------------------------------------------------------------- joint eigenspaces

struct EigenBlock {
    Vec eig;
    std::vector<Vec> basis;
};

inline bool vec_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), canonical_less);
}

/// Integers within sqrt(|tr T^2|), the only possible eigenvalues of a diagonalizable integral-spectrum T.
inline std::vector<Scalar> integer_scan(const SparseMatrix& T) {
    Scalar t = (T * T).trace();
    double bound = std::sqrt(std::abs(t.re().get_d())) + 1.0;
    std::vector<Scalar> out;
    for (long k = -static_cast<long>(bound); k <= static_cast<long>(bound); ++k) out.push_back(Scalar(k));
    return out;
}

/// Kernel of T - lam I, eliminating the sparse rows directly.
inline std::vector<Vec> shifted_kernel(const SparseMatrix& T, const Scalar& lam) {
    Echelon e(T.cols());
    for (std::size_t i = 0; i < T.rows(); ++i) {
        SparseVec row = T.row(i);
        axpy(row, -lam, SparseVec{{i, Scalar(1)}});
        if (!row.empty()) e.add(std::move(row));
    }
    return e.nullspace();
}

/// Simultaneous eigenspaces of commuting operators on a space of dimension n.
/// Empty candidate lists fall back to an integer scan; nullopt if the candidates do not exhaust the space.
inline std::optional<std::vector<EigenBlock>> joint_eigenspaces(const std::vector<SparseMatrix>& ops, std::size_t n,
                                                                const std::vector<std::vector<Scalar>>& candidates) {
    std::vector<EigenBlock> spaces;
    EigenBlock start;
    for (std::size_t k = 0; k < n; ++k) start.basis.push_back(unit_vec(n, k));
    spaces.push_back(std::move(start));
    for (std::size_t o = 0; o < ops.size(); ++o) {
        const SparseMatrix& T = ops[o];
        std::vector<Scalar> cand = candidates.size() > o ? candidates[o] : std::vector<Scalar>{};
        if (cand.empty()) cand = integer_scan(T);
        std::vector<EigenBlock> next;
        for (const auto& sp : spaces) {
            std::size_t found = 0;
            for (const auto& lam : cand) {
                std::vector<Vec> ker;
                if (o == 0) {
                    ker = shifted_kernel(T, lam);
                } else {
                    std::vector<std::function<Vec(const Vec&)>> maps{[&T, lam](const Vec& b) { return T.apply(b) - lam * b; }};
                    ker = kernel_on_span(sp.basis, maps);
                }
                if (ker.empty()) continue;
                found += ker.size();
                EigenBlock e;
                e.eig = sp.eig;
                e.eig.push_back(lam);
                e.basis = std::move(ker);
                next.push_back(std::move(e));
                if (found == sp.basis.size()) break;
            }
            if (found != sp.basis.size()) return std::nullopt;
        }
        spaces = std::move(next);
    }
    return spaces;
}

/// Connected components of the nonzero pattern of the given square matrices.
inline std::vector<std::vector<std::size_t>> invariant_blocks(const std::vector<SparseMatrix>& ops, std::size_t n) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& m : ops)
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& [j, v] : m.row(i)) parent[find(i)] = find(j);
    std::map<std::size_t, std::vector<std::size_t>> comps;
    for (std::size_t i = 0; i < n; ++i) comps[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [r, c] : comps) out.push_back(std::move(c));
    return out;
}

inline SparseMatrix submatrix(const SparseMatrix& m, const std::vector<std::size_t>& idx) {
    std::map<std::size_t, std::size_t> local;
    for (std::size_t k = 0; k < idx.size(); ++k) local[idx[k]] = k;
    SparseMatrix s(idx.size(), idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k)
        for (const auto& [j, v] : m.row(idx[k])) s.row(k).emplace_back(local.at(j), v);
    return s;
}

// ---------------------------------------------------------------- structure of k

struct KRoot {
    Vec weight;  // values on the t_k basis
    Vec vector;  // root vector in g
    bool positive = false;
};

struct KRootPath {
    std::size_t simple = 0;  // index into KStructure::simple
    std::size_t sub = 0;     // root index of gamma - beta (or -gamma + beta for negative roots)
    Scalar coeff;            // [E_s, X_sub] = coeff X_gamma  (F_s for negative roots)
};

/// Cartan subalgebra, roots and simple system of the symmetric subalgebra k.
struct KStructure {
    std::shared_ptr<const RealFormData> rf;
    std::vector<Vec> k_basis;
    std::vector<Vec> tk_basis;                 // h_m basis first, then z-elements
    std::vector<std::optional<Vec>> tk_proxy;  // diagonal stand-in in h for each t_k basis element
    std::vector<KRoot> roots;
    std::vector<std::size_t> simple;           // root indices of the simple k-roots
    std::vector<Vec> E, F;                     // g elements, [E_s, F_s] = H_s
    std::vector<Vec> H;                        // t_k coordinates of H_s
    IntMatrix cartan_k;                        // C_k[i][j] = beta_j(H_i)
    std::vector<Vec> center;                   // t_k coordinates of a center basis
    std::vector<KRootPath> paths;              // per root index (unused for simple roots)
    Vec positivity;                            // leading functional on t_k coordinates
    SpanBasis decomposition;                   // over [X_gamma for all roots] + [t_k basis]
    bool used_fallback = false;

    std::size_t rank() const { return tk_basis.size(); }

    long root_index(const Vec& w) const {
        for (std::size_t k = 0; k < roots.size(); ++k)
            if (roots[k].weight == w) return static_cast<long>(k);
        return -1;
    }

    /// Values of a g-weight (fundamental coordinates) on the t_k basis via the proxies.
    std::optional<Vec> proxy_weight(const IntVec& mu) const {
        Vec out;
        for (const auto& p : tk_proxy) {
            if (!p) return std::nullopt;
            out.push_back(weight_value(*rf->g, mu, *p));
        }
        return out;
    }

    Scalar pair_H(std::size_t s, const Vec& w) const {
        Scalar v;
        for (std::size_t j = 0; j < w.size(); ++j) v += H[s][j] * w[j];
        return v;
    }

    /// hw(H_s) for each simple root; throws NotDominant unless all are nonnegative integers.
    IntVec dynkin_labels(const Vec& hw) const {
        IntVec out;
        for (std::size_t s = 0; s < simple.size(); ++s) {
            Scalar v = pair_H(s, hw);
            if (!v.is_integer() || v.re() < 0) fail(ErrorKind::NotDominant, "k-weight is not dominant integral");
            out.push_back(v.to_long());
        }
        return out;
    }

    bool is_dominant(const Vec& hw) const {
        for (std::size_t s = 0; s < simple.size(); ++s) {
            Scalar v = pair_H(s, hw);
            if (!v.is_integer() || v.re() < 0) return false;
        }
        return true;
    }

    bool is_positive_weight(const Vec& w) const {
        Scalar f;
        for (std::size_t j = 0; j < w.size(); ++j) f += positivity[j] * w[j];
        if (!f.is_zero()) return f.re() > 0 || (f.re() == 0 && f.im() > 0);
        for (const auto& x : w)
            if (!x.is_zero()) return x.re() > 0 || (x.re() == 0 && x.im() > 0);
        return false;
    }

    std::size_t ktype_dimension(const Vec& hw) const {
        if (simple.empty()) return 1;
        RootSystem rs{CartanMatrix(cartan_k)};
        Rational d = rs.weyl_dimension(dynkin_labels(hw));
        return d.get_num().get_ui();
    }
};

namespace detail {

inline Vec bracket_k(const LieAlgebra& g, const Vec& x, const Vec& y) { return g.bracket(x, y); }

/// ad(t) restricted to k, in k-basis coordinates.
inline SparseMatrix ad_on_k(const LieAlgebra& g, const SpanBasis& kspan, std::size_t dk, const std::vector<Vec>& k_basis, const Vec& t) {
    std::vector<SparseVec> cols;
    for (const auto& b : k_basis) {
        auto c = kspan.coordinates(to_sparse(g.bracket(t, b)));
        if (!c) fail(ErrorKind::StructureViolation, "k is not closed under the bracket");
        cols.push_back(*c);
    }
    return SparseMatrix::from_columns(dk, cols);
}

inline Vec combine(const std::vector<Vec>& basis, const Vec& coords, std::size_t n) {
    Vec v(n);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!coords[k].is_zero()) v = v + coords[k] * basis[k];
    return v;
}

}  // namespace detail

/// Builds t_k from h_m and commuting Cayley-type elements z_phi, then the k-root data.
inline KStructure build_k_structure(std::shared_ptr<const RealFormData> rfp) {
    const RealFormData& rf = *rfp;
    const LieAlgebra& g = *rf.g;
    const std::size_t n = g.dim();
    KStructure ks;
    ks.rf = rfp;
    ks.k_basis = rf.k_basis;
    const std::size_t dk = ks.k_basis.size();
    SpanBasis kspan;
    for (const auto& b : ks.k_basis)
        if (!kspan.add(b)) fail(ErrorKind::StructureViolation, "k basis is dependent");

    // candidates: z_phi = c e_{-phi} + c^{-1} e_phi for theta(phi) = -phi
    struct Cand {
        Vec z;
        Vec proxy;
    };
    std::vector<Cand> cands;
    for (std::size_t b : rf.delta_n) {
        IntVec phi = g.root_of(b);
        if (rf.spec.apply(phi) != RootSystem::negate(phi)) continue;
        std::size_t nb = g.root_index(RootSystem::negate(phi));
        Scalar d = rf.theta.get(b, nb);
        Scalar c;
        if (d == Scalar(1)) c = Scalar(1);
        else if (d == Scalar(-1)) c = Scalar::i();
        else continue;
        Vec z = c * g.basis_vector(nb) + (Scalar(1) / c) * g.basis_vector(b);
        cands.push_back({z, g.coroot(phi)});
    }
    // largest pairwise commuting subset, earliest in lexicographic order
    const std::size_t m = cands.size();
    std::vector<std::vector<char>> commute(m, std::vector<char>(m, 1));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) commute[a][b] = commute[b][a] = is_zero(g.bracket(cands[a].z, cands[b].z));
    std::vector<std::size_t> best;
    if (m <= 20) {
        for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
            std::vector<std::size_t> sel;
            for (std::size_t k = 0; k < m; ++k)
                if (mask & (1ul << k)) sel.push_back(k);
            bool ok = true;
            for (std::size_t x = 0; x < sel.size() && ok; ++x)
                for (std::size_t y = x + 1; y < sel.size() && ok; ++y) ok = commute[sel[x]][sel[y]];
            if (!ok) continue;
            if (sel.size() > best.size() || (sel.size() == best.size() && sel < best)) best = sel;
        }
    }
    for (const auto& y : rf.h_m_basis) {
        ks.tk_basis.push_back(y);
        ks.tk_proxy.push_back(y);
    }
    for (std::size_t k : best) {
        ks.tk_basis.push_back(cands[k].z);
        ks.tk_proxy.push_back(cands[k].proxy);
    }

    auto self_centralizing = [&](const std::vector<Vec>& ts) {
        std::vector<std::function<Vec(const Vec&)>> maps;
        for (const auto& t : ts) maps.push_back([&g, t](const Vec& x) { return g.bracket(t, x); });
        std::vector<Vec> c = maps.empty() ? ks.k_basis : kernel_on_span(ks.k_basis, maps);
        return rank_of(c) == ts.size() || (ts.empty() && c.empty());
    };

    std::vector<SparseMatrix> ad_t;
    auto compute_ad = [&]() {
        ad_t.clear();
        for (const auto& t : ks.tk_basis) ad_t.push_back(detail::ad_on_k(g, kspan, dk, ks.k_basis, t));
    };

    std::optional<std::vector<EigenBlock>> eig;
    if (self_centralizing(ks.tk_basis)) {
        compute_ad();
        eig = joint_eigenspaces(ad_t, dk, {});
    }
    if (!eig) {
        // fallback: centralizers of seeded random integer combinations of k
        ks.used_fallback = true;
        std::mt19937 rng(20240611u);
        std::uniform_int_distribution<int> dist(-7, 7);
        for (int attempt = 0; attempt < 32 && !eig; ++attempt) {
            Vec x(n);
            for (const auto& b : ks.k_basis) x = x + Scalar(dist(rng)) * b;
            std::vector<std::function<Vec(const Vec&)>> maps{[&g, x](const Vec& y) { return g.bracket(x, y); }};
            std::vector<Vec> c = kernel_on_span(ks.k_basis, maps);
            bool abelian = true;
            for (std::size_t a = 0; a < c.size() && abelian; ++a)
                for (std::size_t b = a + 1; b < c.size() && abelian; ++b) abelian = is_zero(g.bracket(c[a], c[b]));
            if (!abelian || !self_centralizing(c)) continue;
            ks.tk_basis = c;
            ks.tk_proxy.assign(c.size(), std::nullopt);
            compute_ad();
            eig = joint_eigenspaces(ad_t, dk, {});
        }
        if (!eig) fail(ErrorKind::CartanSearchFailure, "no self-centralizing toral subalgebra of k found within the retry budget");
    }

    // roots of k
    const std::size_t r = ks.tk_basis.size();
    for (const auto& blk : *eig) {
        if (is_zero(blk.eig)) {
            if (blk.basis.size() != r) fail(ErrorKind::StructureViolation, "t_k is not self-centralizing");
            continue;
        }
        if (blk.basis.size() != 1) fail(ErrorKind::StructureViolation, "k-root space is not one-dimensional");
        KRoot kr;
        kr.weight = blk.eig;
        kr.vector = detail::combine(ks.k_basis, blk.basis[0], n);
        ks.roots.push_back(std::move(kr));
    }
    if (r == 0 && !ks.roots.empty()) fail(ErrorKind::StructureViolation, "k has roots but t_k is trivial");

    // positivity: first the functional rho_m^vee on the h_m coordinates, then lexicographic
    ks.positivity.assign(r, Scalar());
    if (!rf.I_m.empty()) {
        const std::size_t lm = rf.I_m.size();
        Mat am(lm, Vec(lm));
        for (std::size_t a = 0; a < lm; ++a)
            for (std::size_t b = 0; b < lm; ++b) am[a][b] = Scalar(g.root_system().cartan()(rf.I_m[b], rf.I_m[a]));
        // sum_b c_b alpha_a(h_b) = 1; the first lm basis vectors of t_k are h_i, i in I_m
        Vec c = solve(am, Vec(lm, Scalar(1)));
        for (std::size_t a = 0; a < lm; ++a) ks.positivity[a] = c[a];
    }
    for (auto& kr : ks.roots) kr.positive = ks.is_positive_weight(kr.weight);
    std::sort(ks.roots.begin(), ks.roots.end(), [](const KRoot& a, const KRoot& b) {
        if (a.positive != b.positive) return a.positive;
        return vec_less(a.weight, b.weight);
    });
    for (std::size_t b : rf.delta_m_pos) {
        Vec w;
        for (const auto& t : ks.tk_basis) w.push_back(g.root_value(g.root_of(b), g.cartan_coords(t)));
        long k = ks.root_index(w);
        if (k < 0 || !ks.roots[k].positive) fail(ErrorKind::StructureViolation, "k-positivity does not contain Delta(m_+)");
    }
    std::set<std::vector<std::string>> pos_keys;
    auto key = [](const Vec& w) {
        std::vector<std::string> s;
        for (const auto& x : w) s.push_back(x.to_string());
        return s;
    };
    for (const auto& kr : ks.roots)
        if (kr.positive) pos_keys.insert(key(kr.weight));
    for (std::size_t k = 0; k < ks.roots.size(); ++k) {
        if (!ks.roots[k].positive) continue;
        bool decomposable = false;
        for (const auto& other : ks.roots) {
            if (!other.positive) continue;
            if (pos_keys.count(key(ks.roots[k].weight - other.weight))) decomposable = true;
        }
        if (!decomposable) ks.simple.push_back(k);
    }

    // t_k coordinates
    SpanBasis tspan;
    for (const auto& t : ks.tk_basis) tspan.add(t);
    for (std::size_t s : ks.simple) {
        const KRoot& kr = ks.roots[s];
        long neg = ks.root_index(Scalar(-1) * kr.weight);
        if (neg < 0) fail(ErrorKind::StructureViolation, "negative of a k-root is missing");
        Vec t = g.bracket(kr.vector, ks.roots[neg].vector);
        auto tc = tspan.coordinates(t);
        if (!tc) fail(ErrorKind::StructureViolation, "[X_beta, X_-beta] is not in t_k");
        Scalar val;
        for (std::size_t j = 0; j < r; ++j) val += (*tc)[j] * kr.weight[j];
        if (val.is_zero()) fail(ErrorKind::StructureViolation, "beta([X_beta, X_-beta]) = 0");
        Scalar sc = Scalar(2) / val;
        ks.E.push_back(kr.vector);
        ks.F.push_back(sc * ks.roots[neg].vector);
        ks.H.push_back(sc * *tc);
    }
    const std::size_t rs = ks.simple.size();
    ks.cartan_k.assign(rs, IntVec(rs, 0));
    for (std::size_t i = 0; i < rs; ++i)
        for (std::size_t j = 0; j < rs; ++j) {
            Scalar v = ks.pair_H(i, ks.roots[ks.simple[j]].weight);
            if (!v.is_integer()) fail(ErrorKind::StructureViolation, "non-integral Cartan entry for [k,k]");
            ks.cartan_k[i][j] = v.to_long();
        }
    if (rs > 0) CartanMatrix check(ks.cartan_k);

    // center: common kernel of the roots on t_k
    {
        std::vector<Vec> rows;
        for (const auto& kr : ks.roots) rows.push_back(kr.weight);
        ks.center = nullspace_rows(rows, r);
    }

    // iterated-bracket paths for every non-simple root
    ks.paths.assign(ks.roots.size(), {});
    auto path_for = [&](std::size_t k, bool positive) {
        const Vec& w = ks.roots[k].weight;
        for (std::size_t s = 0; s < rs; ++s) {
            const Vec& beta = ks.roots[ks.simple[s]].weight;
            Vec rest = positive ? w - beta : w + beta;
            long sub = ks.root_index(rest);
            if (sub < 0) continue;
            Vec br = g.bracket(positive ? ks.E[s] : ks.F[s], ks.roots[sub].vector);
            if (is_zero(br)) continue;
            const Vec& target = ks.roots[k].vector;
            std::size_t p = 0;
            while (target[p].is_zero()) ++p;
            Scalar coeff = br[p] / target[p];
            if (br != coeff * target) fail(ErrorKind::StructureViolation, "bracket is not proportional to the k-root vector");
            ks.paths[k] = KRootPath{s, static_cast<std::size_t>(sub), coeff};
            return;
        }
        fail(ErrorKind::StructureViolation, "k-root is not an iterated bracket of simple root vectors");
    };
    // height in the simple k-roots, so sub-roots are filled first
    std::vector<Rational> heights(ks.roots.size());
    for (std::size_t k = 0; k < ks.roots.size(); ++k) {
        std::vector<Vec> aug;
        for (std::size_t j = 0; j < r; ++j) {
            Vec row;
            for (std::size_t s = 0; s < rs; ++s) row.push_back(ks.roots[ks.simple[s]].weight[j]);
            row.push_back(Scalar(-1) * ks.roots[k].weight[j]);
            aug.push_back(row);
        }
        bool found = false;
        for (const auto& v : nullspace_rows(aug, rs + 1)) {
            if (v[rs].is_zero()) continue;
            Scalar h;
            for (std::size_t s = 0; s < rs; ++s) h += v[s] / v[rs];
            heights[k] = abs(h.re());
            found = true;
            break;
        }
        if (!found) fail(ErrorKind::StructureViolation, "k-root outside the span of the simple k-roots");
    }
    std::vector<std::size_t> order(ks.roots.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return heights[a] < heights[b]; });
    for (std::size_t k : order)
        if (heights[k] > 1) path_for(k, ks.roots[k].positive);

    for (const auto& kr : ks.roots) ks.decomposition.add(kr.vector);
    for (const auto& t : ks.tk_basis) ks.decomposition.add(t);
    if (ks.decomposition.size() != dk) fail(ErrorKind::StructureViolation, "k-roots and t_k do not span k");
    return ks;
}

inline KStructure build_k_structure(const RealFormData& rf) { return build_k_structure(std::make_shared<const RealFormData>(rf)); }

// ---------------------------------------------------------------- k-types

/// Irreducible k-module built from its highest t_k-weight.
struct KType {
    const KStructure* ks = nullptr;
    Vec hw;
    GeneratedModule gen;
    std::vector<Vec> weights;                // t_k-weight of each basis vector
    std::vector<SparseMatrix> root_action;   // per k-root index

    std::size_t dim() const { return gen.dim; }

    SparseMatrix act(const Vec& x) const {
        auto c = ks->decomposition.coordinates(to_sparse(x));
        if (!c) fail(ErrorKind::InvalidArgument, "element is not in k");
        const std::size_t nr = ks->roots.size();
        SparseMatrix m(dim(), dim());
        for (const auto& [k, v] : *c) {
            if (k < nr) {
                m = m + v * root_action[k];
            } else {
                std::size_t t = k - nr;
                for (std::size_t b = 0; b < dim(); ++b) m.add(b, b, v * weights[b][t]);
            }
        }
        return m;
    }
};

inline KType build_k_type(const KStructure& ks, const Vec& hw, std::size_t cap = default_dim_cap()) {
    KType Z;
    Z.ks = &ks;
    Z.hw = hw;
    IntVec labels = ks.dynkin_labels(hw);
    if (ks.ktype_dimension(hw) > cap) fail(ErrorKind::ResourceLimit, "k-type dimension exceeds cap");
    Z.gen = generate_irreducible(ks.cartan_k, labels, cap);
    if (ks.simple.empty()) {
        Z.gen.dim = 1;
        Z.gen.weights = {IntVec{}};
    }
    Z.weights.resize(Z.dim());
    Z.weights[0] = hw;
    for (std::size_t b = 1; b < Z.dim(); ++b) {
        auto [s, parent] = Z.gen.origin[b];
        Z.weights[b] = Z.weights[parent] - ks.roots[ks.simple[s]].weight;
    }
    Z.root_action.assign(ks.roots.size(), SparseMatrix(Z.dim(), Z.dim()));
    std::vector<char> done(ks.roots.size(), 0);
    for (std::size_t s = 0; s < ks.simple.size(); ++s) {
        Z.root_action[ks.simple[s]] = Z.gen.E[s];
        done[ks.simple[s]] = 1;
        long neg = ks.root_index(Scalar(-1) * ks.roots[ks.simple[s]].weight);
        // X_{-beta} = F_s / scale, where F_s = scale * X_{-beta}
        const Vec& fvec = ks.F[s];
        const Vec& xvec = ks.roots[neg].vector;
        std::size_t p = 0;
        while (xvec[p].is_zero()) ++p;
        Scalar scale = fvec[p] / xvec[p];
        Z.root_action[neg] = (Scalar(1) / scale) * Z.gen.F[s];
        done[neg] = 1;
    }
    std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (done[k]) return;
        const KRootPath& path = ks.paths[k];
        fill(path.sub);
        SparseMatrix gen_op = ks.roots[k].positive ? Z.gen.E[path.simple] : Z.gen.F[path.simple];
        Z.root_action[k] = (Scalar(1) / path.coeff) * commutator(gen_op, Z.root_action[path.sub]);
        done[k] = 1;
    };
    for (std::size_t k = 0; k < ks.roots.size(); ++k) fill(k);
    return Z;
}

/// Z^lambda: h_m acts by lambda, m_+ kills, q_{lambda,i}(z_i) kills for i in I_n.
inline std::vector<Vec> z_lambda_space(const KType& Z, const IntVec& lambda, const RealFormData& rf) {
    const LieAlgebra& g = *rf.g;
    const KStructure& ks = *Z.ks;
    const std::size_t nhm = rf.h_m_basis.size();
    std::vector<Vec> target;
    for (const auto& y : rf.h_m_basis) target.push_back({weight_value(g, lambda, y)});
    std::vector<Vec> basis;
    for (std::size_t b = 0; b < Z.dim(); ++b) {
        bool match = true;
        for (std::size_t j = 0; j < nhm && match; ++j) {
            // the first nhm t_k basis vectors are the h_m basis
            if (!(ks.tk_basis[j] == rf.h_m_basis[j])) fail(ErrorKind::StructureViolation, "t_k does not start with the h_m basis");
            match = Z.weights[b][j] == target[j][0];
        }
        if (match) basis.push_back(unit_vec(Z.dim(), b));
    }
    if (basis.empty()) return {};
    std::vector<SparseMatrix> ops;
    for (std::size_t b : rf.delta_m_pos) ops.push_back(Z.act(g.basis_vector(b)));
    std::vector<std::function<Vec(const Vec&)>> maps;
    for (const auto& op : ops) maps.push_back([&op](const Vec& v) { return op.apply(v); });
    std::vector<std::pair<QPolynomial, SparseMatrix>> qs;
    for (std::size_t i : rf.I_n) qs.emplace_back(q_polynomial(rf, lambda, i), Z.act(z_vector(rf, i)));
    for (const auto& q : qs) maps.push_back([&q](const Vec& v) { return q.first.apply(q.second, v); });
    std::vector<Vec> sol = kernel_on_span(basis, maps);
    // automatic condition for i in I_m, asserted rather than imposed
    for (std::size_t i : rf.I_m) {
        SparseMatrix f = Z.act(rf.f_simple(i));
        for (const auto& v : sol) {
            Vec w = v;
            for (long k = 0; k <= lambda[i]; ++k) w = f.apply(w);
            if (!is_zero(w)) fail(ErrorKind::IdentityViolation, "e_{-alpha_i}^{n_i+1} does not kill Z^lambda for i in I_m");
        }
    }
    return sol;
}

// ---------------------------------------------------------------- branching reports

struct BranchEntry {
    Vec hw;  // highest t_k-weight
    std::size_t dim = 0;
    std::size_t mult = 0;

    friend bool operator==(const BranchEntry& a, const BranchEntry& b) { return a.hw == b.hw && a.dim == b.dim && a.mult == b.mult; }
};

struct BranchingReport {
    IntVec lambda;
    std::string method;
    std::size_t dim_V = 0;
    std::vector<BranchEntry> entries;
    std::size_t checksum = 0;

    std::size_t multiplicity(const Vec& hw) const {
        for (const auto& e : entries)
            if (e.hw == hw) return e.mult;
        return 0;
    }

    bool same_decomposition(const BranchingReport& o) const { return entries == o.entries && checksum == o.checksum; }
};

inline void finalize_report(BranchingReport& rep) {
    std::sort(rep.entries.begin(), rep.entries.end(), [](const BranchEntry& a, const BranchEntry& b) { return vec_less(a.hw, b.hw); });
    rep.checksum = 0;
    for (const auto& e : rep.entries) rep.checksum += e.mult * e.dim;
    if (rep.checksum != rep.dim_V)
        fail(ErrorKind::IdentityViolation, rep.method + " branching checksum " + std::to_string(rep.checksum) + " != dim V " + std::to_string(rep.dim_V));
}

/// t_k weights of V with multiplicity, through the proxies when available.
inline std::map<Vec, std::size_t, bool (*)(const Vec&, const Vec&)> tk_weights_of(const HWModule& V, const KStructure& ks);

/// Joint t_k-eigenspaces of V, block by block; vectors are in V coordinates.
inline std::vector<EigenBlock> tk_eigenspaces(const HWModule& V, const KStructure& ks) {
    std::vector<SparseMatrix> ops;
    for (const auto& t : ks.tk_basis) ops.push_back(V.act(t));
    std::vector<EigenBlock> out;
    for (const auto& blk : invariant_blocks(ops, V.dim())) {
        std::vector<SparseMatrix> local;
        for (const auto& op : ops) local.push_back(submatrix(op, blk));
        std::vector<std::vector<Scalar>> cand(ops.size());
        bool have_proxy = true;
        for (std::size_t j = 0; j < ops.size(); ++j) {
            if (!ks.tk_proxy[j]) {
                have_proxy = false;
                break;
            }
            std::set<Vec, bool (*)(const Vec&, const Vec&)> vals(vec_less);
            for (std::size_t b : blk) vals.insert(Vec{weight_value(*V.g, V.weights()[b], *ks.tk_proxy[j])});
            for (const auto& v : vals) cand[j].push_back(v[0]);
        }
        if (!have_proxy) cand.assign(ops.size(), {});
        auto eig = joint_eigenspaces(local, blk.size(), cand);
        if (!eig && have_proxy) eig = joint_eigenspaces(local, blk.size(), {});
        if (!eig) fail(ErrorKind::StructureViolation, "t_k is not diagonalizable with integral spectrum on V");
        for (auto& e : *eig) {
            EigenBlock lifted;
            lifted.eig = e.eig;
            for (const auto& v : e.basis) {
                Vec w(V.dim());
                for (std::size_t k = 0; k < blk.size(); ++k) w[blk[k]] = v[k];
                lifted.basis.push_back(std::move(w));
            }
            out.push_back(std::move(lifted));
        }
    }
    return out;
}

inline std::map<Vec, std::size_t, bool (*)(const Vec&, const Vec&)> tk_weights_of(const HWModule& V, const KStructure& ks) {
    std::map<Vec, std::size_t, bool (*)(const Vec&, const Vec&)> out(vec_less);
    bool proxies = std::all_of(ks.tk_proxy.begin(), ks.tk_proxy.end(), [](const auto& p) { return p.has_value(); });
    if (proxies) {
        for (const auto& mu : V.weights()) out[*ks.proxy_weight(mu)] += 1;
    } else {
        for (const auto& e : tk_eigenspaces(V, ks)) out[e.eig] += e.basis.size();
    }
    return out;
}

/// Branching by the multiplicity formula mult(Z) = dim Z^lambda.
inline BranchingReport branch_kostant(const HWModule& V, const KStructure& ks) {
    const RealFormData& rf = *ks.rf;
    BranchingReport rep;
    rep.lambda = V.highest_weight;
    rep.method = "kostant";
    rep.dim_V = V.dim();
    for (const auto& [w, mult] : tk_weights_of(V, ks)) {
        if (!ks.is_dominant(w)) continue;
        KType Z = build_k_type(ks, w);
        std::size_t d = z_lambda_space(Z, V.highest_weight, rf).size();
        if (d > 0) rep.entries.push_back({w, Z.dim(), d});
    }
    finalize_report(rep);
    return rep;
}

/// Highest-weight vectors of the k-types inside V, by joint eigenspace and simple-root kernels.
inline std::vector<std::pair<Vec, std::vector<Vec>>> k_highest_vectors(const HWModule& V, const KStructure& ks) {
    std::map<Vec, std::vector<Vec>, bool (*)(const Vec&, const Vec&)> by_weight(vec_less);
    for (auto& e : tk_eigenspaces(V, ks)) {
        if (!ks.is_dominant(e.eig)) continue;
        auto& dst = by_weight[e.eig];
        for (auto& v : e.basis) dst.push_back(std::move(v));
    }
    std::vector<SparseMatrix> raise;
    for (const auto& E : ks.E) raise.push_back(V.act(E));
    std::vector<std::function<Vec(const Vec&)>> maps;
    for (const auto& op : raise) maps.push_back([&op](const Vec& v) { return op.apply(v); });
    std::vector<std::pair<Vec, std::vector<Vec>>> out;
    for (auto& [w, space] : by_weight) {
        std::vector<Vec> hv = maps.empty() ? space : kernel_on_span(space, maps);
        if (!hv.empty()) out.emplace_back(w, std::move(hv));
    }
    return out;
}

/// Brute-force branching directly inside V.
inline BranchingReport branch_oracle(const HWModule& V, const KStructure& ks) {
    BranchingReport rep;
    rep.lambda = V.highest_weight;
    rep.method = "oracle";
    rep.dim_V = V.dim();
    for (const auto& [w, hv] : k_highest_vectors(V, ks)) rep.entries.push_back({w, ks.ktype_dimension(w), hv.size()});
    finalize_report(rep);
    return rep;
}

/// V^n equals the m-cyclic span of v_lambda.
inline bool n_invariants_equal_m_span(const HWModule& V, const RealFormData& rf) {
    std::vector<SparseMatrix> ops;
    for (const auto& x : rf.n_basis) ops.push_back(V.act(x));
    std::vector<const SparseMatrix*> ptrs;
    for (const auto& o : ops) ptrs.push_back(&o);
    std::vector<Vec> inv = common_kernel(ptrs, V.dim());
    std::vector<SparseMatrix> mops;
    for (const auto& x : rf.m_basis) mops.push_back(V.act(x));
    SpanBasis span;
    std::vector<Vec> cyc{V.highest_vector()};
    span.add(cyc[0]);
    for (std::size_t k = 0; k < cyc.size(); ++k)
        for (const auto& op : mops) {
            Vec w = op.apply(cyc[k]);
            if (span.add(w)) cyc.push_back(w);
        }
    return same_span(inv, cyc);
}

} // namespace branchlab
