#pragma once

#include "branching.hpp"
#include "hwmodule.hpp"
#include "ideal.hpp"
#include "mstruct.hpp"
#include "realform.hpp"

#include <string>
#include <vector>

namespace branchlab {

/// lambda^c = -kappa lambda.
inline IntVec dual_weight(const RootSystem& rs, const IntVec& lambda) {
    IntVec w = rs.longest_element_action(lambda);
    for (auto& x : w) x = -x;
    return w;
}

/// Longest element of the Weyl group of m, as a word in the simple reflections s_i, i in I_m.
inline std::vector<std::size_t> longest_word_m(const RealFormData& rf) {
    const RootSystem& rs = rf.g->root_system();
    IntVec probe(rf.rank(), 0);
    for (std::size_t i : rf.I_m) probe[i] = 1;
    std::vector<std::size_t> word;
    while (true) {
        auto it = std::find_if(rf.I_m.begin(), rf.I_m.end(), [&](std::size_t i) { return probe[i] > 0; });
        if (it == rf.I_m.end()) break;
        probe = rs.reflect_weight(probe, *it);
        word.push_back(*it);
    }
    return word;
}

inline IntVec kappa_m(const RealFormData& rf, IntVec w) {
    const RootSystem& rs = rf.g->root_system();
    for (std::size_t i : longest_word_m(rf)) w = rs.reflect_weight(w, i);
    return w;
}

struct PrincipalSeriesParams {
    IntVec lambda;
    IntVec lambda_c;
    FiberLabel delta;     // (zeta, nu)
    Vec nu_c;             // lambda^c on the h_m basis
    Vec xi;               // kappa lambda on the a basis
    Vec minus_lambda_c_a; // -lambda^c on the a basis
    bool xi_consistent = false;
};

inline Vec restrict_to_a(const IntVec& w, const RealFormData& rf) {
    Vec out;
    for (const auto& x : rf.a_basis) out.push_back(weight_value(*rf.g, w, x));
    return out;
}

inline PrincipalSeriesParams ps_params(const IntVec& lambda, const RealFormData& rf) {
    const RootSystem& rs = rf.g->root_system();
    PrincipalSeriesParams p;
    p.lambda = lambda;
    p.lambda_c = dual_weight(rs, lambda);
    FiberLabel lc = fiber_label(p.lambda_c, rf);
    p.nu_c = lc.nu;
    // nu = -kappa_m nu^c, read off on h_m from the full weight
    IntVec nu_weight = kappa_m(rf, p.lambda_c);
    for (auto& x : nu_weight) x = -x;
    p.delta.zeta = lc.zeta;
    p.delta.nu = restrict_to_h_m(nu_weight, rf);
    p.xi = restrict_to_a(rs.longest_element_action(lambda), rf);
    p.minus_lambda_c_a = Scalar(-1) * restrict_to_a(p.lambda_c, rf);
    p.xi_consistent = p.xi == p.minus_lambda_c_a;
    return p;
}

struct CoinvariantCheck {
    std::size_t dim_coinvariants = 0;  // dim V / nV
    std::size_t dim_m_cyclic_dual = 0; // dim U(m) v_{lambda^c}
    bool a_acts_by_xi = false;
};

/// V/nV: a acts by xi, and its dimension matches U(m) v_{lambda^c}.
inline CoinvariantCheck check_coinvariants(const HWModule& V, const HWModule& Vc, const PrincipalSeriesParams& p, const RealFormData& rf) {
    CoinvariantCheck c;
    SpanBasis nV;
    std::vector<SparseMatrix> nops;
    for (const auto& x : rf.n_basis) nops.push_back(V.act(x));
    for (std::size_t b = 0; b < V.dim(); ++b) {
        Vec u = unit_vec(V.dim(), b);
        for (const auto& op : nops) nV.add(op.apply(u));
    }
    c.dim_coinvariants = V.dim() - nV.size();
    c.a_acts_by_xi = true;
    for (std::size_t j = 0; j < rf.a_basis.size(); ++j) {
        SparseMatrix A = V.act(rf.a_basis[j]);
        for (std::size_t b = 0; b < V.dim() && c.a_acts_by_xi; ++b) {
            Vec u = unit_vec(V.dim(), b);
            if (!nV.contains(A.apply(u) - p.xi[j] * u)) c.a_acts_by_xi = false;
        }
    }
    std::vector<SparseMatrix> mops;
    for (const auto& x : rf.m_basis) mops.push_back(Vc.act(x));
    SpanBasis cyc;
    std::vector<Vec> queue{Vc.highest_vector()};
    cyc.add(queue[0]);
    for (std::size_t k = 0; k < queue.size(); ++k)
        for (const auto& op : mops) {
            Vec w = op.apply(queue[k]);
            if (cyc.add(w)) queue.push_back(w);
        }
    c.dim_m_cyclic_dual = cyc.size();
    return c;
}

struct BorelWeilReport {
    IntVec lambda;
    IntVec lambda_c;
    AnnihilatorReport annihilation;  // on v_{lambda^c}
    CoinvariantCheck coinvariants;
    bool ok = false;
};

inline BorelWeilReport verify_borel_weil_annihilation(const IntVec& lambda, const RealFormData& rf, std::size_t cap = default_dim_cap()) {
    BorelWeilReport rep;
    rep.lambda = lambda;
    PrincipalSeriesParams p = ps_params(lambda, rf);
    rep.lambda_c = p.lambda_c;
    HWModule Vc = build_irrep(rf.g, p.lambda_c, cap);
    rep.annihilation = verify_annihilator(Vc, rf, false);
    HWModule V = build_irrep(rf.g, lambda, cap);
    rep.coinvariants = check_coinvariants(V, Vc, p, rf);
    rep.ok = rep.annihilation.ok && p.xi_consistent && rep.coinvariants.a_acts_by_xi &&
             rep.coinvariants.dim_coinvariants == rep.coinvariants.dim_m_cyclic_dual;
    if (!rep.annihilation.ok) {
        for (const auto& e : rep.annihilation.entries)
            if (!e.annihilates) fail(ErrorKind::IdentityViolation, "dual highest vector not annihilated by " + e.label);
    }
    if (!p.xi_consistent) fail(ErrorKind::IdentityViolation, "kappa lambda|a differs from -lambda^c|a");
    if (!rep.coinvariants.a_acts_by_xi) fail(ErrorKind::IdentityViolation, "a does not act on V/nV by xi");
    if (rep.coinvariants.dim_coinvariants != rep.coinvariants.dim_m_cyclic_dual)
        fail(ErrorKind::IdentityViolation, "dim V/nV differs from dim U(m) v_{lambda^c}");
    return rep;
}

/// Integer eigenvalues of a diagonalizable operator with integral spectrum; nullopt otherwise.
inline std::optional<std::vector<long>> integral_spectrum(const SparseMatrix& T) {
    auto eig = joint_eigenspaces({T}, T.rows(), {});
    if (!eig) return std::nullopt;
    std::vector<long> out;
    for (const auto& e : *eig)
        for (std::size_t k = 0; k < e.basis.size(); ++k) out.push_back(e.eig[0].to_long());
    return out;
}

/// Sum of the z_i eigenspaces on a k-type whose eigenvalue parity gives the sign `sign` of exp(pi i z_i).
/// Throws unless z_i is diagonalizable with integral spectrum.
inline std::vector<Vec> eps_eigenspace(const KType& Z, const RealFormData& rf, std::size_t i, int sign) {
    auto eig = joint_eigenspaces({Z.act(z_vector(rf, i))}, Z.dim(), {});
    if (!eig) fail(ErrorKind::IdentityViolation, "z_" + std::to_string(i + 1) + " is not diagonalizable with integral spectrum on a k-type");
    std::vector<Vec> out;
    for (const auto& e : *eig) {
        int s = (((e.eig[0].to_long() % 2) + 2) % 2) == 0 ? 1 : -1;
        if (s == sign) out.insert(out.end(), e.basis.begin(), e.basis.end());
    }
    return out;
}

struct DeltaComponent {
    std::size_t highest_vectors = 0;  // m_+-highest vectors of h_m-weight nu with eps-signs zeta
    std::size_t primary_dim = 0;      // dimension of the m-span of those vectors
};

/// delta-primary part of a k-type: F_s through exp(pi i z_i), M_e through m_+-highest vectors of weight nu.
inline DeltaComponent delta_component(const KType& Z, const FiberLabel& delta, const RealFormData& rf) {
    DeltaComponent d;
    std::vector<Vec> space;
    for (std::size_t b = 0; b < Z.dim(); ++b) space.push_back(unit_vec(Z.dim(), b));
    for (std::size_t k = 0; k < rf.I_s.size() && !space.empty(); ++k)
        space = intersect_spans(space, eps_eigenspace(Z, rf, rf.I_s[k], delta.zeta[k]));
    if (space.empty()) return d;
    std::vector<SparseMatrix> ops;
    for (std::size_t j = 0; j < rf.h_m_basis.size(); ++j) ops.push_back(Z.act(rf.h_m_basis[j]) - delta.nu[j] * SparseMatrix::identity(Z.dim()));
    for (std::size_t b : rf.delta_m_pos) ops.push_back(Z.act(rf.g->basis_vector(b)));
    std::vector<std::function<Vec(const Vec&)>> maps;
    for (const auto& op : ops) maps.push_back([&op](const Vec& v) { return op.apply(v); });
    std::vector<Vec> hv = maps.empty() ? space : kernel_on_span(space, maps);
    d.highest_vectors = hv.size();
    std::vector<SparseMatrix> mops;
    for (const auto& x : rf.m_basis) mops.push_back(Z.act(x));
    SpanBasis span;
    std::vector<Vec> queue;
    for (const auto& v : hv)
        if (span.add(v)) queue.push_back(v);
    for (std::size_t k = 0; k < queue.size(); ++k)
        for (const auto& op : mops) {
            Vec w = op.apply(queue[k]);
            if (span.add(w)) queue.push_back(w);
        }
    d.primary_dim = span.size();
    return d;
}

struct KTypeBoundEntry {
    Vec hw;
    std::size_t dim = 0;
    std::size_t mult = 0;
    DeltaComponent delta;
    bool ok = false;
};

struct KTypeBoundReport {
    IntVec lambda;
    FiberLabel delta;
    std::vector<KTypeBoundEntry> entries;
    bool ok = true;
};

/// mult_{V_lambda}(Z) <= dim Z[delta] for every k-type of V_lambda.
inline KTypeBoundReport ps_ktype_bound(const HWModule& V, const KStructure& ks) {
    const RealFormData& rf = *ks.rf;
    KTypeBoundReport rep;
    rep.lambda = V.highest_weight;
    rep.delta = ps_params(V.highest_weight, rf).delta;
    BranchingReport br = branch_kostant(V, ks);
    for (const auto& e : br.entries) {
        KType Z = build_k_type(ks, e.hw);
        KTypeBoundEntry t{e.hw, e.dim, e.mult, delta_component(Z, rep.delta, rf), false};
        t.ok = t.mult <= t.delta.highest_vectors && t.delta.highest_vectors <= t.delta.primary_dim;
        if (!t.ok) rep.ok = false;
        rep.entries.push_back(std::move(t));
    }
    if (!rep.ok) fail(ErrorKind::IdentityViolation, "k-type multiplicity exceeds dim Z[delta]");
    return rep;
}

/// exp(pi i z_i) from the spectral decomposition of z_i on V equals diag((-1)^{mu(h_i)}) on the weight basis.
inline bool z_exponential_matches_parity(const HWModule& V, const RealFormData& rf, std::size_t i) {
    SparseMatrix Zi = V.act(z_vector(rf, i));
    auto eig = joint_eigenspaces({Zi}, V.dim(), {});
    if (!eig) return false;
    for (const auto& e : *eig) {
        if (!e.eig[0].is_integer()) return false;
        long par = ((e.eig[0].to_long() % 2) + 2) % 2;
        for (const auto& v : e.basis)
            for (std::size_t b = 0; b < V.dim(); ++b)
                if (!v[b].is_zero() && ((V.weights()[b][i] % 2) + 2) % 2 != par) return false;
    }
    return true;
}

/// For i in I_s, on each k-type of V realized as the k-span of a k-highest vector: z_i is diagonalizable with
/// integral spectrum equal to its spectrum on the abstract k-type, and an eigenvalue m occurs only on vectors
/// with eps_i-sign (-1)^m.
inline bool k_type_parities_match(const HWModule& V, const KStructure& ks) {
    const RealFormData& rf = *ks.rf;
    if (rf.I_s.empty()) return true;
    std::vector<SparseMatrix> kops;
    for (const auto& x : ks.k_basis) kops.push_back(V.act(x));
    for (const auto& [w, hv] : k_highest_vectors(V, ks)) {
        KType Z = build_k_type(ks, w);
        for (const auto& v : hv) {
            SpanBasis span;
            std::vector<Vec> queue{v};
            span.add(v);
            for (std::size_t k = 0; k < queue.size(); ++k)
                for (const auto& op : kops) {
                    Vec u = op.apply(queue[k]);
                    if (span.add(u)) queue.push_back(u);
                }
            if (queue.size() != Z.dim()) return false;
            for (std::size_t i : rf.I_s) {
                SparseMatrix zi = V.act(z_vector(rf, i));
                std::map<long, std::size_t> in_V, in_Z;
                for (const auto& lam : integer_scan(zi)) {
                    std::vector<std::function<Vec(const Vec&)>> maps{[&zi, lam](const Vec& u) { return zi.apply(u) - lam * u; }};
                    auto ker = kernel_on_span(queue, maps);
                    if (ker.empty()) continue;
                    long m = lam.to_long();
                    in_V[m] = ker.size();
                    for (const auto& u : ker)
                        for (std::size_t b = 0; b < V.dim(); ++b)
                            if (!u[b].is_zero() && ((V.weights()[b][i] - m) % 2 + 2) % 2 != 0) return false;
                }
                auto spec = integral_spectrum(Z.act(z_vector(rf, i)));
                if (!spec) return false;
                for (long m : *spec) in_Z[m] += 1;
                if (in_V != in_Z) return false;
            }
        }
    }
    return true;
}

} // namespace branchlab
