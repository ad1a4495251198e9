#pragma once

#include "branching.hpp"
#include "ideal.hpp"
#include "realform.hpp"

#include <string>
#include <vector>

namespace branchlab {

/// Parity and lattice data of M = F_s x M_e.
struct MStructureData {
    std::size_t ell_s = 0;
    std::vector<std::size_t> I_s;
    std::size_t center_dim = 0;
    std::size_t split_rank = 0;
    std::size_t h_m_dim = 0;
    std::string summary;

    /// Sign of eps_i on V_lambda, i in I_s.
    int epsilon_sign(const IntVec& lambda, std::size_t i) const { return lambda.at(i) % 2 == 0 ? 1 : -1; }
};

inline MStructureData m_structure(const RealFormData& rf) {
    MStructureData d;
    d.I_s = rf.I_s;
    d.ell_s = rf.I_s.size();
    d.center_dim = rf.center_dim();
    d.split_rank = rf.split_rank();
    d.h_m_dim = rf.h_m_basis.size();
    d.summary = d.ell_s == 0 ? "M = M_e" : "M = Z_2^" + std::to_string(d.ell_s) + " x M_e";
    return d;
}

/// (zeta, nu): signs on I_s in increasing order, values of nu on the h_m basis.
struct FiberLabel {
    std::vector<int> zeta;
    Vec nu;

    friend bool operator==(const FiberLabel& a, const FiberLabel& b) { return a.zeta == b.zeta && a.nu == b.nu; }
    friend bool operator!=(const FiberLabel& a, const FiberLabel& b) { return !(a == b); }

    std::string to_string() const {
        std::string s = "zeta=(";
        for (std::size_t k = 0; k < zeta.size(); ++k) s += (k ? "," : "") + std::string(zeta[k] > 0 ? "+1" : "-1");
        s += ") nu=(";
        for (std::size_t k = 0; k < nu.size(); ++k) s += (k ? "," : "") + nu[k].to_string();
        return s + ")";
    }
};

inline Vec restrict_to_h_m(const IntVec& lambda, const RealFormData& rf) {
    Vec out;
    for (const auto& y : rf.h_m_basis) out.push_back(weight_value(*rf.g, lambda, y));
    return out;
}

/// lambda|h_m = 0, checked through the n_i conditions and directly on the h_m basis.
inline bool m_trivial(const IntVec& lambda, const RealFormData& rf) {
    bool by_n = true;
    for (std::size_t i : rf.I_m) by_n = by_n && lambda[i] == 0;
    for (const auto& [i, ip] : rf.pairs) by_n = by_n && lambda[i] == lambda[ip];
    bool direct = is_zero(restrict_to_h_m(lambda, rf));
    if (by_n != direct) fail(ErrorKind::IdentityViolation, "m-triviality criteria disagree");
    return by_n;
}

/// nu(h_i) in Z_+ for i in I_m and nu(h_{i_j} - h_{i_j'}) in Z for the pairs.
inline bool lambda_Me_membership(const Vec& nu, const RealFormData& rf) {
    if (nu.size() != rf.h_m_basis.size()) return false;
    const std::size_t lm = rf.I_m.size();
    for (std::size_t k = 0; k < nu.size(); ++k) {
        if (!nu[k].is_integer()) return false;
        if (k < lm && nu[k].re() < 0) return false;
    }
    return true;
}

inline FiberLabel fiber_label(const IntVec& lambda, const RealFormData& rf) {
    FiberLabel l;
    for (std::size_t i : rf.I_s) l.zeta.push_back(lambda[i] % 2 == 0 ? 1 : -1);
    l.nu = restrict_to_h_m(lambda, rf);
    return l;
}

/// Trivial k-type occurs: n_i even on I_s, zero on I_m, equal on each pair.
inline bool is_spherical(const IntVec& lambda, const RealFormData& rf) {
    for (std::size_t i : rf.I_s)
        if (lambda[i] % 2 != 0) return false;
    for (std::size_t i : rf.I_m)
        if (lambda[i] != 0) return false;
    for (const auto& [i, ip] : rf.pairs)
        if (lambda[i] != lambda[ip]) return false;
    return true;
}

/// Unique minimal element of the fiber over (zeta, nu).
inline IntVec minimal_fiber_element(const FiberLabel& label, const RealFormData& rf) {
    if (label.zeta.size() != rf.I_s.size()) fail(ErrorKind::InvalidLabel, "zeta has length " + std::to_string(label.zeta.size()) + ", expected " + std::to_string(rf.I_s.size()));
    for (int z : label.zeta)
        if (z != 1 && z != -1) fail(ErrorKind::InvalidLabel, "zeta entries must be +1 or -1");
    if (!lambda_Me_membership(label.nu, rf)) fail(ErrorKind::InvalidLabel, "nu is not the highest weight of an M_e-type");
    IntVec lambda(rf.rank(), 0);
    for (std::size_t k = 0; k < rf.I_s.size(); ++k) lambda[rf.I_s[k]] = label.zeta[k] == 1 ? 0 : 1;
    for (std::size_t k = 0; k < rf.I_m.size(); ++k) lambda[rf.I_m[k]] = label.nu[k].to_long();
    for (std::size_t k = 0; k < rf.pairs.size(); ++k) {
        long v = label.nu[rf.I_m.size() + k].to_long();
        auto [i, ip] = rf.pairs[k];
        lambda[i] = v >= 0 ? v : 0;
        lambda[ip] = v >= 0 ? 0 : -v;
    }
    // indices of I_1 outside I_s stay zero
    if (fiber_label(lambda, rf) != label) fail(ErrorKind::IdentityViolation, "minimal element does not have the requested label");
    return lambda;
}

/// Dominant weights with coefficient sum at most bound, in lexicographic order.
inline std::vector<IntVec> dominant_weights_up_to(std::size_t rank, long bound) {
    std::vector<IntVec> out;
    IntVec cur(rank, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t k, long left) {
        if (k == rank) {
            out.push_back(cur);
            return;
        }
        for (long v = 0; v <= left; ++v) {
            cur[k] = v;
            rec(k + 1, left - v);
        }
        cur[k] = 0;
    };
    rec(0, bound);
    return out;
}

inline long weight_sum(const IntVec& w) { return std::accumulate(w.begin(), w.end(), 0L); }

struct FiberReport {
    FiberLabel label;
    IntVec minimal;
    std::vector<IntVec> members;
    bool equals_translate = false;  // members = minimal + spherical weights within the bound
    bool minimal_ok = false;        // member - minimal is dominant for every member
};

inline FiberReport fiber_enumerate(const FiberLabel& label, long bound, const RealFormData& rf) {
    if (bound < 0) fail(ErrorKind::InvalidArgument, "bound must be nonnegative");
    FiberReport rep;
    rep.label = label;
    rep.minimal = minimal_fiber_element(label, rf);
    std::vector<IntVec> translate;
    for (const auto& lam : dominant_weights_up_to(rf.rank(), bound)) {
        if (fiber_label(lam, rf) == label) rep.members.push_back(lam);
        IntVec shifted = RootSystem::add(rep.minimal, lam);
        if (is_spherical(lam, rf) && weight_sum(shifted) <= bound) translate.push_back(shifted);
    }
    std::sort(translate.begin(), translate.end());
    std::vector<IntVec> sorted = rep.members;
    std::sort(sorted.begin(), sorted.end());
    rep.equals_translate = sorted == translate;
    rep.minimal_ok = std::all_of(rep.members.begin(), rep.members.end(),
                                 [&](const IntVec& m) { return RootSystem::is_dominant(RootSystem::sub(m, rep.minimal)); });
    if (!rep.equals_translate) fail(ErrorKind::IdentityViolation, "fiber " + label.to_string() + " is not the spherical translate of its minimal element");
    if (!rep.minimal_ok) fail(ErrorKind::IdentityViolation, "fiber " + label.to_string() + " has a member below its minimal element");
    return rep;
}

/// Every multiplicity of `lower` is at most the matching multiplicity of `upper`.
inline bool spectrum_dominates(const BranchingReport& upper, const BranchingReport& lower) {
    for (const auto& e : lower.entries)
        if (upper.multiplicity(e.hw) < e.mult) return false;
    return true;
}

} // namespace branchlab
