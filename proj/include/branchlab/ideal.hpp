#pragma once

#include "hwmodule.hpp"
#include "realform.hpp"

#include <string>
#include <vector>

namespace branchlab {

/// Monic polynomial q_{lambda,i}; roots n - 2j for semisimple indices, t^{n+1} otherwise.
struct QPolynomial {
    std::size_t index = 0;
    long n = 0;
    bool semisimple = false;

    long degree() const { return n + 1; }

    std::vector<long> roots() const {
        std::vector<long> r;
        for (long j = 0; j <= n; ++j) r.push_back(semisimple ? n - 2 * j : 0);
        return r;
    }

    Scalar evaluate(const Scalar& t) const {
        Scalar s(1);
        for (long r : roots()) s = s * (t - Scalar(r));
        return s;
    }

    /// Coefficients in ascending powers.
    std::vector<Scalar> coefficients() const {
        std::vector<Scalar> c{Scalar(1)};
        for (long r : roots()) {
            std::vector<Scalar> next(c.size() + 1);
            for (std::size_t k = 0; k < c.size(); ++k) {
                next[k + 1] += c[k];
                next[k] -= Scalar(r) * c[k];
            }
            c = std::move(next);
        }
        return c;
    }

    /// q(Z) v, applied factor by factor; `skip` drops one factor (index into roots()).
    Vec apply(const SparseMatrix& Z, Vec v, long skip = -1) const {
        auto r = roots();
        for (std::size_t k = 0; k < r.size(); ++k) {
            if (static_cast<long>(k) == skip) continue;
            Vec zv = Z.apply(v);
            if (r[k] != 0) zv = zv - Scalar(r[k]) * v;
            v = std::move(zv);
        }
        return v;
    }

    std::string to_string() const {
        const std::vector<Scalar> coeffs = coefficients();
        std::string s;
        for (std::size_t k = coeffs.size(); k-- > 0;) {
            if (coeffs[k].is_zero()) continue;
            std::string c = coeffs[k].to_string();
            bool neg = !c.empty() && c[0] == '-' && coeffs[k].is_real();
            if (!s.empty()) s += neg ? " - " : " + ";
            else if (neg) s += "-";
            if (neg) c = c.substr(1);
            std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
            if (mono.empty()) s += c;
            else if (c == "1") s += mono;
            else s += c + mono;
        }
        return s.empty() ? "0" : s;
    }
};

inline QPolynomial q_polynomial(long n, bool semisimple, std::size_t index = 0) {
    QPolynomial q;
    q.index = index;
    q.n = n;
    q.semisimple = semisimple;
    return q;
}

inline QPolynomial q_polynomial(const RealFormData& rf, const IntVec& lambda, std::size_t i) {
    return q_polynomial(lambda.at(i), rf.in(rf.I_s, i), i);
}

/// z_i = e'_{-alpha_i} + theta(e'_{-alpha_i}) with the I_s normalization applied.
inline Vec z_vector(const RealFormData& rf, std::size_t i) {
    if (!rf.in(rf.I_n, i)) fail(ErrorKind::InvalidArgument, "z_vector is defined for i in I_n only");
    Vec f = rf.normalizer[i] * rf.f_simple(i);
    return f + rf.apply_theta(f);
}

struct ZVectorCheck {
    std::size_t index;
    bool fixed_by_theta;
    bool norm_ok;         // I_s: (z, z) = (h, h)
    bool bracket_zero;    // I_nil: [e_{-alpha}, theta e_{-alpha}] = 0
    bool nilpotent;       // I_nil: ad z nilpotent
};

inline ZVectorCheck check_z_vector(const RealFormData& rf, std::size_t i) {
    const LieAlgebra& g = *rf.g;
    Vec z = z_vector(rf, i);
    ZVectorCheck c{i, rf.apply_theta(z) == z, true, true, true};
    if (rf.in(rf.I_s, i)) {
        c.norm_ok = g.killing(z, z) == g.killing(rf.h(i), rf.h(i));
        if (!c.norm_ok) fail(ErrorKind::NormalizationFailure, "(z_i, z_i) != (h_i, h_i) at i = " + std::to_string(i + 1));
    } else {
        Vec f = rf.f_simple(i);
        c.bracket_zero = is_zero(g.bracket(f, rf.apply_theta(f)));
        SparseMatrix ad = g.ad(z), p = ad;
        for (std::size_t k = 1; k < g.dim(); ++k) p = p * ad;
        c.nilpotent = p.is_zero();
    }
    return c;
}

enum class GeneratorKind { LoweringPower, CartanShift, MPlus, QOfZ };

/// One member of G_lambda, described symbolically.
struct Generator {
    GeneratorKind kind;
    std::size_t index;  // simple index, or h_m basis index for CartanShift
    long power = 0;
    Scalar shift;       // lambda(y_j) for CartanShift
    QPolynomial q;      // for QOfZ
    std::string label;
};

struct GeneratorSet {
    IntVec lambda;
    std::vector<Generator> m_part;
    std::vector<Generator> n_star_part;
};

inline Scalar weight_value(const LieAlgebra& g, const IntVec& lambda, const Vec& h) {
    Scalar s;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        const Scalar& c = h[g.cartan_index(i)];
        if (!c.is_zero()) s += c * Scalar(lambda[i]);
    }
    return s;
}

inline GeneratorSet generator_set(const RealFormData& rf, const IntVec& lambda) {
    const LieAlgebra& g = *rf.g;
    GeneratorSet G;
    G.lambda = lambda;
    for (std::size_t i : rf.I_m)
        G.m_part.push_back({GeneratorKind::LoweringPower, i, lambda[i] + 1, Scalar(), {},
                            "e_{-alpha_" + std::to_string(i + 1) + "}^" + std::to_string(lambda[i] + 1)});
    for (std::size_t j = 0; j < rf.h_m_basis.size(); ++j) {
        Scalar s = weight_value(g, lambda, rf.h_m_basis[j]);
        G.m_part.push_back({GeneratorKind::CartanShift, j, 0, s, {}, "y_" + std::to_string(j + 1) + " - (" + s.to_string() + ")"});
    }
    for (std::size_t i : rf.I_m)
        G.m_part.push_back({GeneratorKind::MPlus, i, 1, Scalar(), {}, "e_{alpha_" + std::to_string(i + 1) + "}"});
    for (std::size_t i : rf.I_n) {
        QPolynomial q = q_polynomial(rf, lambda, i);
        G.n_star_part.push_back({GeneratorKind::QOfZ, i, 0, Scalar(), q, "q_" + std::to_string(i + 1) + "(z_" + std::to_string(i + 1) + ") = " + q.to_string()});
    }
    return G;
}

/// Applies a generator, given the operators it needs on some k-module.
template <class ActFn>
Vec apply_generator(const RealFormData& rf, const Generator& gen, const ActFn& act, Vec v) {
    switch (gen.kind) {
    case GeneratorKind::LoweringPower: {
        SparseMatrix f = act(rf.f_simple(gen.index));
        for (long k = 0; k < gen.power; ++k) v = f.apply(v);
        return v;
    }
    case GeneratorKind::CartanShift: return act(rf.h_m_basis[gen.index]).apply(v) - gen.shift * v;
    case GeneratorKind::MPlus: return act(rf.e_simple(gen.index)).apply(v);
    case GeneratorKind::QOfZ: return gen.q.apply(act(z_vector(rf, gen.index)), v);
    }
    return v;
}

struct AnnihilatorEntry {
    std::string label;
    bool annihilates;
};

struct ProbeEntry {
    std::string label;
    bool nonzero;
};

struct AnnihilatorReport {
    IntVec lambda;
    std::vector<AnnihilatorEntry> entries;
    std::vector<ProbeEntry> probes;  // diagnostics only
    bool ok = true;
};

/// `with_probes` adds the nonvanishing diagnostics, which cost O(n_i^2) operator applications.
inline AnnihilatorReport verify_annihilator(const HWModule& V, const RealFormData& rf, bool throw_on_failure = true, bool with_probes = true) {
    AnnihilatorReport rep;
    rep.lambda = V.highest_weight;
    GeneratorSet G = generator_set(rf, V.highest_weight);
    auto act = [&](const Vec& x) { return V.act(x); };
    const Vec v = V.highest_vector();
    for (const auto* part : {&G.m_part, &G.n_star_part})
        for (const auto& gen : *part) {
            bool ok = is_zero(apply_generator(rf, gen, act, v));
            rep.entries.push_back({gen.label, ok});
            if (!ok) rep.ok = false;
        }
    for (const auto& gen : G.n_star_part) {
        if (!with_probes) break;
        std::size_t i = gen.index;
        SparseMatrix Z = V.act(z_vector(rf, i));
        if (rf.in(rf.I_s, i)) {
            auto roots = gen.q.roots();
            for (std::size_t k = 0; k < roots.size(); ++k)
                rep.probes.push_back({"q_" + std::to_string(i + 1) + "/(t - " + std::to_string(roots[k]) + ")",
                                      !is_zero(gen.q.apply(Z, v, static_cast<long>(k)))});
        } else if (gen.q.n >= 1) {
            Vec w = v;
            for (long k = 0; k < gen.q.n; ++k) w = Z.apply(w);
            rep.probes.push_back({"z_" + std::to_string(i + 1) + "^" + std::to_string(gen.q.n), !is_zero(w)});
        }
    }
    if (!rep.ok && throw_on_failure) {
        for (const auto& e : rep.entries)
            if (!e.annihilates) fail(ErrorKind::IdentityViolation, "annihilator generator " + e.label + " does not annihilate v_lambda");
    }
    return rep;
}

} // namespace branchlab
