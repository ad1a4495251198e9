#pragma once

#include "chevalley.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "rootsys.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace branchlab {

/// theta(e_{alpha_i}) = signs_plus[i] e_{T alpha_i}, theta(e_{-alpha_i}) = signs_minus[i] e_{-T alpha_i}.
struct ThetaSpec {
    std::string name;
    CartanMatrix cartan;
    IntMatrix root_map;  // column j holds T(alpha_j) in simple-root coordinates
    std::vector<Scalar> signs_plus;
    std::vector<Scalar> signs_minus;

    IntVec apply(const IntVec& beta) const {
        IntVec out(beta.size(), 0);
        for (std::size_t i = 0; i < beta.size(); ++i)
            for (std::size_t j = 0; j < beta.size(); ++j) out[i] += root_map[i][j] * beta[j];
        return out;
    }
};

inline std::vector<std::string> preset_names() { return {"sl2R", "sl3R", "sp4R", "so32R", "g2split", "su21", "su31"}; }

/// Shipped real forms; aliases follow the split(X) spelling.
inline ThetaSpec theta_preset(const std::string& name) {
    auto split = [](const std::string& label, const std::string& type) {
        ThetaSpec s;
        s.name = label;
        s.cartan = CartanMatrix::of_type(type);
        std::size_t l = s.cartan.rank();
        s.root_map.assign(l, IntVec(l, 0));
        for (std::size_t i = 0; i < l; ++i) s.root_map[i][i] = -1;
        s.signs_plus.assign(l, Scalar(-1));
        s.signs_minus.assign(l, Scalar(-1));
        return s;
    };
    if (name == "sl2R" || name == "split(A1)") return split("sl2R", "A1");
    if (name == "sl3R" || name == "split(A2)") return split("sl3R", "A2");
    if (name == "sp4R" || name == "split(C2)") return split("sp4R", "C2");
    if (name == "so32R" || name == "split(B2)") return split("so32R", "B2");
    if (name == "g2split" || name == "split(G2)") return split("g2split", "G2");
    if (name == "su21") {
        ThetaSpec s;
        s.name = "su21";
        s.cartan = CartanMatrix::of_type("A2");
        s.root_map = {{0, -1}, {-1, 0}};
        s.signs_plus = {Scalar(1), Scalar(1)};
        s.signs_minus = {Scalar(1), Scalar(1)};
        return s;
    }
    if (name == "su31") {
        ThetaSpec s;
        s.name = "su31";
        s.cartan = CartanMatrix::of_type("A3");
        s.root_map = {{0, 0, -1}, {-1, 1, -1}, {-1, 0, 0}};
        s.signs_plus = {Scalar(1), Scalar(1), Scalar(1)};
        s.signs_minus = {Scalar(1), Scalar(1), Scalar(1)};
        return s;
    }
    fail(ErrorKind::ParseError, "unknown real-form preset " + name);
}

enum class SimpleClass { M, S, Nil };

using RVec = std::vector<Rational>;

inline std::string rvec_string(const RVec& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].get_str();
    return s + ")";
}

struct RestrictedRoot {
    RVec coords;                       // (phi - T phi) / 2 in simple-root coordinates
    std::vector<std::size_t> preimage; // g basis indices of e_phi with p(phi) = gamma
    bool positive = false;
    bool simple = false;
};

struct SigmaGamma {
    std::vector<std::size_t> basis;  // g basis indices
    std::vector<Mat> m_action;       // one matrix per m basis element, columns = images
    std::vector<Vec> hm_weights;     // phi evaluated on the h_m basis
};

struct IdentityCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Involution theta with its Iwasawa data, restricted roots and simple-root classification.
struct RealFormData {
    std::shared_ptr<const LieAlgebra> g;
    ThetaSpec spec;
    SparseMatrix theta;  // columns = images of basis elements
    Mat S;               // theta on h in h_1..h_l coordinates (columns)
    Vec w;               // regular element of a, as an element of g

    std::vector<std::size_t> delta_m;      // basis indices of e_phi, phi in Delta(m)
    std::vector<std::size_t> delta_m_pos;  // phi in Delta(m_+)
    std::vector<std::size_t> delta_n;      // positive roots outside Delta(m), as basis indices

    std::vector<Vec> k_basis, m_basis, a_basis, n_basis, n_minus_basis, n_star_basis, h_m_basis, center_basis;

    std::vector<std::size_t> I_m, I_n, I_s, I_nil, I_1, I_2;
    std::vector<SimpleClass> simple_class;
    std::vector<Scalar> normalizer;  // c_i with e'_{-alpha_i} = c_i e_{-alpha_i}, i in I_s; 1 otherwise

    std::vector<RestrictedRoot> restricted;        // all restricted roots
    std::vector<std::size_t> simple_restricted;    // indices into restricted, ordered as beta_1..beta_lo
    std::vector<std::vector<std::size_t>> low;     // Delta_low(beta_j) as simple indices
    std::vector<std::size_t> J_1, J_2;             // 0-based j
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (i_j, i_j') for j in J_2

    std::size_t split_rank() const { return a_basis.size(); }
    std::size_t center_dim() const { return center_basis.size(); }
    std::size_t rank() const { return g->rank(); }

    Vec apply_theta(const Vec& x) const { return theta.apply(x); }

    Vec h(std::size_t i) const { return g->basis_vector(g->cartan_index(i)); }
    Vec e_simple(std::size_t i) const { return g->basis_vector(g->root_index(g->root_system().simple_root(i))); }
    Vec f_simple(std::size_t i) const {
        return g->basis_vector(g->root_index(RootSystem::negate(g->root_system().simple_root(i))));
    }

    bool in(const std::vector<std::size_t>& set, std::size_t i) const { return std::find(set.begin(), set.end(), i) != set.end(); }

    RVec project(const IntVec& phi) const {
        IntVec t = spec.apply(phi);
        RVec r;
        for (std::size_t k = 0; k < phi.size(); ++k) {
            Rational q(phi[k] - t[k], 2);
            q.canonicalize();
            r.push_back(q);
        }
        return r;
    }

    long restricted_index(const RVec& gamma) const {
        for (std::size_t k = 0; k < restricted.size(); ++k)
            if (restricted[k].coords == gamma) return static_cast<long>(k);
        return -1;
    }
};

namespace detail {

inline Vec scaled_root_vector(const LieAlgebra& g, const IntVec& phi, const Scalar& c) {
    long idx = g.root_index(phi);
    if (idx < 0) fail(ErrorKind::InconsistentSigns, "root map sends a simple root outside the root system");
    Vec v(g.dim());
    v[idx] = c;
    return v;
}

inline std::vector<Vec> to_g_vectors(const LieAlgebra& g, const std::vector<Vec>& hcoords) {
    std::vector<Vec> out;
    for (const auto& c : hcoords) out.push_back(g.cartan_element(c));
    return out;
}

}  // namespace detail

inline RealFormData build_real_form(std::shared_ptr<const LieAlgebra> gp, const ThetaSpec& spec) {
    const LieAlgebra& g = *gp;
    const RootSystem& rs = g.root_system();
    const std::size_t l = rs.rank(), P = rs.num_positive(), n = g.dim();
    if (!(spec.cartan == rs.cartan())) fail(ErrorKind::InvalidArgument, "theta spec and algebra have different Cartan matrices");
    if (spec.root_map.size() != l || spec.signs_plus.size() != l || spec.signs_minus.size() != l)
        fail(ErrorKind::ParseError, "theta spec has the wrong size");

    RealFormData rf;
    rf.g = gp;
    rf.spec = spec;

    // T must be an involution preserving the root system
    for (std::size_t k = 0; k < P; ++k) {
        const IntVec& phi = rs.positive_roots()[k];
        if (spec.apply(spec.apply(phi)) != phi) fail(ErrorKind::NotInvolution, "root map does not square to the identity");
        if (!rs.is_root(spec.apply(phi))) fail(ErrorKind::NotInvolution, "root map does not preserve the root system");
    }

    // extend theta along the Chevalley paths
    std::vector<Vec> img(n);
    for (std::size_t i = 0; i < l; ++i) {
        IntVec t = spec.apply(rs.simple_root(i));
        img[g.root_index(rs.simple_root(i))] = detail::scaled_root_vector(g, t, spec.signs_plus[i]);
        img[g.root_index(RootSystem::negate(rs.simple_root(i)))] = detail::scaled_root_vector(g, RootSystem::negate(t), spec.signs_minus[i]);
    }
    for (std::size_t k = 0; k < P; ++k) {
        const IntVec& phi = rs.positive_roots()[k];
        if (RootSystem::height(phi) == 1) continue;
        const RootPath& path = g.paths()[k];
        Scalar d = Scalar(1) / Scalar(path.p + 1);
        std::size_t ei = g.root_index(rs.simple_root(path.simple));
        std::size_t fi = g.root_index(RootSystem::negate(rs.simple_root(path.simple)));
        img[g.positive_index(k)] = d * g.bracket(img[ei], img[g.positive_index(path.sub)]);
        img[g.negative_index(k)] = d * g.bracket(img[g.negative_index(path.sub)], img[fi]);
    }
    for (std::size_t i = 0; i < l; ++i) {
        std::size_t ei = g.root_index(rs.simple_root(i));
        std::size_t fi = g.root_index(RootSystem::negate(rs.simple_root(i)));
        img[g.cartan_index(i)] = g.bracket(img[ei], img[fi]);
    }
    std::vector<SparseVec> cols;
    for (const auto& v : img) cols.push_back(to_sparse(v));
    rf.theta = SparseMatrix::from_columns(n, cols);

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            Vec lhs = rf.theta.apply(to_dense(g.bracket_basis(a, b), n));
            if (lhs != g.bracket(img[a], img[b]))
                fail(ErrorKind::InconsistentSigns, "extension of theta is not a homomorphism at (" + g.basis_label(a) + ", " + g.basis_label(b) + ")");
        }
    if (!(rf.theta * rf.theta == SparseMatrix::identity(n))) fail(ErrorKind::NotInvolution, "theta does not square to the identity");

    // theta on h
    rf.S.assign(l, Vec(l));
    for (std::size_t i = 0; i < l; ++i) {
        Vec c = g.cartan_coords(img[g.cartan_index(i)]);
        for (std::size_t r = 0; r < l; ++r) rf.S[r][i] = c[r];
    }
    Mat s_plus = rf.S, s_minus = rf.S;
    for (std::size_t i = 0; i < l; ++i) {
        s_plus[i][i] += 1;
        s_minus[i][i] -= 1;
    }
    rf.a_basis = detail::to_g_vectors(g, nullspace_rows(s_plus, l));
    std::vector<Vec> hm_raw = detail::to_g_vectors(g, nullspace_rows(s_minus, l));

    // roots of m and n
    for (std::size_t b = 0; b < n; ++b) {
        if (g.is_cartan(b)) continue;
        IntVec phi = g.root_of(b);
        if (spec.apply(phi) == phi) {
            rf.delta_m.push_back(b);
            if (g.is_positive(b)) rf.delta_m_pos.push_back(b);
        } else if (g.is_positive(b)) {
            rf.delta_n.push_back(b);
        }
    }

    // regular element w = (h_rho - theta h_rho) / 2, h_rho with alpha_i(h_rho) = 1
    Vec c = solve(transpose(int_to_mat(rs.cartan().entries())), Vec(l, Scalar(1)));
    Vec h_rho = g.cartan_element(c);
    rf.w = Scalar(Rational(1, 2)) * (h_rho - rf.theta.apply(h_rho));
    for (std::size_t b = 0; b < n; ++b) {
        if (g.is_cartan(b)) continue;
        Scalar val = g.root_value(g.root_of(b), g.cartan_coords(rf.w));
        bool in_n = std::find(rf.delta_n.begin(), rf.delta_n.end(), b) != rf.delta_n.end();
        if (in_n != (val.re() > 0)) fail(ErrorKind::StructureViolation, "n is not the positive part for the regular element w");
    }
    for (std::size_t b : rf.delta_n) {
        IntVec t = spec.apply(g.root_of(b));
        if (g.is_positive(g.root_index(t))) fail(ErrorKind::StructureViolation, "theta does not map n into the negative roots");
    }

    // maximally split: centralizer of a in p equals a
    {
        SparseMatrix tp = rf.theta + SparseMatrix::identity(n);
        std::vector<const SparseMatrix*> ops{&tp};
        std::vector<Vec> p_basis = common_kernel(ops, n);
        std::vector<std::function<Vec(const Vec&)>> maps;
        for (const auto& a : rf.a_basis) maps.push_back([&g, a](const Vec& x) { return g.bracket(a, x); });
        std::vector<Vec> z = kernel_on_span(p_basis, maps);
        if (rank_of(z) != rf.a_basis.size()) fail(ErrorKind::NotMaximallySplit, "a is not maximal abelian in the -1 eigenspace of theta");
    }

    // simple-root classification
    rf.simple_class.resize(l);
    rf.normalizer.assign(l, Scalar(1));
    for (std::size_t i = 0; i < l; ++i) {
        IntVec t = spec.apply(rs.simple_root(i));
        if (t == rs.simple_root(i)) {
            rf.I_m.push_back(i);
            rf.simple_class[i] = SimpleClass::M;
            continue;
        }
        rf.I_n.push_back(i);
        if (t == RootSystem::negate(rs.simple_root(i))) {
            rf.I_s.push_back(i);
            rf.simple_class[i] = SimpleClass::S;
            // theta(e_{-alpha_i}) = d e_{alpha_i}; rescale by c with c^2 = 1 / d
            Scalar d = img[g.root_index(RootSystem::negate(rs.simple_root(i)))][g.root_index(rs.simple_root(i))];
            if (d == Scalar(1)) rf.normalizer[i] = Scalar(1);
            else if (d == Scalar(-1)) rf.normalizer[i] = Scalar::i();
            else fail(ErrorKind::NormalizationFailure, "theta(e_{-alpha}) = d e_alpha with d outside {1, -1}");
        } else {
            rf.I_nil.push_back(i);
            rf.simple_class[i] = SimpleClass::Nil;
        }
    }

    // center of m
    std::vector<Vec> m_roots;
    for (std::size_t b : rf.delta_m) m_roots.push_back(g.basis_vector(b));
    {
        std::vector<std::function<Vec(const Vec&)>> maps;
        for (std::size_t b : rf.delta_m) {
            IntVec phi = g.root_of(b);
            maps.push_back([&g, phi](const Vec& x) { return Vec{g.root_value(phi, g.cartan_coords(x))}; });
        }
        rf.center_basis = maps.empty() ? hm_raw : kernel_on_span(hm_raw, maps);
    }

    // restricted roots
    std::map<RVec, RestrictedRoot> res;
    for (std::size_t b = 0; b < n; ++b) {
        if (g.is_cartan(b)) continue;
        IntVec phi = g.root_of(b);
        if (spec.apply(phi) == phi) continue;
        RVec gamma = rf.project(phi);
        auto& r = res[gamma];
        r.coords = gamma;
        r.preimage.push_back(b);
        if (std::find(rf.delta_n.begin(), rf.delta_n.end(), b) != rf.delta_n.end()) r.positive = true;
    }
    for (auto& [gamma, r] : res) {
        for (std::size_t b : r.preimage) {
            bool pos = std::find(rf.delta_n.begin(), rf.delta_n.end(), b) != rf.delta_n.end();
            if (pos != r.positive) fail(ErrorKind::StructureViolation, "restricted root has preimages of both signs");
        }
        rf.restricted.push_back(r);
    }
    std::stable_sort(rf.restricted.begin(), rf.restricted.end(), [](const RestrictedRoot& x, const RestrictedRoot& y) {
        if (x.positive != y.positive) return x.positive;
        Rational hx = 0, hy = 0;
        for (const auto& q : x.coords) hx += q;
        for (const auto& q : y.coords) hy += q;
        if (x.positive) return hx < hy;
        return hx > hy;
    });
    std::set<RVec> positives;
    for (const auto& r : rf.restricted)
        if (r.positive) positives.insert(r.coords);
    for (auto& r : rf.restricted) {
        if (!r.positive) continue;
        bool decomposable = false;
        for (const auto& x : positives) {
            RVec rest;
            for (std::size_t k = 0; k < l; ++k) rest.push_back(r.coords[k] - x[k]);
            if (positives.count(rest)) decomposable = true;
        }
        r.simple = !decomposable;
    }
    // beta_j ordered by the smallest simple index of I_n projecting onto it
    for (std::size_t i : rf.I_n) {
        long k = rf.restricted_index(rf.project(rs.simple_root(i)));
        if (k < 0 || !rf.restricted[k].simple) continue;
        if (std::find(rf.simple_restricted.begin(), rf.simple_restricted.end(), static_cast<std::size_t>(k)) == rf.simple_restricted.end())
            rf.simple_restricted.push_back(k);
    }
    for (std::size_t k = 0; k < rf.restricted.size(); ++k)
        if (rf.restricted[k].simple &&
            std::find(rf.simple_restricted.begin(), rf.simple_restricted.end(), k) == rf.simple_restricted.end())
            fail(ErrorKind::StructureViolation, "simple restricted root is not the image of a simple root");
    if (rf.simple_restricted.size() != rf.split_rank()) fail(ErrorKind::StructureViolation, "number of simple restricted roots differs from the split rank");

    // lowest weights of the simple restricted roots
    for (std::size_t j = 0; j < rf.simple_restricted.size(); ++j) {
        const RestrictedRoot& r = rf.restricted[rf.simple_restricted[j]];
        std::vector<std::size_t> lows;
        for (std::size_t b : r.preimage) {
            bool killed = true;
            for (std::size_t mp : rf.delta_m_pos) {
                long neg = g.root_index(RootSystem::negate(g.root_of(mp)));
                if (!g.bracket_basis(neg, b).empty()) killed = false;
            }
            if (killed) lows.push_back(b);
        }
        std::vector<std::size_t> simple_idx;
        for (std::size_t b : lows) {
            IntVec phi = g.root_of(b);
            if (RootSystem::height(phi) != 1) fail(ErrorKind::StructureViolation, "lowest weight of a simple restricted root is not simple");
            simple_idx.push_back(std::find(phi.begin(), phi.end(), 1) - phi.begin());
        }
        std::sort(simple_idx.begin(), simple_idx.end());
        if (simple_idx.empty() || simple_idx.size() > 2) fail(ErrorKind::StructureViolation, "|Delta_low(beta_j)| is not 1 or 2");
        rf.low.push_back(simple_idx);
        if (simple_idx.size() == 1) {
            rf.J_1.push_back(j);
            rf.I_1.push_back(simple_idx[0]);
        } else {
            rf.J_2.push_back(j);
            rf.pairs.emplace_back(simple_idx[0], simple_idx[1]);
            rf.I_2.push_back(simple_idx[0]);
            rf.I_2.push_back(simple_idx[1]);
        }
    }
    std::sort(rf.I_1.begin(), rf.I_1.end());
    std::sort(rf.I_2.begin(), rf.I_2.end());

    // h_m basis: h_i for i in I_m, h_{i_j} - h_{i_j'} for the pairs
    for (std::size_t i : rf.I_m) rf.h_m_basis.push_back(rf.h(i));
    for (const auto& [i, ip] : rf.pairs) rf.h_m_basis.push_back(rf.h(i) - rf.h(ip));

    // triangular pieces
    for (std::size_t b : rf.delta_n) {
        rf.n_basis.push_back(g.basis_vector(b));
        Vec f = g.basis_vector(g.root_index(RootSystem::negate(g.root_of(b))));
        rf.n_minus_basis.push_back(f);
        rf.n_star_basis.push_back(f + rf.theta.apply(f));
    }
    rf.k_basis = rf.n_star_basis;
    for (std::size_t b : rf.delta_m_pos) rf.k_basis.push_back(g.basis_vector(g.root_index(RootSystem::negate(g.root_of(b)))));
    for (const auto& y : rf.h_m_basis) rf.k_basis.push_back(y);
    for (std::size_t b : rf.delta_m_pos) rf.k_basis.push_back(g.basis_vector(b));
    rf.m_basis = rf.h_m_basis;
    for (std::size_t b : rf.delta_m) rf.m_basis.push_back(g.basis_vector(b));

    // decomposition sanity: g = k + a + n, k = fixed space of theta
    {
        std::vector<Vec> all = rf.k_basis;
        all.insert(all.end(), rf.a_basis.begin(), rf.a_basis.end());
        all.insert(all.end(), rf.n_basis.begin(), rf.n_basis.end());
        if (rank_of(all) != n || all.size() != n) fail(ErrorKind::StructureViolation, "g is not k + a + n");
        SparseMatrix tm = rf.theta - SparseMatrix::identity(n);
        std::vector<const SparseMatrix*> ops{&tm};
        if (!same_span(common_kernel(ops, n), rf.k_basis)) fail(ErrorKind::StructureViolation, "k is not the fixed space of theta");
        if (rank_of(rf.h_m_basis) != hm_raw.size() || !same_span(rf.h_m_basis, hm_raw))
            fail(ErrorKind::StructureViolation, "paired coroot vectors are not a basis of h_m");
    }
    return rf;
}

/// sigma_gamma: basis of g(gamma) and the m-action on it.
inline SigmaGamma restricted_root_module(const RealFormData& rf, const RVec& gamma) {
    const LieAlgebra& g = *rf.g;
    long k = rf.restricted_index(gamma);
    if (k < 0) fail(ErrorKind::InvalidArgument, "not a restricted root: " + rvec_string(gamma));
    SigmaGamma sg;
    sg.basis = rf.restricted[k].preimage;
    const std::size_t d = sg.basis.size();
    for (const auto& x : rf.m_basis) {
        Mat m(d, Vec(d));
        for (std::size_t c = 0; c < d; ++c) {
            Vec y = g.bracket(x, g.basis_vector(sg.basis[c]));
            for (std::size_t r = 0; r < d; ++r) {
                m[r][c] = y[sg.basis[r]];
                y[sg.basis[r]] = Scalar();
            }
            if (!is_zero(y)) fail(ErrorKind::StructureViolation, "m does not preserve g(gamma)");
        }
        sg.m_action.push_back(std::move(m));
    }
    for (std::size_t b : sg.basis) {
        Vec wt;
        for (const auto& y : rf.h_m_basis) wt.push_back(g.root_value(g.root_of(b), g.cartan_coords(y)));
        sg.hm_weights.push_back(wt);
    }
    std::set<std::vector<std::string>> seen;
    for (const auto& wt : sg.hm_weights) {
        std::vector<std::string> key;
        for (const auto& x : wt) key.push_back(x.to_string());
        if (!seen.insert(key).second) fail(ErrorKind::StructureViolation, "h_m-weight of g(gamma) has multiplicity > 1");
    }
    return sg;
}

/// Delta_low(gamma): root vectors of g(gamma) killed by every e_{-alpha}, alpha in Delta(m_+).
inline std::vector<std::size_t> lowest_weights(const RealFormData& rf, const RVec& gamma) {
    const LieAlgebra& g = *rf.g;
    long k = rf.restricted_index(gamma);
    if (k < 0) fail(ErrorKind::InvalidArgument, "not a restricted root: " + rvec_string(gamma));
    std::vector<std::size_t> lows;
    for (std::size_t b : rf.restricted[k].preimage) {
        bool killed = true;
        for (std::size_t mp : rf.delta_m_pos) {
            long neg = g.root_index(RootSystem::negate(g.root_of(mp)));
            if (!g.bracket_basis(neg, b).empty()) killed = false;
        }
        if (killed) lows.push_back(b);
    }
    if (lows.empty() || lows.size() > 2) fail(ErrorKind::StructureViolation, "|Delta_low| = " + std::to_string(lows.size()));
    return lows;
}

/// Root vectors reached from e_psi by repeated ad(e_alpha), alpha in Delta(m_+).
inline std::vector<std::size_t> m_plus_orbit(const RealFormData& rf, std::size_t psi) {
    const LieAlgebra& g = *rf.g;
    std::vector<std::size_t> seen{psi}, stack{psi};
    while (!stack.empty()) {
        std::size_t b = stack.back();
        stack.pop_back();
        for (std::size_t mp : rf.delta_m_pos)
            for (const auto& [t, c] : g.bracket_basis(mp, b))
                if (std::find(seen.begin(), seen.end(), t) == seen.end()) {
                    seen.push_back(t);
                    stack.push_back(t);
                }
    }
    std::sort(seen.begin(), seen.end());
    return seen;
}

struct SimpleRestrictedClassification {
    std::vector<std::size_t> J_1, J_2;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

/// J_1 / J_2 split, re-verifying Pi_n = disjoint union of Delta_low(beta_j).
inline SimpleRestrictedClassification classify_simple_restricted(const RealFormData& rf) {
    std::vector<std::size_t> covered;
    for (const auto& lows : rf.low) covered.insert(covered.end(), lows.begin(), lows.end());
    std::sort(covered.begin(), covered.end());
    std::vector<std::size_t> in = rf.I_n;
    std::sort(in.begin(), in.end());
    if (covered != in) fail(ErrorKind::StructureViolation, "Pi_n is not the disjoint union of Delta_low(beta_j)");
    return {rf.J_1, rf.J_2, rf.pairs};
}

/// Killing-orthogonal projection onto the center of m.
inline Vec project_to_center(const RealFormData& rf, const Vec& x) {
    const LieAlgebra& g = *rf.g;
    const auto& c = rf.center_basis;
    if (c.empty()) return Vec(g.dim());
    Mat gram(c.size(), Vec(c.size()));
    Vec rhs(c.size());
    for (std::size_t a = 0; a < c.size(); ++a) {
        rhs[a] = g.killing(c[a], x);
        for (std::size_t b = 0; b < c.size(); ++b) gram[a][b] = g.killing(c[a], c[b]);
    }
    Vec coef = solve(gram, rhs);
    Vec out(g.dim());
    for (std::size_t a = 0; a < c.size(); ++a) out = out + coef[a] * c[a];
    return out;
}

inline std::vector<Vec> h_m_basis(const RealFormData& rf) {
    for (const auto& [i, ip] : rf.pairs) {
        Vec s = project_to_center(rf, rf.h(i)) + project_to_center(rf, rf.h(ip));
        if (!is_zero(s)) fail(ErrorKind::StructureViolation, "center projections of a pair do not cancel (" + std::to_string(i + 1) + "," + std::to_string(ip + 1) + ")");
    }
    return rf.h_m_basis;
}

/// w_gamma in h with B(w_gamma, h) = gamma(h).
inline Vec eta_inverse(const RealFormData& rf, const RVec& gamma) {
    const LieAlgebra& g = *rf.g;
    const std::size_t l = g.rank();
    Vec fund(l);
    for (std::size_t i = 0; i < l; ++i) {
        Rational s = 0;
        for (std::size_t k = 0; k < l; ++k) s += gamma[k] * g.root_system().cartan()(i, k);
        fund[i] = Scalar(s);
    }
    Mat bh(l, Vec(l));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) bh[i][j] = g.killing_matrix()[g.cartan_index(i)][g.cartan_index(j)];
    return g.cartan_element(solve(bh, fund));
}

/// The structure identities of the restricted-root theory, each evaluated exactly.
inline std::vector<IdentityCheck> structure_identities(const RealFormData& rf) {
    const LieAlgebra& g = *rf.g;
    const std::size_t n = g.dim();
    std::vector<IdentityCheck> out;
    auto record = [&](const std::string& name, bool ok, const std::string& detail) { out.push_back({name, ok, detail}); };

    // Pi_n = disjoint union of Delta_low(beta_j)
    {
        bool ok = true;
        try {
            classify_simple_restricted(rf);
        } catch (const Error&) {
            ok = false;
        }
        record("pi_n_partition", ok, std::to_string(rf.low.size()) + " simple restricted roots");
    }
    record("card_pi_n_split_rank_plus_center", rf.I_n.size() == rf.split_rank() + rf.center_dim(),
           std::to_string(rf.I_n.size()) + " = " + std::to_string(rf.split_rank()) + " + " + std::to_string(rf.center_dim()));
    record("card_reducible_simple_restricted_equals_center", rf.J_2.size() == rf.center_dim(),
           std::to_string(rf.J_2.size()) + " = " + std::to_string(rf.center_dim()));
    {
        bool ok = true;
        for (const auto& [i, ip] : rf.pairs)
            if (!is_zero(project_to_center(rf, rf.h(i)) + project_to_center(rf, rf.h(ip)))) ok = false;
        record("center_projection_antisymmetric", ok, std::to_string(rf.pairs.size()) + " pairs");
    }
    {
        std::vector<Vec> hm_raw;
        for (std::size_t i = 0; i < g.rank(); ++i) {
            Vec h = rf.h(i);
            hm_raw.push_back(h + rf.theta.apply(h));
        }
        bool ok = rank_of(rf.h_m_basis) == rf.h_m_basis.size() && same_span(independent_subset(hm_raw), rf.h_m_basis);
        if (rf.h_m_basis.empty()) ok = rank_of(hm_raw) == 0;
        record("h_m_basis_from_pairs", ok, std::to_string(rf.h_m_basis.size()) + " vectors");
    }
    // [e_phi, theta e_phi] lies in a, nonzero iff theta phi = -phi
    {
        bool ok = true;
        for (std::size_t k = 0; k < g.num_positive(); ++k) {
            std::size_t b = g.negative_index(k);
            IntVec phi = g.root_of(b);
            Vec e = g.basis_vector(b);
            Vec x = g.bracket(e, rf.theta.apply(e));
            bool in_a = is_zero(x) || (is_zero(x - g.cartan_element(g.cartan_coords(x))) && rf.theta.apply(x) == Scalar(-1) * x);
            IntVec t = rf.spec.apply(phi);
            bool opposite = t == RootSystem::negate(phi);
            IntVec sum = RootSystem::add(phi, t);
            if (!in_a || (!is_zero(x)) != opposite || g.root_system().is_root(sum)) ok = false;
        }
        record("theta_bracket_in_a", ok, "all negative roots");
    }
    // [theta e, e] = -B(theta e, e) w_gamma on basis vectors and on sums
    {
        bool ok = true;
        for (const auto& r : rf.restricted) {
            Vec wg = eta_inverse(rf, r.coords);
            std::vector<Vec> probes;
            Vec sum(n);
            long coef = 1;
            for (std::size_t b : r.preimage) {
                probes.push_back(g.basis_vector(b));
                sum = sum + Scalar(coef++) * g.basis_vector(b);
            }
            probes.push_back(sum);
            for (const auto& e : probes) {
                Vec te = rf.theta.apply(e);
                Vec lhs = g.bracket(te, e);
                Vec rhs = Scalar(-1) * g.killing(te, e) * wg;
                if (lhs != rhs) ok = false;
            }
        }
        record("theta_bracket_scaled_eta", ok, std::to_string(rf.restricted.size()) + " restricted roots");
    }
    // lowest-weight cardinality and h_m-weight negation
    {
        bool card_ok = true, sym_ok = true;
        for (const auto& r : rf.restricted) {
            if (!r.positive) continue;
            std::vector<std::size_t> lows;
            try {
                lows = lowest_weights(rf, r.coords);
            } catch (const Error&) {
                card_ok = false;
                continue;
            }
            SigmaGamma sg = restricted_root_module(rf, r.coords);
            auto weight_of = [&](std::size_t b) {
                std::size_t pos = std::find(sg.basis.begin(), sg.basis.end(), b) - sg.basis.begin();
                return sg.hm_weights[pos];
            };
            auto weight_set = [&](const std::vector<std::size_t>& bs) {
                std::set<std::vector<std::string>> s;
                for (std::size_t b : bs) {
                    std::vector<std::string> key;
                    for (const auto& x : weight_of(b)) key.push_back(x.to_string());
                    s.insert(key);
                }
                return s;
            };
            auto negated = [&](const std::vector<std::size_t>& bs) {
                std::set<std::vector<std::string>> s;
                for (std::size_t b : bs) {
                    std::vector<std::string> key;
                    for (const auto& x : weight_of(b)) key.push_back((-x).to_string());
                    s.insert(key);
                }
                return s;
            };
            std::vector<std::vector<std::size_t>> comps;
            std::size_t total = 0;
            for (std::size_t psi : lows) {
                comps.push_back(m_plus_orbit(rf, psi));
                total += comps.back().size();
            }
            std::vector<std::size_t> all;
            for (const auto& c : comps) all.insert(all.end(), c.begin(), c.end());
            std::sort(all.begin(), all.end());
            std::vector<std::size_t> pre = r.preimage;
            std::sort(pre.begin(), pre.end());
            if (total != pre.size() || all != pre) card_ok = false;
            if (comps.size() == 1) {
                if (weight_set(comps[0]) != negated(comps[0])) sym_ok = false;
            } else if (comps.size() == 2) {
                if (weight_set(comps[0]) != negated(comps[1])) sym_ok = false;
            }
        }
        record("lowest_weight_cardinality", card_ok, "|Delta_low| in {1,2}, spans exhaust g(gamma)");
        record("h_m_weight_negation", sym_ok, "components have opposite h_m-weights");
    }
    // I = I_m + I_n, I_n = I_1 + I_2, I_s in I_1
    {
        std::vector<std::size_t> u = rf.I_1;
        u.insert(u.end(), rf.I_2.begin(), rf.I_2.end());
        std::sort(u.begin(), u.end());
        bool ok = u == rf.I_n && rf.I_m.size() + rf.I_n.size() == rf.rank();
        for (std::size_t i : rf.I_s)
            if (!rf.in(rf.I_1, i)) ok = false;
        record("simple_index_partition", ok, "I_s in I_1");
    }
    return out;
}

} // namespace branchlab
