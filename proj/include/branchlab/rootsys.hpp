#pragma once

#include "errors.hpp"
#include "linalg.hpp"
#include "scalar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace branchlab {

/// Cartan matrix with entries A[i][j] = alpha_j(h_i).
class CartanMatrix {
public:
    CartanMatrix() = default;
    explicit CartanMatrix(IntMatrix entries) : a_(std::move(entries)) { validate(); }

    std::size_t rank() const { return a_.size(); }
    long operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }
    const IntMatrix& entries() const { return a_; }

    /// Named types: A1..A8, B2..B4, C2..C4, D4, G2.
    static CartanMatrix of_type(const std::string& name) {
        if (name.size() < 2) fail(ErrorKind::ParseError, "unknown Cartan type " + name);
        char t = name[0];
        std::size_t n = std::stoul(name.substr(1));
        IntMatrix a(n, IntVec(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            a[i][i] = 2;
            if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
        }
        switch (t) {
        case 'A': break;
        case 'B':
            if (n < 2) fail(ErrorKind::ParseError, name);
            a[n - 1][n - 2] = -2;
            break;
        case 'C':
            if (n < 2) fail(ErrorKind::ParseError, name);
            a[n - 2][n - 1] = -2;
            break;
        case 'D':
            if (n < 4) fail(ErrorKind::ParseError, name);
            a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
            a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
            break;
        case 'G':
            if (n != 2) fail(ErrorKind::ParseError, name);
            a[1][0] = -3;
            break;
        default: fail(ErrorKind::ParseError, "unknown Cartan type " + name);
        }
        return CartanMatrix(a);
    }

    friend bool operator==(const CartanMatrix& x, const CartanMatrix& y) { return x.a_ == y.a_; }

private:
    void validate() const {
        const std::size_t n = a_.size();
        if (n == 0) fail(ErrorKind::NotFiniteType, "empty Cartan matrix");
        for (const auto& row : a_)
            if (row.size() != n) fail(ErrorKind::NotFiniteType, "Cartan matrix is not square");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j && a_[i][j] != 2) fail(ErrorKind::NotFiniteType, "diagonal entry is not 2");
                if (i != j && a_[i][j] > 0) fail(ErrorKind::NotFiniteType, "positive off-diagonal entry");
                if (i != j && (a_[i][j] == 0) != (a_[j][i] == 0)) fail(ErrorKind::NotFiniteType, "zero pattern not symmetric");
            }
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<std::size_t> idx;
            for (std::size_t k = 0; k < n; ++k)
                if (mask & (1u << k)) idx.push_back(k);
            Mat sub(idx.size(), Vec(idx.size()));
            for (std::size_t r = 0; r < idx.size(); ++r)
                for (std::size_t c = 0; c < idx.size(); ++c) sub[r][c] = Scalar(a_[idx[r]][idx[c]]);
            Scalar d = determinant(sub);
            if (!(d.re() > 0)) fail(ErrorKind::NotFiniteType, "principal minor is not positive");
        }
    }

    IntMatrix a_;
};

struct DominantWeight {
    IntVec coeffs;
    bool dominant = true;
};

/// Roots in simple-root coordinates, weights in fundamental-weight coordinates.
class RootSystem {
public:
    RootSystem() = default;

    explicit RootSystem(CartanMatrix cm) : cm_(std::move(cm)) {
        build_roots();
        cinv_ = inverse(int_to_mat(cm_.entries()));
        form_ = default_form();
        build_longest_word();
    }

    std::size_t rank() const { return cm_.rank(); }
    const CartanMatrix& cartan() const { return cm_; }
    const std::vector<IntVec>& positive_roots() const { return pos_; }
    std::size_t num_positive() const { return pos_.size(); }

    /// All roots: positive roots followed by their negatives.
    std::vector<IntVec> roots() const {
        std::vector<IntVec> all = pos_;
        for (const auto& r : pos_) all.push_back(negate(r));
        return all;
    }

    bool is_root(const IntVec& r) const { return pos_index_.count(r) || pos_index_.count(negate(r)); }

    /// Index in positive_roots, or -1.
    long positive_index(const IntVec& r) const {
        auto it = pos_index_.find(r);
        return it == pos_index_.end() ? -1 : static_cast<long>(it->second);
    }

    IntVec simple_root(std::size_t i) const {
        IntVec r(rank(), 0);
        r[i] = 1;
        return r;
    }

    static long height(const IntVec& r) { return std::accumulate(r.begin(), r.end(), 0L); }

    static IntVec negate(IntVec r) {
        for (auto& x : r) x = -x;
        return r;
    }

    /// <beta, alpha_i^vee> = beta(h_i) for beta in simple-root coordinates.
    long pairing_coroot(const IntVec& beta, std::size_t i) const {
        long s = 0;
        for (std::size_t j = 0; j < rank(); ++j) s += beta[j] * cm_(i, j);
        return s;
    }

    /// Fundamental coordinates of a root-lattice element.
    IntVec root_to_weight(const IntVec& beta) const {
        IntVec w(rank());
        for (std::size_t i = 0; i < rank(); ++i) w[i] = pairing_coroot(beta, i);
        return w;
    }

    /// Form (alpha_i, alpha_j) on simple roots.
    const Mat& simple_form() const { return form_; }

    /// Replaces the form on h* (e.g. with the Killing-induced one).
    RootSystem with_form(Mat form) const {
        RootSystem r = *this;
        r.form_ = std::move(form);
        return r;
    }

    /// (lambda, alpha_j) for lambda in fundamental coordinates.
    Scalar pair_with_simple(const Vec& lambda, std::size_t j) const {
        return lambda[j] * form_[j][j] / Scalar(2);
    }

    /// (lambda, beta) for lambda fundamental, beta in simple-root coordinates.
    Scalar pair_weight_root(const Vec& lambda, const IntVec& beta) const {
        Scalar s;
        for (std::size_t j = 0; j < rank(); ++j)
            if (beta[j] != 0) s += Scalar(beta[j]) * pair_with_simple(lambda, j);
        return s;
    }

    /// (lambda, mu) for both in fundamental coordinates.
    Scalar pair_weights(const Vec& lambda, const Vec& mu) const {
        Vec mu_root = weight_to_root(mu);
        Scalar s;
        for (std::size_t j = 0; j < rank(); ++j)
            if (!mu_root[j].is_zero()) s += mu_root[j] * pair_with_simple(lambda, j);
        return s;
    }

    /// Simple-root coordinates of a weight (rational).
    Vec weight_to_root(const Vec& mu) const {
        // mu_i = sum_j A_ij c_j
        return mat_vec(cinv_, mu);
    }

    /// Writes a weight given in simple-root coordinates in the fundamental basis.
    DominantWeight decompose_dominant(const Vec& root_coords) const {
        DominantWeight d;
        for (std::size_t i = 0; i < rank(); ++i) {
            Scalar s;
            for (std::size_t j = 0; j < rank(); ++j) s += Scalar(cm_(i, j)) * root_coords[j];
            if (!s.is_integer()) fail(ErrorKind::NotIntegral, "weight is not in the weight lattice");
            long v = s.to_long();
            d.coeffs.push_back(v);
            if (v < 0) d.dominant = false;
        }
        return d;
    }

    IntVec fundamental_weight(std::size_t i) const {
        IntVec w(rank(), 0);
        w[i] = 1;
        return w;
    }

    IntVec reflect_weight(IntVec w, std::size_t i) const {
        long n = w[i];
        for (std::size_t j = 0; j < rank(); ++j) w[j] -= n * cm_(j, i);
        return w;
    }

    IntVec reflect_root(IntVec beta, std::size_t i) const {
        beta[i] -= pairing_coroot(beta, i);
        return beta;
    }

    /// Reduced word of the longest element, in order of application.
    const std::vector<std::size_t>& longest_word() const { return longest_; }

    IntVec longest_element_action(IntVec w) const {
        for (std::size_t i : longest_) w = reflect_weight(std::move(w), i);
        return w;
    }

    IntVec rho() const { return IntVec(rank(), 1); }

    static bool is_dominant(const IntVec& w) {
        return std::all_of(w.begin(), w.end(), [](long x) { return x >= 0; });
    }

    /// Weyl dimension formula.
    Rational weyl_dimension(const IntVec& lambda) const {
        Vec lr = int_to_vec(add(lambda, rho()));
        Vec r = int_to_vec(rho());
        Scalar num = 1, den = 1;
        for (const auto& beta : pos_) {
            num *= pair_weight_root(lr, beta);
            den *= pair_weight_root(r, beta);
        }
        return (num / den).re();
    }

    /// Weight multiplicities by Freudenthal's recursion.
    std::map<IntVec, long> weight_multiplicities(const IntVec& lambda) const {
        if (!is_dominant(lambda)) fail(ErrorKind::NotDominant, "weight_multiplicities needs a dominant weight");
        std::map<IntVec, long> mult;
        mult[lambda] = 1;
        const Vec lr = int_to_vec(add(lambda, rho()));
        const Scalar top = pair_weights(lr, lr);
        std::vector<IntVec> layer{lambda};
        std::vector<IntVec> pos_w;
        for (const auto& beta : pos_) pos_w.push_back(root_to_weight(beta));
        while (!layer.empty()) {
            std::set<IntVec> next;
            for (const auto& mu : layer)
                for (std::size_t i = 0; i < rank(); ++i) next.insert(sub(mu, root_to_weight(simple_root(i))));
            std::vector<IntVec> kept;
            for (const auto& mu : next) {
                if (mult.count(mu)) continue;
                Scalar acc;
                for (std::size_t b = 0; b < pos_.size(); ++b) {
                    IntVec cur = mu;
                    for (long k = 1;; ++k) {
                        cur = add(cur, pos_w[b]);
                        auto it = mult.find(cur);
                        if (it == mult.end()) {
                            if (!dominates(lambda, cur)) break;
                            continue;
                        }
                        acc += Scalar(it->second) * pair_weight_root(int_to_vec(cur), pos_[b]);
                    }
                }
                Vec mr = int_to_vec(add(mu, rho()));
                Scalar den = top - pair_weights(mr, mr);
                if (den.is_zero()) continue;
                Scalar m = Scalar(2) * acc / den;
                if (!m.is_integer()) fail(ErrorKind::IdentityViolation, "non-integral Freudenthal multiplicity");
                long v = m.to_long();
                if (v > 0) {
                    mult[mu] = v;
                    kept.push_back(mu);
                }
            }
            layer = std::move(kept);
        }
        return mult;
    }

    /// lambda - mu is a nonnegative integer combination of simple roots.
    bool dominates(const IntVec& lambda, const IntVec& mu) const {
        Vec d = weight_to_root(int_to_vec(sub(lambda, mu)));
        for (const auto& x : d)
            if (!x.is_integer() || x.re() < 0) return false;
        return true;
    }

    static IntVec add(IntVec a, const IntVec& b) {
        for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
        return a;
    }
    static IntVec sub(IntVec a, const IntVec& b) {
        for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
        return a;
    }

private:
    void build_roots() {
        const std::size_t n = rank();
        std::vector<std::vector<IntVec>> by_height{{}, {}};
        for (std::size_t i = 0; i < n; ++i) by_height[1].push_back(simple_root(i));
        std::set<IntVec> known(by_height[1].begin(), by_height[1].end());
        for (std::size_t h = 1; !by_height[h].empty(); ++h) {
            std::set<IntVec> next;
            for (const auto& beta : by_height[h])
                for (std::size_t i = 0; i < n; ++i) {
                    if (beta == simple_root(i)) continue;
                    long q = 0;
                    IntVec down = beta;
                    while (true) {
                        down[i] -= 1;
                        if (!known.count(down)) break;
                        ++q;
                    }
                    long p = q - pairing_coroot(beta, i);
                    if (p > 0) {
                        IntVec up = beta;
                        up[i] += 1;
                        next.insert(up);
                    }
                }
            by_height.emplace_back(next.begin(), next.end());
            known.insert(next.begin(), next.end());
        }
        for (const auto& layer : by_height)
            for (const auto& r : layer) pos_.push_back(r);
        for (std::size_t k = 0; k < pos_.size(); ++k) pos_index_[pos_[k]] = k;
    }

    Mat default_form() const {
        // symmetrize: (alpha_i, alpha_j) = A_ij (alpha_i, alpha_i) / 2
        const std::size_t n = rank();
        std::vector<Scalar> len(n);
        std::vector<bool> seen(n, false);
        for (std::size_t s = 0; s < n; ++s) {
            if (seen[s]) continue;
            len[s] = 2;
            seen[s] = true;
            std::vector<std::size_t> stack{s};
            while (!stack.empty()) {
                std::size_t i = stack.back();
                stack.pop_back();
                for (std::size_t j = 0; j < n; ++j)
                    if (!seen[j] && cm_(i, j) != 0) {
                        // A_ij len_i = A_ji len_j
                        len[j] = Scalar(cm_(i, j)) * len[i] / Scalar(cm_(j, i));
                        seen[j] = true;
                        stack.push_back(j);
                    }
            }
        }
        Mat f(n, Vec(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) f[i][j] = Scalar(cm_(i, j)) * len[i] / Scalar(2);
        return f;
    }

    void build_longest_word() {
        IntVec w = rho();
        while (true) {
            std::size_t i = 0;
            while (i < rank() && w[i] <= 0) ++i;
            if (i == rank()) break;
            w = reflect_weight(w, i);
            longest_.push_back(i);
        }
    }

    CartanMatrix cm_;
    std::vector<IntVec> pos_;
    std::map<IntVec, std::size_t> pos_index_;
    Mat form_;
    Mat cinv_;
    std::vector<std::size_t> longest_;
};

inline RootSystem build_root_system(const CartanMatrix& cm) { return RootSystem(cm); }

} // namespace branchlab
