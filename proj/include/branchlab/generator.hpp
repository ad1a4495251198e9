#pragma once

#include "errors.hpp"
#include "linalg.hpp"

#include <cstdlib>
#include <functional>
#include <tuple>
#include <map>
#include <string>
#include <vector>

namespace branchlab {

inline std::size_t default_dim_cap() {
    if (const char* env = std::getenv("BRANCHLAB_DIM_CAP")) {
        try {
            return static_cast<std::size_t>(std::stoul(env));
        } catch (...) {
            fail(ErrorKind::ParseError, std::string("BRANCHLAB_DIM_CAP is not an integer: ") + env);
        }
    }
    return 5000;
}

/// Irreducible module of a Kac-Moody style presentation (E_i, F_i, H_i) with finite-type Cartan matrix,
/// built level by level below the highest weight vector (index 0).
struct GeneratedModule {
    IntMatrix cartan;
    IntVec highest_weight;
    std::size_t dim = 0;
    std::vector<IntVec> weights;  // H_i eigenvalues of each basis vector
    std::vector<long> depth;
    /// Basis vector b > 0 equals F_{origin[b].first} applied to basis vector origin[b].second.
    std::vector<std::pair<std::size_t, std::size_t>> origin;
    std::vector<SparseMatrix> E, F;
    std::map<IntVec, std::vector<std::size_t>> by_weight;

    SparseMatrix H(std::size_t i) const {
        SparseMatrix h(dim, dim);
        for (std::size_t b = 0; b < dim; ++b) h.add(b, b, Scalar(weights[b][i]));
        return h;
    }
};

/// Vectors below the top are zero in the irreducible quotient exactly when every E_j kills them,
/// so relations among the candidates F_i b are the relations among their E-images.
inline GeneratedModule generate_irreducible(const IntMatrix& cartan, const IntVec& hw, std::size_t cap) {
    const std::size_t r = cartan.size();
    for (long n : hw)
        if (n < 0) fail(ErrorKind::NotDominant, "highest weight must be dominant");
    GeneratedModule M;
    M.cartan = cartan;
    M.highest_weight = hw;
    M.weights.push_back(hw);
    M.depth.push_back(0);
    M.origin.emplace_back(0, 0);
    std::vector<std::vector<SparseVec>> Ecol(r), Fcol(r);
    for (std::size_t j = 0; j < r; ++j) Ecol[j].emplace_back();
    std::vector<std::size_t> prev{0};
    long level = 0;
    while (!prev.empty()) {
        ++level;
        struct Group {
            SpanBasis span;
            std::vector<std::size_t> globals;
        };
        std::map<IntVec, Group> groups;
        std::vector<std::size_t> current;
        std::vector<std::tuple<std::size_t, std::size_t, SparseVec>> pending;  // (i, parent, F column)
        for (std::size_t b : prev) {
            for (std::size_t i = 0; i < r; ++i) {
                IntVec wt = M.weights[b];
                for (std::size_t j = 0; j < r; ++j) wt[j] -= cartan[j][i];
                // E_j F_i b = F_i E_j b + delta_ij wt(b)_i b, stored with key index * r + j
                SparseVec key;
                for (std::size_t j = 0; j < r; ++j) {
                    SparseVec img;
                    for (const auto& [k, c] : Ecol[j][b]) axpy(img, c, Fcol[i][k]);
                    if (i == j && M.weights[b][i] != 0) axpy(img, Scalar(M.weights[b][i]), SparseVec{{b, Scalar(1)}});
                    SparseVec shifted;
                    for (auto& [k, c] : img) shifted.emplace_back(k * r + j, std::move(c));
                    axpy(key, 1, shifted);
                }
                if (key.empty()) {
                    pending.emplace_back(i, b, SparseVec{});
                    continue;
                }
                Group& g = groups[wt];
                if (g.span.add(key)) {
                    std::size_t idx = M.weights.size();
                    g.globals.push_back(idx);
                    current.push_back(idx);
                    M.weights.push_back(wt);
                    M.depth.push_back(level);
                    M.origin.emplace_back(i, b);
                    for (std::size_t j = 0; j < r; ++j) {
                        SparseVec ej;
                        for (const auto& [k, c] : key)
                            if (k % r == j) ej.emplace_back(k / r, c);
                        Ecol[j].push_back(std::move(ej));
                    }
                    pending.emplace_back(i, b, SparseVec{{idx, Scalar(1)}});
                    if (M.weights.size() > cap)
                        fail(ErrorKind::ResourceLimit, "module dimension exceeds cap " + std::to_string(cap));
                } else {
                    auto coords = g.span.coordinates(key);
                    SparseVec col;
                    for (const auto& [loc, c] : *coords) col.emplace_back(g.globals[loc], c);
                    pending.emplace_back(i, b, std::move(col));
                }
            }
        }
        for (std::size_t i = 0; i < r; ++i) Fcol[i].resize(M.weights.size());
        for (auto& [i, b, col] : pending) Fcol[i][b] = std::move(col);
        prev = std::move(current);
    }
    M.dim = M.weights.size();
    for (std::size_t i = 0; i < r; ++i) {
        Fcol[i].resize(M.dim);
        Ecol[i].resize(M.dim);
        M.E.push_back(SparseMatrix::from_columns(M.dim, Ecol[i]));
        M.F.push_back(SparseMatrix::from_columns(M.dim, Fcol[i]));
    }
    for (std::size_t b = 0; b < M.dim; ++b) M.by_weight[M.weights[b]].push_back(b);
    return M;
}

/// Contravariant form <F_i x, y> = <x, E_i y>, <v_top, v_top> = 1, on the basis vectors of one weight.
inline Mat contravariant_gram(const GeneratedModule& M, const IntVec& weight) {
    std::map<std::pair<std::size_t, std::size_t>, Scalar> memo;
    std::vector<SparseMatrix> Et;
    for (const auto& e : M.E) Et.push_back(e.transpose());
    std::function<Scalar(std::size_t, std::size_t)> form = [&](std::size_t x, std::size_t y) -> Scalar {
        if (x == 0) return y == 0 ? Scalar(1) : Scalar(0);
        auto key = std::make_pair(x, y);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        auto [i, parent] = M.origin[x];
        Scalar s;
        for (const auto& [k, c] : Et[i].row(y)) s += c * form(parent, k);
        memo.emplace(key, s);
        return s;
    };
    auto it = M.by_weight.find(weight);
    if (it == M.by_weight.end()) return {};
    const auto& idx = it->second;
    Mat g(idx.size(), Vec(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) g[a][b] = form(idx[a], idx[b]);
    return g;
}

} // namespace branchlab
