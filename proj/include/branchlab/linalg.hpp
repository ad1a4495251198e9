#pragma once

#include "errors.hpp"
#include "scalar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace branchlab {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // dense, row-major
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;  // sorted by index, no zeros

// ---------------------------------------------------------------- vectors

inline SparseVec to_sparse(const Vec& v) {
    SparseVec s;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) s.emplace_back(k, v[k]);
    return s;
}

inline Vec to_dense(const SparseVec& s, std::size_t n) {
    Vec v(n);
    for (const auto& [k, x] : s) v[k] = x;
    return v;
}

inline bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

inline Vec zero_vec(std::size_t n) { return Vec(n); }

inline Vec unit_vec(std::size_t n, std::size_t k) {
    Vec v(n);
    v[k] = 1;
    return v;
}

inline Vec operator+(Vec a, const Vec& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!b[k].is_zero()) a[k] += b[k];
    return a;
}

inline Vec operator-(Vec a, const Vec& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!b[k].is_zero()) a[k] -= b[k];
    return a;
}

inline Vec operator*(const Scalar& s, Vec a) {
    for (auto& x : a)
        if (!x.is_zero()) x *= s;
    return a;
}

inline Scalar dot(const Vec& a, const Vec& b) {
    Scalar s;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!a[k].is_zero() && !b[k].is_zero()) s += a[k] * b[k];
    return s;
}

/// y += a * x for sorted sparse vectors.
inline void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
    if (a.is_zero() || x.empty()) return;
    SparseVec out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back(std::move(y[i++]));
        } else if (i == y.size() || x[j].first < y[i].first) {
            out.emplace_back(x[j].first, a * x[j].second);
            ++j;
        } else {
            Scalar v = y[i].second + a * x[j].second;
            if (!v.is_zero()) out.emplace_back(y[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    y = std::move(out);
}

inline void scale(SparseVec& y, const Scalar& a) {
    for (auto& e : y) e.second *= a;
}

// ---------------------------------------------------------------- sparse matrices

/// Row-wise sparse matrix with exact entries.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

    static SparseMatrix identity(std::size_t n) {
        SparseMatrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m.data_[k].emplace_back(k, Scalar(1));
        return m;
    }

    /// Builds a matrix from sparse columns.
    static SparseMatrix from_columns(std::size_t rows, const std::vector<SparseVec>& cols) {
        SparseMatrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (const auto& [i, x] : cols[j]) m.data_[i].emplace_back(j, x);
        return m;
    }

    static SparseMatrix from_dense(const Mat& d) {
        SparseMatrix m(d.size(), d.empty() ? 0 : d[0].size());
        for (std::size_t i = 0; i < d.size(); ++i) m.data_[i] = to_sparse(d[i]);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const SparseVec& row(std::size_t i) const { return data_[i]; }
    SparseVec& row(std::size_t i) { return data_[i]; }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& r : data_) n += r.size();
        return n;
    }

    Scalar get(std::size_t i, std::size_t j) const {
        const auto& r = data_[i];
        auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, std::size_t c) { return e.first < c; });
        if (it != r.end() && it->first == j) return it->second;
        return Scalar();
    }

    void add(std::size_t i, std::size_t j, const Scalar& v) {
        if (v.is_zero()) return;
        auto& r = data_[i];
        auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, std::size_t c) { return e.first < c; });
        if (it != r.end() && it->first == j) {
            it->second += v;
            if (it->second.is_zero()) r.erase(it);
        } else {
            r.insert(it, {j, v});
        }
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const SparseVec& r) { return r.empty(); });
    }

    Vec apply(const Vec& x) const {
        Vec y(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (const auto& [j, a] : data_[i])
                if (!x[j].is_zero()) y[i] += a * x[j];
        return y;
    }

    SparseMatrix transpose() const {
        SparseMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (const auto& [j, a] : data_[i]) t.data_[j].emplace_back(i, a);
        return t;
    }

    Mat to_dense() const {
        Mat d(rows_, Vec(cols_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (const auto& [j, a] : data_[i]) d[i][j] = a;
        return d;
    }

    Scalar trace() const {
        Scalar t;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += get(i, i);
        return t;
    }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        SparseMatrix c(a.rows_, b.cols_);
        std::vector<Scalar> acc(b.cols_);
        std::vector<char> used(b.cols_, 0);
        std::vector<std::size_t> touched;
        for (std::size_t i = 0; i < a.rows_; ++i) {
            touched.clear();
            for (const auto& [k, x] : a.data_[i])
                for (const auto& [j, y] : b.data_[k]) {
                    if (!used[j]) {
                        used[j] = 1;
                        touched.push_back(j);
                        acc[j] = x * y;
                    } else {
                        acc[j] += x * y;
                    }
                }
            std::sort(touched.begin(), touched.end());
            for (std::size_t j : touched) {
                if (!acc[j].is_zero()) c.data_[i].emplace_back(j, std::move(acc[j]));
                acc[j] = Scalar();
                used[j] = 0;
            }
        }
        return c;
    }

    friend SparseMatrix linear_combination(const Scalar& a, const SparseMatrix& x, const Scalar& b, const SparseMatrix& y) {
        SparseMatrix c(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i) {
            SparseVec r;
            axpy(r, a, x.data_[i]);
            axpy(r, b, y.data_[i]);
            c.data_[i] = std::move(r);
        }
        return c;
    }

    friend SparseMatrix operator+(const SparseMatrix& x, const SparseMatrix& y) { return linear_combination(1, x, 1, y); }
    friend SparseMatrix operator-(const SparseMatrix& x, const SparseMatrix& y) { return linear_combination(1, x, -1, y); }
    friend SparseMatrix operator*(const Scalar& s, const SparseMatrix& x) {
        SparseMatrix c(x.rows_, x.cols_);
        if (s.is_zero()) return c;
        c.data_ = x.data_;
        for (auto& r : c.data_) scale(r, s);
        return c;
    }
    friend bool operator==(const SparseMatrix& x, const SparseMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
    }

    /// Row-major flattening, used to compare operators as vectors.
    SparseVec flatten() const {
        SparseVec f;
        for (std::size_t i = 0; i < rows_; ++i)
            for (const auto& [j, a] : data_[i]) f.emplace_back(i * cols_ + j, a);
        return f;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseVec> data_;
};

inline SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

inline bool operator==(const SparseVec& a, const SparseVec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k].first != b[k].first || a[k].second != b[k].second) return false;
    return true;
}

// ---------------------------------------------------------------- echelon engine

/// Incremental sparse row echelon form; pivots are normalized to leading coefficient 1.
class Echelon {
public:
    explicit Echelon(std::size_t ncols = 0) : ncols_(ncols) {}

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return pivots_.size(); }

    SparseVec reduce(SparseVec row) const {
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) break;
            Scalar a = -row.front().second;
            axpy(row, a, it->second);
        }
        return row;
    }

    /// Adds a row; returns true when it enlarges the row space.
    bool add(SparseVec row) {
        row = reduce(std::move(row));
        if (row.empty()) return false;
        Scalar inv = Scalar(1) / row.front().second;
        scale(row, inv);
        std::size_t lead = row.front().first;
        pivots_.emplace(lead, std::move(row));
        return true;
    }

    bool add(const Vec& row) { return add(to_sparse(row)); }

    bool contains(const SparseVec& row) const { return reduce(row).empty(); }

    /// Basis of {x : r . x = 0 for every added row r}.
    std::vector<Vec> nullspace() const {
        std::vector<Vec> basis;
        std::vector<std::size_t> leads;
        for (const auto& p : pivots_) leads.push_back(p.first);
        for (std::size_t f = 0; f < ncols_; ++f) {
            if (pivots_.count(f)) continue;
            Vec x(ncols_);
            x[f] = 1;
            auto end = std::lower_bound(leads.begin(), leads.end(), f);
            for (auto it = std::make_reverse_iterator(end); it != leads.rend(); ++it) {
                const SparseVec& r = pivots_.at(*it);
                Scalar s;
                for (std::size_t k = 1; k < r.size(); ++k)
                    if (!x[r[k].first].is_zero()) s += r[k].second * x[r[k].first];
                x[*it] = -s;
            }
            basis.push_back(std::move(x));
        }
        return basis;
    }

    const std::map<std::size_t, SparseVec>& pivots() const { return pivots_; }

private:
    std::size_t ncols_;
    std::map<std::size_t, SparseVec> pivots_;
};

/// Incremental basis of a span that also expresses members in terms of the accepted vectors.
class SpanBasis {
public:
    std::size_t size() const { return count_; }

    /// Returns true (and assigns the next basis index) when v is independent of the accepted vectors.
    bool add(SparseVec v) {
        SparseVec comb;
        reduce(v, comb);
        if (v.empty()) return false;
        scale(comb, Scalar(-1));
        comb.emplace_back(count_, Scalar(1));
        Scalar inv = Scalar(1) / v.front().second;
        scale(v, inv);
        scale(comb, inv);
        std::size_t lead = v.front().first;
        pivots_.emplace(lead, Entry{std::move(v), std::move(comb)});
        ++count_;
        return true;
    }

    bool add(const Vec& v) { return add(to_sparse(v)); }

    /// Coordinates in terms of the accepted vectors, or nullopt if v is outside the span.
    std::optional<SparseVec> coordinates(SparseVec v) const {
        SparseVec comb;
        reduce(v, comb);
        if (!v.empty()) return std::nullopt;
        return comb;
    }

    std::optional<Vec> coordinates(const Vec& v) const {
        auto c = coordinates(to_sparse(v));
        if (!c) return std::nullopt;
        return to_dense(*c, count_);
    }

    bool contains(const SparseVec& v) const { return coordinates(v).has_value(); }
    bool contains(const Vec& v) const { return contains(to_sparse(v)); }

private:
    struct Entry {
        SparseVec row;
        SparseVec comb;
    };

    void reduce(SparseVec& v, SparseVec& comb) const {
        while (!v.empty()) {
            auto it = pivots_.find(v.front().first);
            if (it == pivots_.end()) return;
            Scalar a = v.front().second;
            axpy(v, -a, it->second.row);
            axpy(comb, a, it->second.comb);
        }
    }

    std::size_t count_ = 0;
    std::map<std::size_t, Entry> pivots_;
};

// ---------------------------------------------------------------- subspace helpers

inline std::size_t rank_of(const std::vector<Vec>& vs) {
    if (vs.empty()) return 0;
    Echelon e(vs[0].size());
    for (const auto& v : vs) e.add(v);
    return e.rank();
}

/// Independent subset of vs (first occurrences kept).
inline std::vector<Vec> independent_subset(const std::vector<Vec>& vs) {
    std::vector<Vec> out;
    if (vs.empty()) return out;
    Echelon e(vs[0].size());
    for (const auto& v : vs)
        if (e.add(v)) out.push_back(v);
    return out;
}

/// Kernel of the matrix whose rows are given.
inline std::vector<Vec> nullspace_rows(const std::vector<Vec>& rows, std::size_t ncols) {
    Echelon e(ncols);
    for (const auto& r : rows) e.add(r);
    return e.nullspace();
}

/// Kernel of the stacked operators.
inline std::vector<Vec> common_kernel(const std::vector<const SparseMatrix*>& ops, std::size_t n) {
    Echelon e(n);
    for (const auto* op : ops)
        for (std::size_t i = 0; i < op->rows(); ++i)
            if (!op->row(i).empty()) e.add(op->row(i));
    return e.nullspace();
}

/// Kernel of several linear maps restricted to span(basis); maps are given by their images of basis vectors.
/// Returns vectors in the ambient space.
inline std::vector<Vec> kernel_on_span(const std::vector<Vec>& basis, const std::vector<std::function<Vec(const Vec&)>>& maps) {
    if (basis.empty()) return {};
    const std::size_t m = basis.size();
    std::map<std::size_t, SparseVec> rows;  // output coordinate -> row over basis index
    std::size_t offset = 0;
    for (const auto& f : maps) {
        std::size_t width = 0;
        for (std::size_t j = 0; j < m; ++j) {
            Vec img = f(basis[j]);
            width = img.size();
            for (std::size_t r = 0; r < img.size(); ++r)
                if (!img[r].is_zero()) rows[offset + r].emplace_back(j, img[r]);
        }
        offset += width;
    }
    Echelon e(m);
    for (auto& [_, r] : rows) e.add(r);
    std::vector<Vec> out;
    for (const auto& c : e.nullspace()) {
        Vec v(basis[0].size());
        for (std::size_t j = 0; j < m; ++j)
            if (!c[j].is_zero()) v = v + c[j] * basis[j];
        out.push_back(std::move(v));
    }
    return out;
}

/// Intersection of two subspaces given by spanning sets.
inline std::vector<Vec> intersect_spans(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Vec> cols;
    for (const auto& v : a) cols.push_back(v);
    for (const auto& v : b) cols.push_back(Scalar(-1) * v);
    const std::size_t n = a[0].size();
    std::vector<Vec> rows(n, Vec(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t r = 0; r < n; ++r) rows[r][j] = cols[j][r];
    std::vector<Vec> out;
    for (const auto& c : nullspace_rows(rows, cols.size())) {
        Vec v(n);
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!c[j].is_zero()) v = v + c[j] * a[j];
        out.push_back(std::move(v));
    }
    return independent_subset(out);
}

inline bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    std::size_t ra = rank_of(a), rb = rank_of(b);
    if (ra != rb) return false;
    std::vector<Vec> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return rank_of(both) == ra;
}

// ---------------------------------------------------------------- small dense matrices

inline Mat identity_mat(std::size_t n) {
    Mat m(n, Vec(n));
    for (std::size_t k = 0; k < n; ++k) m[k][k] = 1;
    return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Mat c(n, Vec(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t)
            if (!a[i][t].is_zero())
                for (std::size_t j = 0; j < m; ++j)
                    if (!b[t][j].is_zero()) c[i][j] += a[i][t] * b[t][j];
    return c;
}

inline Vec mat_vec(const Mat& a, const Vec& x) {
    Vec y(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) y[i] = dot(a[i], x);
    return y;
}

inline Mat transpose(const Mat& a) {
    if (a.empty()) return {};
    Mat t(a[0].size(), Vec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

/// Determinant by fraction-exact Gaussian elimination.
inline Scalar determinant(Mat a) {
    const std::size_t n = a.size();
    Scalar det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return Scalar();
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        Scalar inv = Scalar(1) / a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero()) continue;
            Scalar f = a[r][c] * inv;
            for (std::size_t k = c; k < n; ++k)
                if (!a[c][k].is_zero()) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

/// Inverse by Gauss-Jordan; throws on singular input.
inline Mat inverse(Mat a) {
    const std::size_t n = a.size();
    Mat inv = identity_mat(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) throw std::domain_error("singular matrix");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Scalar s = Scalar(1) / a[c][c];
        a[c] = s * a[c];
        inv[c] = s * inv[c];
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            Scalar f = a[r][c];
            a[r] = a[r] - f * a[c];
            inv[r] = inv[r] - f * inv[c];
        }
    }
    return inv;
}

/// Solves a x = b for square nonsingular a.
inline Vec solve(const Mat& a, const Vec& b) { return mat_vec(inverse(a), b); }

inline Mat int_to_mat(const IntMatrix& m) {
    Mat out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (long v : m[i]) out[i].push_back(Scalar(v));
    return out;
}

inline Vec int_to_vec(const IntVec& v) {
    Vec out;
    for (long x : v) out.push_back(Scalar(x));
    return out;
}

} // namespace branchlab
