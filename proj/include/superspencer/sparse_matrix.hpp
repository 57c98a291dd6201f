#ifndef SUPERSPENCER_SPARSE_MATRIX_HPP
#define SUPERSPENCER_SPARSE_MATRIX_HPP

#include "superspencer/rational.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spencer {

// A sparse row: (column, value) pairs sorted by column, no stored zeros.
using SparseVec = std::vector<std::pair<int, Rat>>;

inline SparseVec& sv_normalize(SparseVec& v) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    out.reserve(v.size());
    for (auto& [c, x] : v) {
        if (!out.empty() && out.back().first == c)
            out.back().second += x;
        else
            out.emplace_back(c, x);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& p) { return is_zero(p.second); }),
              out.end());
    v.swap(out);
    return v;
}

// v += a*w, both sorted.
inline void sv_axpy(SparseVec& v, const Rat& a, const SparseVec& w) {
    if (is_zero(a) || w.empty()) return;
    SparseVec out;
    out.reserve(v.size() + w.size());
    auto i = v.begin();
    auto j = w.begin();
    while (i != v.end() || j != w.end()) {
        if (j == w.end() || (i != v.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == v.end() || j->first < i->first) {
            Rat val = a * j->second;
            if (!is_zero(val)) out.emplace_back(j->first, val);
            ++j;
        } else {
            Rat val = i->second + a * j->second;
            if (!is_zero(val)) out.emplace_back(i->first, val);
            ++i;
            ++j;
        }
    }
    v.swap(out);
}

inline Rat sv_get(const SparseVec& v, int col) {
    auto it = std::lower_bound(v.begin(), v.end(), col,
                               [](const auto& p, int c) { return p.first < c; });
    if (it != v.end() && it->first == col) return it->second;
    return Rat(0);
}

inline void sv_scale(SparseVec& v, const Rat& a) {
    if (is_zero(a)) {
        v.clear();
        return;
    }
    for (auto& [c, x] : v) x *= a;
}

inline SparseVec sv_from_dense(const std::vector<Rat>& d) {
    SparseVec v;
    for (int i = 0; i < (int)d.size(); ++i)
        if (!is_zero(d[i])) v.emplace_back(i, d[i]);
    return v;
}

inline std::vector<Rat> sv_to_dense(const SparseVec& v, int n) {
    std::vector<Rat> d(n, Rat(0));
    for (auto& [c, x] : v) d[c] = x;
    return d;
}

/// Sparse matrix over exact rationals; rows stored as sorted sparse vectors.
class SparseMatrix {
public:
    SparseMatrix() : rows_(0), cols_(0) {}
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
    }

    static SparseMatrix identity(int n) {
        SparseMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.data_[i].emplace_back(i, Rat(1));
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const Rat& v) {
        check(r, c);
        auto& row = data_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& p, int cc) { return p.first < cc; });
        if (it != row.end() && it->first == c) {
            if (is_zero(v))
                row.erase(it);
            else
                it->second = v;
        } else if (!is_zero(v)) {
            row.emplace(it, c, v);
        }
    }

    void add(int r, int c, const Rat& v) {
        if (is_zero(v)) return;
        check(r, c);
        auto& row = data_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& p, int cc) { return p.first < cc; });
        if (it != row.end() && it->first == c) {
            it->second += v;
            if (is_zero(it->second)) row.erase(it);
        } else {
            row.emplace(it, c, v);
        }
    }

    Rat get(int r, int c) const {
        check(r, c);
        return sv_get(data_[r], c);
    }

    const SparseVec& row(int r) const { return data_[r]; }
    SparseVec& row_mut(int r) { return data_[r]; }

    void set_row(int r, SparseVec v) {
        if (!v.empty() && v.back().first >= cols_) throw std::out_of_range("row too wide");
        data_[r] = std::move(v);
    }

    int append_row(SparseVec v) {
        if (!v.empty() && v.back().first >= cols_) throw std::out_of_range("row too wide");
        data_.push_back(std::move(v));
        return rows_++;
    }

    long nnz() const {
        long n = 0;
        for (auto& r : data_) n += (long)r.size();
        return n;
    }

    bool is_zero_matrix() const {
        for (auto& r : data_)
            if (!r.empty()) return false;
        return true;
    }

    SparseMatrix transpose() const {
        SparseMatrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (auto& [c, x] : data_[r]) t.data_[c].emplace_back(r, x);
        return t;
    }

    std::vector<Rat> apply(const std::vector<Rat>& x) const {
        if ((int)x.size() != cols_) throw std::invalid_argument("apply: size mismatch");
        std::vector<Rat> y(rows_, Rat(0));
        for (int r = 0; r < rows_; ++r)
            for (auto& [c, v] : data_[r]) y[r] += v * x[c];
        return y;
    }

    // y = x^T * this (row vector times matrix), x sparse.
    SparseVec apply_left(const SparseVec& x) const {
        SparseVec y;
        std::map<int, Rat> acc;
        for (auto& [r, v] : x)
            for (auto& [c, w] : data_[r]) acc[c] += v * w;
        for (auto& [c, s] : acc)
            if (!is_zero(s)) y.emplace_back(c, s);
        return y;
    }

    SparseMatrix operator*(const SparseMatrix& other) const {
        if (cols_ != other.rows_) throw std::invalid_argument("matmul: shape mismatch");
        SparseMatrix out(rows_, other.cols_);
        for (int r = 0; r < rows_; ++r) out.data_[r] = other.apply_left(data_[r]);
        return out;
    }

    SparseMatrix operator+(const SparseMatrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw std::invalid_argument("add: shape mismatch");
        SparseMatrix out = *this;
        for (int r = 0; r < rows_; ++r) sv_axpy(out.data_[r], Rat(1), other.data_[r]);
        return out;
    }

    SparseMatrix operator-(const SparseMatrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw std::invalid_argument("sub: shape mismatch");
        SparseMatrix out = *this;
        for (int r = 0; r < rows_; ++r) sv_axpy(out.data_[r], Rat(-1), other.data_[r]);
        return out;
    }

    SparseMatrix scaled(const Rat& a) const {
        SparseMatrix out = *this;
        for (auto& r : out.data_) sv_scale(r, a);
        return out;
    }

    bool operator==(const SparseMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

    // Rows of `other` appended below.
    static SparseMatrix vstack(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.cols() != b.cols()) throw std::invalid_argument("vstack: col mismatch");
        SparseMatrix out = a;
        for (int r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
        return out;
    }

private:
    void check(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("matrix index out of range");
    }

    int rows_, cols_;
    std::vector<SparseVec> data_;
};

/// Incremental reduced row echelon form. Rows may be fed one at a time;
/// the stored pivot rows are kept fully reduced, so the basis it holds is
/// the unique RREF of the row space regardless of insertion order.
class Echelon {
public:
    explicit Echelon(int cols) : cols_(cols) {}

    int cols() const { return cols_; }
    int rank() const { return (int)rows_.size(); }

    // Reduces v against the current pivots (in place).
    void reduce(SparseVec& v) const {
        // Iterate pivot columns present in v; each elimination may introduce
        // entries only to the right of the eliminated column.
        size_t idx = 0;
        while (idx < v.size()) {
            int c = v[idx].first;
            auto it = rows_.find(c);
            if (it == rows_.end()) {
                ++idx;
                continue;
            }
            Rat coef = -v[idx].second;
            sv_axpy(v, coef, it->second);
            // v no longer has column c; idx stays (points at next entry).
        }
    }

    // Returns true when v enlarged the span.
    bool add_row(SparseVec v) {
        reduce(v);
        if (v.empty()) return false;
        int pivot = v.front().first;
        Rat inv = Rat(1) / v.front().second;
        sv_scale(v, inv);
        // Back-eliminate the new pivot column from stored rows.
        for (auto& [pc, row] : rows_) {
            Rat x = sv_get(row, pivot);
            if (!is_zero(x)) sv_axpy(row, -x, v);
        }
        rows_.emplace(pivot, std::move(v));
        return true;
    }

    void add_matrix(const SparseMatrix& m) {
        for (int r = 0; r < m.rows(); ++r) add_row(m.row(r));
    }

    std::vector<int> pivot_cols() const {
        std::vector<int> p;
        p.reserve(rows_.size());
        for (auto& [c, _] : rows_) p.push_back(c);
        return p;
    }

    // RREF basis matrix, rows ordered by pivot column.
    SparseMatrix basis() const {
        SparseMatrix m((int)rows_.size(), cols_);
        int r = 0;
        for (auto& [c, row] : rows_) m.set_row(r++, row);
        return m;
    }

private:
    int cols_;
    std::map<int, SparseVec> rows_; // pivot column -> reduced row
};

inline int rank(const SparseMatrix& m) {
    Echelon e(m.cols());
    e.add_matrix(m);
    return e.rank();
}

/// Canonical basis of {x : m x = 0}, one row per free column of rref(m).
inline SparseMatrix kernel_basis_matrix(const SparseMatrix& m) {
    Echelon e(m.cols());
    e.add_matrix(m);
    SparseMatrix r = e.basis();
    std::vector<int> piv = e.pivot_cols();
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : piv) is_pivot[c] = true;

    SparseMatrix out(0, m.cols());
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        SparseVec v;
        v.emplace_back(f, Rat(1));
        for (int i = 0; i < (int)piv.size(); ++i) {
            Rat x = sv_get(r.row(i), f);
            if (!is_zero(x)) v.emplace_back(piv[i], -x);
        }
        sv_normalize(v);
        out.append_row(std::move(v));
    }
    return out;
}

/// Repeated solves against a fixed matrix with independent columns: rows
/// [column_a | e_a] are kept in echelon form; reducing [b | 0] leaves the
/// coordinates of b in the tracking half.
class SolveCache {
public:
    explicit SolveCache(const SparseMatrix& a) : rhs_dim_(a.rows()), n_(a.cols()), ech_(a.rows() + a.cols()) {
        SparseMatrix at = a.transpose();
        for (int col = 0; col < n_; ++col) {
            SparseVec row = at.row(col);
            row.emplace_back(rhs_dim_ + col, Rat(1));
            if (!ech_.add_row(std::move(row)))
                throw std::invalid_argument("SolveCache: columns are dependent");
        }
    }

    std::optional<SparseVec> solve_sparse(const SparseVec& b) const {
        SparseVec v = b;
        ech_.reduce(v);
        SparseVec x;
        for (auto& [c, val] : v) {
            if (c < rhs_dim_) return std::nullopt;
            x.emplace_back(c - rhs_dim_, -val);
        }
        return x;
    }

private:
    int rhs_dim_, n_;
    Echelon ech_;
};

/// A particular solution of m x = rhs, or nullopt when inconsistent.
inline std::optional<std::vector<Rat>> solve(const SparseMatrix& m,
                                             const std::vector<Rat>& rhs) {
    if ((int)rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs length");
    // Augmented RREF; pivot in the last column signals inconsistency.
    Echelon e(m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        SparseVec v = m.row(r);
        if (!is_zero(rhs[r])) v.emplace_back(m.cols(), rhs[r]);
        e.add_row(std::move(v));
    }
    SparseMatrix b = e.basis();
    std::vector<Rat> x(m.cols(), Rat(0));
    for (int r = 0; r < b.rows(); ++r) {
        const SparseVec& row = b.row(r);
        int pivot = row.front().first;
        if (pivot == m.cols()) return std::nullopt;
        // Free variables are zero, so x[pivot] = rhs-part of the row.
        x[pivot] = sv_get(row, m.cols());
    }
    return x;
}

} // namespace spencer

#endif
