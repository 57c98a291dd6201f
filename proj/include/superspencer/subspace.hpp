#ifndef SUPERSPENCER_SUBSPACE_HPP
#define SUPERSPENCER_SUBSPACE_HPP

#include "superspencer/sparse_matrix.hpp"

namespace spencer {

/// A subspace of Q^n held by its unique RREF basis, so equal subspaces
/// compare equal entrywise no matter how they were produced.
class Subspace {
public:
    explicit Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    static Subspace from_rows(const SparseMatrix& rows) {
        Echelon e(rows.cols());
        e.add_matrix(rows);
        return from_echelon(e);
    }

    static Subspace from_echelon(const Echelon& e) {
        Subspace s(e.cols());
        s.basis_ = e.basis();
        s.pivots_ = e.pivot_cols();
        return s;
    }

    static Subspace full(int ambient_dim) {
        return from_rows(SparseMatrix::identity(ambient_dim));
    }

    static Subspace span_of(const SparseVec& v, int ambient_dim) {
        SparseMatrix m(0, ambient_dim);
        m.append_row(v);
        return from_rows(m);
    }

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const SparseMatrix& basis() const { return basis_; }
    const std::vector<int>& pivot_cols() const { return pivots_; }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

    bool contains(const SparseVec& v) const { return (bool)coords_of(v); }

    bool contains(const Subspace& o) const {
        if (o.ambient_ != ambient_) return false;
        for (int r = 0; r < o.basis_.rows(); ++r)
            if (!contains(o.basis_.row(r))) return false;
        return true;
    }

    /// Coordinates of v in the RREF basis (nullopt when v is outside).
    /// In RREF the coordinates are just v's entries at the pivot columns;
    /// the reconstruction check makes this a membership test too.
    std::optional<std::vector<Rat>> coords_of(const SparseVec& v) const {
        std::vector<Rat> coords(dim(), Rat(0));
        for (int i = 0; i < dim(); ++i) coords[i] = sv_get(v, pivots_[i]);
        SparseVec recon;
        for (int i = 0; i < dim(); ++i) sv_axpy(recon, coords[i], basis_.row(i));
        SparseVec diff = v;
        sv_normalize(diff);
        sv_axpy(diff, Rat(-1), recon);
        if (!diff.empty()) return std::nullopt;
        return coords;
    }

    Subspace sum(const Subspace& o) const {
        require_same_ambient(o);
        Echelon e(ambient_);
        e.add_matrix(basis_);
        e.add_matrix(o.basis_);
        return from_echelon(e);
    }

    Subspace intersect(const Subspace& o) const {
        require_same_ambient(o);
        // x in both spans: x = u^T A = w^T B. Kernel of [A^T | -B^T] gives
        // the compatible coefficient pairs.
        int a = dim(), b = o.dim();
        SparseMatrix sys(ambient_, a + b);
        for (int r = 0; r < a; ++r)
            for (auto& [c, x] : basis_.row(r)) sys.add(c, r, x);
        for (int r = 0; r < b; ++r)
            for (auto& [c, x] : o.basis_.row(r)) sys.add(c, a + r, -x);
        SparseMatrix ker = kernel_basis_matrix(sys);
        Echelon e(ambient_);
        for (int r = 0; r < ker.rows(); ++r) {
            SparseVec x;
            for (auto& [i, u] : ker.row(r)) {
                if (i >= a) break;
                sv_axpy(x, u, basis_.row(i));
            }
            e.add_row(std::move(x));
        }
        return from_echelon(e);
    }

private:
    void require_same_ambient(const Subspace& o) const {
        if (ambient_ != o.ambient_)
            throw std::invalid_argument("subspace ambient dimension mismatch");
    }

    int ambient_;
    SparseMatrix basis_;
    std::vector<int> pivots_;
};

inline Subspace kernel_basis(const SparseMatrix& m) {
    return Subspace::from_rows(kernel_basis_matrix(m));
}

inline Subspace image_basis(const SparseMatrix& m) {
    return Subspace::from_rows(m.transpose());
}

inline Subspace intersect(const Subspace& a, const Subspace& b) { return a.intersect(b); }

inline int quotient_dim(const Subspace& sub, const Subspace& ambient) {
    if (!ambient.contains(sub))
        throw std::invalid_argument("quotient_dim: sub not contained in ambient");
    return ambient.dim() - sub.dim();
}

/// Rows of `space` whose pivots are not pivots of `sub`: the canonical
/// complement of sub inside space. Requires sub to be contained in space.
inline SparseMatrix complement_rows(const Subspace& sub, const Subspace& space) {
    if (!space.contains(sub))
        throw std::invalid_argument("complement_rows: sub not contained in space");
    std::vector<bool> taken(space.ambient_dim(), false);
    for (int c : sub.pivot_cols()) taken[c] = true;
    SparseMatrix out(0, space.ambient_dim());
    for (int r = 0; r < space.dim(); ++r)
        if (!taken[space.pivot_cols()[r]]) out.append_row(space.basis().row(r));
    return out;
}

} // namespace spencer

#endif
