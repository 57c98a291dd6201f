#ifndef SUPERSPENCER_LIE_SUPERALGEBRA_HPP
#define SUPERSPENCER_LIE_SUPERALGEBRA_HPP

#include "superspencer/subspace.hpp"
#include "superspencer/superspace.hpp"

namespace spencer {

struct JacobiFailure {
    enum Kind { ParityConsistency, Antisymmetry, Jacobi, GradingClosure } kind;
    int i = -1, j = -1, k = -1;
};

/// A finite-dimensional Lie superalgebra given by exact structure
/// constants on a labeled basis, plus an optional Z-grading map.
class LieSuperalgebra {
public:
    LieSuperalgebra() = default;
    LieSuperalgebra(SuperSpace space, std::vector<std::vector<SparseVec>> bracket)
        : space_(std::move(space)), bracket_(std::move(bracket)) {}

    const SuperSpace& space() const { return space_; }
    int dim() const { return space_.dim(); }
    bool odd(int i) const { return space_.odd(i); }

    const SparseVec& bracket(int i, int j) const { return bracket_[i][j]; }

    SparseVec bracket(const SparseVec& x, const SparseVec& y) const {
        SparseVec out;
        for (auto& [i, a] : x)
            for (auto& [j, b] : y) sv_axpy(out, a * b, bracket_[i][j]);
        return out;
    }

    /// Matrix of ad(x_i) acting on the algebra, columns indexed by j.
    SparseMatrix ad(int i) const {
        SparseMatrix m(dim(), dim());
        for (int j = 0; j < dim(); ++j)
            for (auto& [k, c] : bracket_[i][j]) m.add(k, j, c);
        return m;
    }

    void set_grading(std::vector<int> degrees) { degrees_ = std::move(degrees); }
    bool has_grading() const { return !degrees_.empty(); }
    int degree(int i) const { return degrees_.at(i); }
    const std::vector<int>& degrees() const { return degrees_; }

    std::vector<int> indices_of_degree(int d) const {
        std::vector<int> out;
        for (int i = 0; i < dim(); ++i)
            if (degrees_.at(i) == d) out.push_back(i);
        return out;
    }

    /// Verifies parity consistency, super-antisymmetry, the super Jacobi
    /// identity on all basis triples, and grading closure when graded.
    std::optional<JacobiFailure> check_jacobi() const {
        const int n = dim();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                bool pij = odd(i) != odd(j);
                for (auto& [k, c] : bracket_[i][j]) {
                    if (odd(k) != pij) return JacobiFailure{JacobiFailure::ParityConsistency, i, j, k};
                    if (has_grading() && degree(k) != degree(i) + degree(j))
                        return JacobiFailure{JacobiFailure::GradingClosure, i, j, k};
                }
                SparseVec sym = bracket_[i][j];
                Rat sign = (odd(i) && odd(j)) ? Rat(1) : Rat(-1);
                sv_axpy(sym, sign, bracket_[j][i]);
                if (!sym.empty()) return JacobiFailure{JacobiFailure::Antisymmetry, i, j, -1};
            }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    // [x_i,[x_j,x_k]] - [[x_i,x_j],x_k] - (-1)^{p_i p_j}[x_j,[x_i,x_k]]
                    SparseVec lhs = bracket(unit(i), bracket_[j][k]);
                    sv_axpy(lhs, Rat(-1), bracket(bracket_[i][j], unit(k)));
                    Rat sign = (odd(i) && odd(j)) ? Rat(1) : Rat(-1);
                    sv_axpy(lhs, sign, bracket(unit(j), bracket_[i][k]));
                    if (!lhs.empty()) return JacobiFailure{JacobiFailure::Jacobi, i, j, k};
                }
        return std::nullopt;
    }

    static SparseVec unit(int i) { return SparseVec{{i, Rat(1)}}; }

private:
    SuperSpace space_;
    std::vector<std::vector<SparseVec>> bracket_;
    std::vector<int> degrees_;
};

/// Action of a Lie superalgebra on a module, one matrix per basis element.
struct ModuleAction {
    LieSuperalgebra algebra;
    SuperSpace module;
    std::vector<SparseMatrix> rho; // rho[a]: module -> module

    SparseVec act(int a, const SparseVec& v) const { return mat_apply(rho[a], v); }

    static SparseVec mat_apply(const SparseMatrix& m, const SparseVec& v) {
        std::map<int, Rat> acc;
        for (int r = 0; r < m.rows(); ++r)
            for (auto& [c, e] : m.row(r)) {
                Rat x = sv_get(v, c);
                if (!is_zero(x)) acc[r] += e * x;
            }
        SparseVec out;
        for (auto& [r, x] : acc)
            if (!is_zero(x)) out.emplace_back(r, x);
        return out;
    }

    /// rho([x,y]) == rho(x)rho(y) - (-1)^{p(x)p(y)} rho(y)rho(x) on all pairs,
    /// and rho(x) shifts module parity by p(x).
    bool verify() const {
        const int n = algebra.dim();
        for (int a = 0; a < n; ++a)
            for (int r = 0; r < module.dim(); ++r)
                for (auto& [c, e] : rho[a].row(r))
                    if ((module.odd(r) != module.odd(c)) != algebra.odd(a)) return false;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                SparseMatrix lhs(module.dim(), module.dim());
                for (auto& [k, c] : algebra.bracket(a, b)) lhs = lhs + rho[k].scaled(c);
                Rat sign = (algebra.odd(a) && algebra.odd(b)) ? Rat(1) : Rat(-1);
                SparseMatrix rhs = rho[a] * rho[b] + (rho[b] * rho[a]).scaled(sign);
                if (!(lhs == rhs)) return false;
            }
        return true;
    }

    /// Kernel of the action: {x in algebra : rho(x) = 0}.
    Subspace action_kernel() const {
        const int n = algebra.dim();
        const int d = module.dim();
        SparseMatrix sys(d * d, n);
        for (int a = 0; a < n; ++a)
            for (int r = 0; r < d; ++r)
                for (auto& [c, e] : rho[a].row(r)) sys.add(r * d + c, a, e);
        return kernel_basis(sys);
    }

    bool faithful() const { return action_kernel().dim() == 0; }
};

/// Builds an abstract Lie superalgebra from matrices closed under the super
/// commutator: structure constants are recovered by expressing each bracket
/// in the span of the given matrices.
struct MatrixRealization {
    SuperSpace module;                 // underlying column space
    std::vector<BasisVector> elements; // labels/parities/weights of the generators
    std::vector<SparseMatrix> mats;    // one square matrix per generator
};

inline SparseVec vectorize(const SparseMatrix& m) {
    SparseVec v;
    for (int r = 0; r < m.rows(); ++r)
        for (auto& [c, x] : m.row(r)) v.emplace_back(r * m.cols() + c, x);
    return v;
}

inline SparseMatrix super_commutator(const SparseMatrix& x, bool px,
                                     const SparseMatrix& y, bool py) {
    Rat sign = (px && py) ? Rat(1) : Rat(-1);
    return x * y + (y * x).scaled(sign);
}

inline std::pair<LieSuperalgebra, ModuleAction>
algebra_from_matrices(const MatrixRealization& real) {
    const int n = (int)real.mats.size();
    const int N = real.module.dim();
    SparseMatrix rows(0, N * N);
    for (auto& m : real.mats) {
        if (m.rows() != N || m.cols() != N) throw std::invalid_argument("generator shape");
        rows.append_row(vectorize(m));
    }
    Subspace span = Subspace::from_rows(rows);
    if (span.dim() != n) throw std::invalid_argument("generators are linearly dependent");

    SparseMatrix gen_t(N * N, n);
    for (int a = 0; a < n; ++a)
        for (auto& [idx, x] : rows.row(a)) gen_t.add(idx, a, x);
    SolveCache cache(gen_t);

    std::vector<std::vector<SparseVec>> bracket(n, std::vector<SparseVec>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            SparseMatrix br = super_commutator(real.mats[a], real.elements[a].odd,
                                               real.mats[b], real.elements[b].odd);
            auto sol = cache.solve_sparse(vectorize(br));
            if (!sol) throw std::runtime_error("generators are not closed under bracket");
            bracket[a][b] = *sol;
        }

    LieSuperalgebra alg(SuperSpace(real.elements), std::move(bracket));
    ModuleAction act{alg, real.module, real.mats};
    return {std::move(alg), std::move(act)};
}

/// Quotient by a central ideal contained in the kernel of everything we
/// care about; the new basis is the canonical complement of the ideal.
inline LieSuperalgebra quotient_by_ideal(const LieSuperalgebra& a, const Subspace& ideal) {
    Subspace full = Subspace::full(a.dim());
    SparseMatrix comp = complement_rows(ideal, full);
    const int q = comp.rows();

    // coordinates of v in (ideal basis, complement rows): drop ideal part.
    SparseMatrix sys(a.dim(), ideal.dim() + q);
    for (int r = 0; r < ideal.dim(); ++r)
        for (auto& [c, x] : ideal.basis().row(r)) sys.add(c, r, x);
    for (int r = 0; r < q; ++r)
        for (auto& [c, x] : comp.row(r)) sys.add(c, ideal.dim() + r, x);
    SolveCache cache(sys);
    auto comp_coords = [&](const SparseVec& v) {
        auto sol = cache.solve_sparse(v);
        if (!sol) throw std::runtime_error("quotient projection failed");
        SparseVec out;
        for (auto& [r, x] : *sol)
            if (r >= ideal.dim()) out.emplace_back(r - ideal.dim(), x);
        return out;
    };

    std::vector<BasisVector> basis;
    for (int r = 0; r < q; ++r) {
        BasisVector b;
        b.label = "[" + std::to_string(r) + "]";
        b.odd = a.space().parity_of(comp.row(r));
        b.weight = a.space().weight_of(comp.row(r));
        basis.push_back(b);
    }
    std::vector<std::vector<SparseVec>> bracket(q, std::vector<SparseVec>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            bracket[i][j] = comp_coords(a.bracket(comp.row(i), comp.row(j)));
    return LieSuperalgebra(SuperSpace(std::move(basis)), std::move(bracket));
}

} // namespace spencer

#endif
