#ifndef SUPERSPENCER_SPENCER_HPP
#define SUPERSPENCER_SPENCER_HPP

#include "superspencer/prolong.hpp"

namespace spencer {

/// Super-alternating cochains C^{k,s} = g_{k-s} ox E^s(g_{-1}^*), stored by
/// value on canonical argument tuples: coordinate (b, I) is the value
/// component b on the tuple v_I. Index = b * #tuples + tuple_index.
struct CochainSpace {
    int k = 0, s = 0;
    int coeff_level = 0; // k - s
    int coeff_dim = 0;
    std::vector<std::vector<int>> tuples;
    std::map<std::vector<int>, int> tuple_index;
    int dim = 0;
    std::vector<bool> odd;
    std::vector<Weight> weight;

    int index(int b, int t) const { return b * (int)tuples.size() + t; }
};

inline int level_dim(const ProlongationTower& t, int j) {
    if (j < -1) return 0;
    return t.term_dim(j);
}

inline CochainSpace cochain_space(const ProlongationTower& tower, int k, int s) {
    if (s < 0) throw std::invalid_argument("cochain_space: s < 0");
    CochainSpace c;
    c.k = k;
    c.s = s;
    c.coeff_level = k - s;
    c.coeff_dim = level_dim(tower, c.coeff_level);
    if (c.coeff_dim == 0) return c;
    c.tuples = ext_power_indices(tower.pair.module(), s);
    for (int i = 0; i < (int)c.tuples.size(); ++i) c.tuple_index[c.tuples[i]] = i;
    c.dim = c.coeff_dim * (int)c.tuples.size();
    const TowerLevel& lvl = tower.level(c.coeff_level);
    const SuperSpace& M = tower.pair.module();
    c.odd.resize(c.dim);
    c.weight.assign(c.dim, Weight::zero(tower.pair.eps_rank, tower.pair.delta_rank));
    for (int b = 0; b < c.coeff_dim; ++b)
        for (int t = 0; t < (int)c.tuples.size(); ++t) {
            bool o = lvl.odd[b];
            Weight w = lvl.weight[b];
            for (int i : c.tuples[t]) {
                o = (o != M.odd(i));
                w = w + (-M.weight(i));
            }
            c.odd[c.index(b, t)] = o;
            c.weight[c.index(b, t)] = w;
        }
    return c;
}

/// The Chevalley-Eilenberg differential of the abelian superalgebra g_{-1}
/// with coefficients in the prolongation, restricted to bidegree (k, s):
/// (df)(v_0..v_s) = sum_t (-1)^{s-t} (-1)^{p(v_t) sum_{l>t} p(v_l)}
///                  [f(v_0..^t..v_s), v_t].
inline SparseMatrix spencer_differential(const ProlongationTower& tower, int k, int s,
                                         const CochainSpace& src, const CochainSpace& dst) {
    SparseMatrix D(dst.dim, src.dim);
    if (src.dim == 0 || dst.dim == 0) return D;
    const SuperSpace& M = tower.pair.module();
    const TowerLevel& lvl = tower.level(src.coeff_level); // bracket source level
    for (int tJ = 0; tJ < (int)dst.tuples.size(); ++tJ) {
        const std::vector<int>& J = dst.tuples[tJ];
        for (int t = 0; t <= s; ++t) {
            int v = J[t];
            std::vector<int> K;
            K.reserve(s);
            for (int l = 0; l <= s; ++l)
                if (l != t) K.push_back(J[l]);
            auto itK = src.tuple_index.find(K);
            if (itK == src.tuple_index.end()) throw std::logic_error("missing cochain tuple");
            int suffix = 0;
            for (int l = t + 1; l <= s; ++l) suffix += M.odd(J[l]) ? 1 : 0;
            Rat sign = (((s - t) + (M.odd(v) ? suffix : 0)) % 2 == 0) ? Rat(1) : Rat(-1);
            const SparseMatrix& evm = lvl.ev[v]; // prev.dim x lvl.dim
            for (int bp = 0; bp < evm.rows(); ++bp)
                for (auto& [b, e] : evm.row(bp))
                    D.add(dst.index(bp, tJ), src.index(b, itK->second), sign * e);
        }
    }
    return D;
}

inline SparseMatrix spencer_differential(const ProlongationTower& tower, int k, int s) {
    CochainSpace src = cochain_space(tower, k, s);
    CochainSpace dst = cochain_space(tower, k, s + 1);
    if (src.coeff_level == -1) return SparseMatrix(dst.dim, src.dim); // bracket is zero
    return spencer_differential(tower, k, s, src, dst);
}

/// g0 acting on cochains:
/// (x.c)(v_0..v_{s-1}) = x.(c(v)) -
///   sum_t (-1)^{p(x)(p(c)+p(v_0)+..+p(v_{t-1}))} c(v_0,..,x.v_t,..).
inline SparseMatrix cochain_action(const ProlongationTower& tower, const CochainSpace& c, int g) {
    SparseMatrix A(c.dim, c.dim);
    if (c.dim == 0) return A;
    const SuperSpace& M = tower.pair.module();
    const TowerLevel& lvl = tower.level(c.coeff_level);
    const bool pg = tower.pair.g0.odd(g);

    // coefficient part
    for (int t = 0; t < (int)c.tuples.size(); ++t)
        for (int b = 0; b < c.coeff_dim; ++b)
            for (int bp = 0; bp < c.coeff_dim; ++bp) {
                Rat e = lvl.act[g].get(bp, b);
                if (!is_zero(e)) A.add(c.index(bp, t), c.index(b, t), e);
            }

    // argument part
    SparseMatrix rhoT = tower.pair.action.rho[g].transpose();
    for (int tJ = 0; tJ < (int)c.tuples.size(); ++tJ) {
        const std::vector<int>& J = c.tuples[tJ];
        int prefix = 0;
        for (int t = 0; t < c.s; ++t) {
            for (auto& [r, e] : rhoT.row(J[t])) { // e = rho(g)[r, J[t]]
                std::vector<int> T = J;
                T[t] = r;
                auto sg = sort_tuple_sign(T, M, /*ext=*/true);
                if (!sg) continue;
                auto itK = c.tuple_index.find(T);
                if (itK == c.tuple_index.end()) throw std::logic_error("missing tuple");
                int sumK = 0;
                for (int i : T) sumK += M.odd(i) ? 1 : 0;
                for (int b = 0; b < c.coeff_dim; ++b) {
                    Rat fac = -e * (*sg);
                    if (pg) {
                        int pc = (lvl.odd[b] ? 1 : 0) + sumK + prefix;
                        if (pc % 2 == 1) fac = -fac;
                    }
                    A.add(c.index(b, tJ), c.index(b, itK->second), fac);
                }
            }
            prefix += M.odd(J[t]) ? 1 : 0;
        }
    }
    return A;
}

/// H^{k,s} with an explicit canonical transversal and the induced g0-action
/// on it.
struct CohomologySpace {
    int k = 0, s = 0;
    CochainSpace space;      // the middle cochain space
    Subspace kernel{0};
    Subspace image{0};
    SparseMatrix transversal; // rows span a complement of image in kernel
    int dim = 0;
    std::vector<bool> odd;
    std::vector<Weight> weight;
    std::vector<SparseMatrix> act; // induced g0 action in transversal coords
};

inline CohomologySpace spencer_cohomology(const ProlongationTower& tower, int k, int s,
                                          bool with_action = true) {
    CohomologySpace h;
    h.k = k;
    h.s = s;
    h.space = cochain_space(tower, k, s);
    CochainSpace down = cochain_space(tower, k, s + 1);
    if (h.space.dim == 0) {
        h.kernel = Subspace(0);
        h.image = Subspace(0);
        h.transversal = SparseMatrix(0, 0);
        return h;
    }
    SparseMatrix d_out = (h.space.coeff_level == -1)
                             ? SparseMatrix(down.dim, h.space.dim)
                             : spencer_differential(tower, k, s, h.space, down);
    SparseMatrix d_in(h.space.dim, 0);
    if (s >= 1) {
        CochainSpace up = cochain_space(tower, k, s - 1);
        if (up.dim > 0) d_in = spencer_differential(tower, k, s - 1, up, h.space);
    }
    h.kernel = kernel_basis(d_out);
    h.image = image_basis(d_in);
    if (!h.kernel.contains(h.image))
        throw std::logic_error("spencer complex: image not inside kernel");
    h.transversal = complement_rows(h.image, h.kernel);
    h.dim = h.transversal.rows();

    const int dimC = h.space.dim;
    for (int r = 0; r < h.dim; ++r) {
        const SparseVec& row = h.transversal.row(r);
        bool o = h.space.odd[row.front().first];
        Weight w = h.space.weight[row.front().first];
        for (auto& [cidx, x] : row)
            if (h.space.odd[cidx] != o || !(h.space.weight[cidx] == w))
                throw std::logic_error("cohomology transversal row not homogeneous");
        h.odd.push_back(o);
        h.weight.push_back(w);
    }

    if (with_action && h.dim > 0) {
        // combined basis of the kernel: [image rows | transversal rows]
        SparseMatrix comb(0, dimC);
        for (int r = 0; r < h.image.dim(); ++r) comb.append_row(h.image.basis().row(r));
        for (int r = 0; r < h.dim; ++r) comb.append_row(h.transversal.row(r));
        SolveCache cache(comb.transpose());
        for (int g = 0; g < tower.pair.g0.dim(); ++g) {
            SparseMatrix Ax = cochain_action(tower, h.space, g);
            SparseMatrix m(h.dim, h.dim);
            for (int r = 0; r < h.dim; ++r) {
                SparseVec img = ModuleAction::mat_apply(Ax, h.transversal.row(r));
                auto coords = cache.solve_sparse(img);
                if (!coords)
                    throw std::logic_error("cohomology space is not g0-invariant");
                for (auto& [i, x] : *coords)
                    if (i >= h.image.dim()) m.add(i - h.image.dim(), r, x);
            }
            h.act.push_back(std::move(m));
        }
    }
    return h;
}

/// Alternating sums of cochain and cohomology dimensions agree along the
/// whole row complex (telescoping of rank-nullity).
inline bool euler_check(const ProlongationTower& tower, int k) {
    long lhs = 0, rhs = 0;
    for (int s = 0; s <= k + 1; ++s) {
        CochainSpace c = cochain_space(tower, k, s);
        CohomologySpace h = spencer_cohomology(tower, k, s, /*with_action=*/false);
        long sign = (s % 2 == 0) ? 1 : -1;
        lhs += sign * c.dim;
        rhs += sign * h.dim;
    }
    return lhs == rhs;
}

} // namespace spencer

#endif
