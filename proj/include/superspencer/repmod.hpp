#ifndef SUPERSPENCER_REPMOD_HPP
#define SUPERSPENCER_REPMOD_HPP

#include "superspencer/spencer.hpp"

namespace spencer {

/// A finite-dimensional g0-module in explicit coordinates: the common
/// currency of the analysis layer. Every coordinate is weight and parity
/// homogeneous.
struct RepSpace {
    const GradedPair* pair = nullptr;
    int dim = 0;
    std::vector<bool> odd;
    std::vector<Weight> weight;
    std::vector<SparseMatrix> act;
};

inline RepSpace rep_of_cohomology(const GradedPair& pair, const CohomologySpace& h) {
    RepSpace r;
    r.pair = &pair;
    r.dim = h.dim;
    r.odd = h.odd;
    r.weight = h.weight;
    r.act = h.act;
    return r;
}

inline RepSpace rep_of_module(const GradedPair& pair) {
    RepSpace r;
    r.pair = &pair;
    r.dim = pair.module().dim();
    for (int i = 0; i < r.dim; ++i) {
        r.odd.push_back(pair.module().odd(i));
        r.weight.push_back(pair.module().weight(i));
    }
    r.act = pair.action.rho;
    return r;
}

inline RepSpace rep_of_cochain_space(const GradedPair& pair, const ProlongationTower& tower,
                                     const CochainSpace& c) {
    RepSpace r;
    r.pair = &pair;
    r.dim = c.dim;
    r.odd = c.odd;
    r.weight = c.weight;
    for (int g = 0; g < pair.g0.dim(); ++g) r.act.push_back(cochain_action(tower, c, g));
    return r;
}

inline std::map<Weight, int> weight_multiplicities(const RepSpace& r) {
    std::map<Weight, int> out;
    for (int i = 0; i < r.dim; ++i) out[r.weight[i]]++;
    return out;
}

/// Joint kernel of the raising operators (basis rows, canonical and
/// homogeneous).
inline Subspace highest_vector_space(const RepSpace& r) {
    std::vector<int> raisers = r.pair->raising_indices();
    SparseMatrix sys(0, r.dim);
    for (int g : raisers)
        for (int row = 0; row < r.dim; ++row)
            if (!r.act[g].row(row).empty()) sys.append_row(r.act[g].row(row));
    return kernel_basis(sys);
}

inline Subspace generate_submodule(const RepSpace& r, const SparseVec& v) {
    Echelon e(r.dim);
    std::vector<SparseVec> work;
    if (e.add_row(v)) work.push_back(v);
    while (!work.empty()) {
        SparseVec cur = std::move(work.back());
        work.pop_back();
        for (auto& m : r.act) {
            SparseVec img = ModuleAction::mat_apply(m, cur);
            if (e.add_row(img)) work.push_back(std::move(img));
        }
    }
    return Subspace::from_echelon(e);
}

inline void rep_rows_metadata(const RepSpace& parent, const SparseMatrix& rows,
                              std::vector<bool>& odd, std::vector<Weight>& weight) {
    for (int r = 0; r < rows.rows(); ++r) {
        const SparseVec& row = rows.row(r);
        bool o = parent.odd[row.front().first];
        Weight w = parent.weight[row.front().first];
        for (auto& [c, x] : row)
            if (parent.odd[c] != o || !(parent.weight[c] == w))
                throw std::logic_error("rep subspace row not homogeneous");
        odd.push_back(o);
        weight.push_back(w);
    }
}

/// Restriction of the action to an invariant subspace, in the coordinates
/// of its RREF basis.
inline RepSpace subrep(const RepSpace& r, const Subspace& s) {
    RepSpace out;
    out.pair = r.pair;
    out.dim = s.dim();
    rep_rows_metadata(r, s.basis(), out.odd, out.weight);
    for (auto& m : r.act) {
        SparseMatrix a(out.dim, out.dim);
        for (int c = 0; c < out.dim; ++c) {
            SparseVec img = ModuleAction::mat_apply(m, s.basis().row(c));
            auto coords = s.coords_of(img);
            if (!coords) throw std::invalid_argument("subspace is not action-invariant");
            for (int rr = 0; rr < out.dim; ++rr)
                if (!is_zero((*coords)[rr])) a.add(rr, c, (*coords)[rr]);
        }
        out.act.push_back(std::move(a));
    }
    return out;
}

/// Quotient by an invariant subspace, in the coordinates of the canonical
/// complement; `lift` returns the complement rows.
inline RepSpace quotient_rep(const RepSpace& r, const Subspace& s, SparseMatrix* lift_out) {
    SparseMatrix comp = complement_rows(s, Subspace::full(r.dim));
    if (lift_out) *lift_out = comp;
    RepSpace out;
    out.pair = r.pair;
    out.dim = comp.rows();
    rep_rows_metadata(r, comp, out.odd, out.weight);
    SparseMatrix comb(0, r.dim);
    for (int i = 0; i < s.dim(); ++i) comb.append_row(s.basis().row(i));
    for (int i = 0; i < comp.rows(); ++i) comb.append_row(comp.row(i));
    SolveCache cache(comb.transpose());
    for (auto& m : r.act) {
        SparseMatrix a(out.dim, out.dim);
        for (int c = 0; c < out.dim; ++c) {
            SparseVec img = ModuleAction::mat_apply(m, comp.row(c));
            auto coords = cache.solve_sparse(img);
            if (!coords) throw std::logic_error("quotient projection failed");
            for (auto& [i, x] : *coords)
                if (i >= s.dim()) a.add(i - s.dim(), c, x);
        }
        out.act.push_back(std::move(a));
    }
    return out;
}

/// Split iff an equivariant projection ambient -> sub restricting to the
/// identity exists; decided by one exact linear solve.
inline bool detect_splitting(const RepSpace& ambient, const Subspace& sub) {
    RepSpace s = subrep(ambient, sub); // also validates invariance
    const int m = s.dim, n = ambient.dim;
    if (m == 0 || m == n) return true;
    // unknowns pi[t][a] indexed t*n + a
    SparseMatrix sys(0, m * n);
    std::vector<Rat> rhs;
    for (size_t g = 0; g < ambient.act.size(); ++g) {
        const SparseMatrix AT = ambient.act[g].transpose();
        for (int t = 0; t < m; ++t)
            for (int c = 0; c < n; ++c) {
                SparseVec row;
                for (auto& [a, e] : AT.row(c)) row.emplace_back(t * n + a, e); // pi[t][a] A[a][c]
                for (int tp = 0; tp < m; ++tp) {
                    Rat e = s.act[g].get(t, tp);
                    if (!is_zero(e)) row.emplace_back(tp * n + c, -e);
                }
                sv_normalize(row);
                if (!row.empty()) {
                    sys.append_row(std::move(row));
                    rhs.push_back(Rat(0));
                }
            }
    }
    for (int t = 0; t < m; ++t)
        for (int u = 0; u < m; ++u) {
            SparseVec row;
            for (auto& [a, e] : sub.basis().row(u)) row.emplace_back(t * n + a, e);
            sys.append_row(std::move(row));
            rhs.push_back(t == u ? Rat(1) : Rat(0));
        }
    return (bool)solve(sys, rhs);
}

struct CompositionFactor {
    Weight weight;
    int dim = 0;
    bool odd = false;
};

struct CompositionReport {
    int dim = 0;
    std::map<Weight, int> weight_mult;
    std::vector<CompositionFactor> factors;
    std::vector<bool> split_flags; // adjacent pairs, size = factors.size()-1
    std::vector<std::pair<Weight, SparseVec>> highest; // of the whole module
    std::vector<bool> highest_odd;
};

namespace detail {

/// Highest-vector rows ordered by weight, lexicographically largest first.
inline std::vector<SparseVec> ordered_hvs(const RepSpace& r) {
    Subspace hv = highest_vector_space(r);
    std::vector<SparseVec> rows;
    for (int i = 0; i < hv.dim(); ++i) rows.push_back(hv.basis().row(i));
    std::stable_sort(rows.begin(), rows.end(), [&](const SparseVec& a, const SparseVec& b) {
        return r.weight[b.front().first] < r.weight[a.front().first];
    });
    return rows;
}

/// Minimal highest-vector-generated (hence irreducible) submodule.
inline Subspace minimal_irreducible(const RepSpace& r) {
    if (r.dim == 0) return Subspace(0);
    auto hvs = ordered_hvs(r);
    if (hvs.empty()) throw std::runtime_error("nonzero module with no highest vector");
    Subspace F = generate_submodule(r, hvs.front());
    for (;;) {
        RepSpace fr = subrep(r, F);
        auto inner = ordered_hvs(fr);
        bool shrunk = false;
        for (auto& v : inner) {
            Subspace G = generate_submodule(fr, v);
            if (G.dim() < fr.dim) {
                // lift back to the coordinates of r
                SparseMatrix rows(0, r.dim);
                for (int i = 0; i < G.dim(); ++i) {
                    SparseVec amb;
                    for (auto& [c, x] : G.basis().row(i)) sv_axpy(amb, x, F.basis().row(c));
                    rows.append_row(std::move(amb));
                }
                F = Subspace::from_rows(rows);
                shrunk = true;
                break;
            }
        }
        if (!shrunk) return F;
    }
}

inline CompositionFactor factor_data(const RepSpace& r, const Subspace& F) {
    RepSpace fr = subrep(r, F);
    auto hvs = ordered_hvs(fr);
    if (hvs.empty()) throw std::logic_error("irreducible factor without highest vector");
    CompositionFactor f;
    f.weight = fr.weight[hvs.front().front().first];
    f.dim = F.dim();
    f.odd = fr.odd[hvs.front().front().first];
    return f;
}

} // namespace detail

inline CompositionReport composition_report(const RepSpace& r) {
    CompositionReport rep;
    rep.dim = r.dim;
    rep.weight_mult = weight_multiplicities(r);
    {
        Subspace hv = highest_vector_space(r);
        for (int i = 0; i < hv.dim(); ++i) {
            const SparseVec& row = hv.basis().row(i);
            rep.highest.emplace_back(r.weight[row.front().first], row);
            rep.highest_odd.push_back(r.odd[row.front().first]);
        }
    }
    std::vector<Subspace> filtration; // strictly increasing, ending at full
    Subspace S(r.dim);
    while (S.dim() < r.dim) {
        SparseMatrix lift;
        RepSpace Q = quotient_rep(r, S, &lift);
        Subspace F = detail::minimal_irreducible(Q);
        rep.factors.push_back(detail::factor_data(Q, F));
        SparseMatrix rows(0, r.dim);
        for (int i = 0; i < S.dim(); ++i) rows.append_row(S.basis().row(i));
        for (int i = 0; i < F.dim(); ++i) {
            SparseVec amb;
            for (auto& [c, x] : F.basis().row(i)) sv_axpy(amb, x, lift.row(c));
            rows.append_row(std::move(amb));
        }
        S = Subspace::from_rows(rows);
        filtration.push_back(S);
    }
    // splitness of adjacent factors inside S_{i+1}/S_{i-1}
    for (size_t i = 0; i + 1 < rep.factors.size(); ++i) {
        Subspace below = (i == 0) ? Subspace(r.dim) : filtration[i - 1];
        SparseMatrix lift;
        RepSpace Q = quotient_rep(r, below, &lift);
        // images of S_{i} and S_{i+1} in Q
        SolveCache cache = [&] {
            SparseMatrix comb(0, r.dim);
            for (int j = 0; j < below.dim(); ++j) comb.append_row(below.basis().row(j));
            for (int j = 0; j < lift.rows(); ++j) comb.append_row(lift.row(j));
            return SolveCache(comb.transpose());
        }();
        auto project = [&](const Subspace& W) {
            SparseMatrix rows(0, Q.dim);
            for (int j = 0; j < W.dim(); ++j) {
                auto coords = cache.solve_sparse(W.basis().row(j));
                if (!coords) throw std::logic_error("projection failed");
                SparseVec v;
                for (auto& [c, x] : *coords)
                    if (c >= below.dim()) v.emplace_back(c - below.dim(), x);
                rows.append_row(std::move(v));
            }
            return Subspace::from_rows(rows);
        };
        Subspace midQ = project(filtration[i]);
        Subspace topQ = project(filtration[i + 1]);
        RepSpace W = subrep(Q, topQ);
        // mid inside W coordinates
        SparseMatrix midrows(0, W.dim);
        for (int j = 0; j < midQ.dim(); ++j) {
            auto coords = topQ.coords_of(midQ.basis().row(j));
            if (!coords) throw std::logic_error("filtration inclusion failed");
            midrows.append_row(sv_from_dense(*coords));
        }
        rep.split_flags.push_back(detect_splitting(W, Subspace::from_rows(midrows)));
    }
    return rep;
}

// ---------------------------------------------------------------------
// Dimension formula for irreducible sl(n)-modules:
// dim V_lambda = prod_{i=1}^{n-1} prod_{j=1}^{n-i} (1 + (k_i - k_{i+j})/j).
// ---------------------------------------------------------------------

inline Int weyl_dim(const std::vector<Rat>& k) {
    const int n = (int)k.size();
    for (int i = 0; i + 1 < n; ++i)
        if (k[i] < k[i + 1]) throw std::invalid_argument("weyl_dim: weight is not dominant");
    Rat dim(1);
    for (int i = 0; i < n - 1; ++i)
        for (int j = 1; j <= n - 1 - i; ++j) dim *= Rat(1) + (k[i] - k[i + j]) / Rat(j);
    if (dim.get_den() != 1 || sgn(dim) <= 0) throw std::logic_error("weyl_dim: non-integer result");
    return dim.get_num();
}

inline Int product_dim(const Weight& w) { return weyl_dim(w.eps) * weyl_dim(w.delta); }

} // namespace spencer

#endif
