#ifndef SUPERSPENCER_PROLONG_HPP
#define SUPERSPENCER_PROLONG_HPP

#include "superspencer/grading.hpp"

namespace spencer {

/// One term of the prolongation. Term k >= 1 lives inside
/// (term k-1) ox g_{-1}^*; its basis rows are kept in those "candidate"
/// coordinates (b, j) -> b*dim(g_{-1}) + j, which nest all the way down to
/// g0 ox (g_{-1}^*)^{ox k}.
struct TowerLevel {
    int k = 0; // -1, 0, 1, ...
    int dim = 0;
    std::vector<bool> odd;
    std::vector<Weight> weight;
    SparseMatrix rows;            // k >= 1: dim x (prev.dim * d), RREF
    std::vector<SparseMatrix> act; // per g0 basis element: dim x dim
    std::vector<SparseMatrix> ev;  // per module index: prev.dim x dim ([x, v])
};

class ProlongationTower {
public:
    GradedPair pair;
    std::vector<TowerLevel> levels; // levels[j+1] = term j
    bool stabilized = false;
    int kmax_used = 0;

    const TowerLevel& level(int j) const { return levels.at(j + 1); }
    bool has_level(int j) const { return j + 1 < (int)levels.size() && j >= -1; }

    /// Dimension of g_k; 0 beyond a stabilized tower, throws when the tower
    /// was truncated before k.
    int term_dim(int k) const {
        if (has_level(k)) return level(k).dim;
        if (stabilized) return 0;
        throw std::runtime_error("tower truncated before k = " + std::to_string(k));
    }

    std::vector<int> term_dims() const {
        std::vector<int> out;
        for (auto& l : levels) out.push_back(l.dim);
        return out;
    }

    /// Expansion of term k into g0 ox (g_{-1}^*)^{ox k} coordinates.
    SparseMatrix ambient_rows(int k) const {
        if (k < 1) throw std::invalid_argument("ambient_rows needs k >= 1");
        const int d = pair.module().dim();
        SparseMatrix cur = level(1).rows; // already ambient: g0 ox M*
        long width = (long)pair.g0.dim() * d;
        for (int j = 2; j <= k; ++j) {
            const SparseMatrix& next = level(j).rows;
            SparseMatrix out(next.rows(), (int)(width * d));
            for (int r = 0; r < next.rows(); ++r)
                for (auto& [cj, x] : next.row(r)) {
                    int b = cj / d, jj = cj % d;
                    for (auto& [amb, y] : cur.row(b))
                        out.add(r, (int)((long)amb * d + jj), x * y);
                }
            cur = std::move(out);
            width *= d;
        }
        return cur;
    }
};

namespace detail {

inline void check_homogeneous(TowerLevel& lvl, const std::vector<bool>& codd,
                              const std::vector<Weight>& cweight) {
    for (int r = 0; r < lvl.rows.rows(); ++r) {
        const SparseVec& row = lvl.rows.row(r);
        bool o = codd[row.front().first];
        Weight w = cweight[row.front().first];
        for (auto& [c, x] : row)
            if (codd[c] != o || !(cweight[c] == w))
                throw std::logic_error("prolongation term row is not homogeneous");
        lvl.odd.push_back(o);
        lvl.weight.push_back(w);
    }
}

} // namespace detail

/// g_k = { X in g_{k-1} ox g_{-1}^* :
///         X(v)(w,...) = (-1)^{p(v)p(w)} X(w)(v,...) }.
inline TowerLevel prolong_step(const ProlongationTower& tower) {
    const GradedPair& pair = tower.pair;
    const int d = pair.module().dim();
    const TowerLevel& prev = tower.levels.back();
    const int k = prev.k + 1;
    const int nb = prev.dim;

    // unknowns c_{b,j}; the two trailing tensor slots must be
    // super-symmetric, odd diagonal entries must vanish.
    // expansion(b' , alpha) of prev basis element b in its own candidate
    // coords; for k = 1 the "expansion" is the g0 action matrix.
    auto expansion = [&](int b, int bprev, int alpha) -> Rat {
        if (k == 1) return pair.action.rho[b].get(bprev, alpha);
        return sv_get(prev.rows.row(b), bprev * d + alpha);
    };
    const int nprev = (k == 1) ? d : tower.levels[tower.levels.size() - 2].dim;

    SparseMatrix sys(0, nb * d);
    for (int bp = 0; bp < nprev; ++bp)
        for (int alpha = 0; alpha < d; ++alpha)
            for (int beta = alpha; beta < d; ++beta) {
                bool oa = pair.module().odd(alpha), ob = pair.module().odd(beta);
                if (alpha == beta && !oa) continue;
                SparseVec row;
                if (alpha == beta) {
                    // odd diagonal: T(.., alpha, alpha) = 0
                    for (int b = 0; b < nb; ++b) {
                        Rat e = expansion(b, bp, alpha);
                        if (!is_zero(e)) row.emplace_back(b * d + alpha, e);
                    }
                } else {
                    Rat sign = (oa && ob) ? Rat(-1) : Rat(1);
                    for (int b = 0; b < nb; ++b) {
                        Rat e1 = expansion(b, bp, alpha);
                        if (!is_zero(e1)) row.emplace_back(b * d + beta, e1);
                        Rat e2 = expansion(b, bp, beta);
                        if (!is_zero(e2)) row.emplace_back(b * d + alpha, -sign * e2);
                    }
                }
                sv_normalize(row);
                if (!row.empty()) sys.append_row(std::move(row));
            }

    TowerLevel lvl;
    lvl.k = k;
    lvl.rows = kernel_basis(sys).basis();
    lvl.dim = lvl.rows.rows();

    std::vector<bool> codd(nb * d);
    std::vector<Weight> cweight(nb * d, Weight::zero(pair.eps_rank, pair.delta_rank));
    for (int b = 0; b < nb; ++b)
        for (int j = 0; j < d; ++j) {
            codd[b * d + j] = (prev.odd[b] != pair.module().odd(j));
            cweight[b * d + j] = prev.weight[b] + (-pair.module().weight(j));
        }
    detail::check_homogeneous(lvl, codd, cweight);

    // evaluation maps: [X, v] picks the (b, v) coefficients
    Subspace span = Subspace::from_rows(lvl.rows);
    for (int v = 0; v < d; ++v) {
        SparseMatrix evm(nb, lvl.dim);
        for (int r = 0; r < lvl.dim; ++r)
            for (auto& [c, x] : lvl.rows.row(r))
                if (c % d == v) evm.add(c / d, r, x);
        lvl.ev.push_back(std::move(evm));
    }

    // g0 action: tensor action on candidates, restricted to the span
    const SuperSpace& M = pair.module();
    for (int g = 0; g < pair.g0.dim(); ++g) {
        bool pg = pair.g0.odd(g);
        SparseMatrix act(lvl.dim, lvl.dim);
        for (int r = 0; r < lvl.dim; ++r) {
            SparseVec img;
            for (auto& [c, x] : lvl.rows.row(r)) {
                int b = c / d, j = c % d;
                // (x.B_b) ox e_j*
                for (int bp = 0; bp < nb; ++bp) {
                    Rat e = prev.act[g].get(bp, b);
                    if (!is_zero(e)) sv_axpy(img, x * e, SparseVec{{bp * d + j, Rat(1)}});
                }
                // +/- B_b ox (x.e_j*): rho*(x)[j',j] = -(-1)^{p(x)p_j} rho(x)[j,j']
                Rat koszul = (pg && prev.odd[b]) ? Rat(-1) : Rat(1);
                Rat s = (pg && M.odd(j)) ? Rat(1) : Rat(-1);
                for (auto& [jp, rj] : pair.action.rho[g].row(j))
                    sv_axpy(img, x * koszul * s * rj, SparseVec{{b * d + jp, Rat(1)}});
            }
            auto coords = span.coords_of(img);
            if (!coords) throw std::logic_error("prolongation term not g0-invariant");
            for (int rr = 0; rr < lvl.dim; ++rr)
                if (!is_zero((*coords)[rr])) act.add(rr, r, (*coords)[rr]);
        }
        lvl.act.push_back(std::move(act));
    }
    return lvl;
}

inline ProlongationTower cartan_prolong(const GradedPair& pair, int kmax) {
    if (kmax < 1) throw std::invalid_argument("cartan_prolong needs kmax >= 1");
    ProlongationTower t;
    t.pair = pair;
    t.kmax_used = kmax;

    TowerLevel lm1;
    lm1.k = -1;
    lm1.dim = pair.module().dim();
    for (int i = 0; i < lm1.dim; ++i) {
        lm1.odd.push_back(pair.module().odd(i));
        lm1.weight.push_back(pair.module().weight(i));
    }
    lm1.act = pair.action.rho;
    t.levels.push_back(std::move(lm1));

    TowerLevel l0;
    l0.k = 0;
    l0.dim = pair.g0.dim();
    for (int i = 0; i < l0.dim; ++i) {
        l0.odd.push_back(pair.g0.odd(i));
        l0.weight.push_back(pair.g0.space().weight(i));
    }
    for (int g = 0; g < pair.g0.dim(); ++g) l0.act.push_back(pair.g0.ad(g));
    for (int v = 0; v < pair.module().dim(); ++v) {
        SparseMatrix evm(pair.module().dim(), pair.g0.dim());
        for (int a = 0; a < pair.g0.dim(); ++a)
            for (int r = 0; r < pair.module().dim(); ++r) {
                Rat e = pair.action.rho[a].get(r, v);
                if (!is_zero(e)) evm.add(r, a, e);
            }
        l0.ev.push_back(std::move(evm));
    }
    t.levels.push_back(std::move(l0));

    for (int k = 1; k <= kmax; ++k) {
        TowerLevel next = prolong_step(t);
        bool zero = (next.dim == 0);
        t.levels.push_back(std::move(next));
        if (zero) {
            t.stabilized = true;
            break;
        }
    }
    return t;
}

inline int default_kmax(const GradedPair& pair) { return 2 + pair.module().dim(); }

/// [x, v] for x in term i (level coordinates), v a module basis index.
inline SparseVec tower_bracket(const ProlongationTower& t, int i, const SparseVec& x, int v) {
    if (i == 0) {
        SparseVec out;
        for (auto& [a, c] : x) {
            for (int r = 0; r < t.pair.module().dim(); ++r) {
                Rat e = t.pair.action.rho[a].get(r, v);
                if (!is_zero(e)) sv_axpy(out, c * e, SparseVec{{r, Rat(1)}});
            }
        }
        return out;
    }
    if (i < 1 || !t.has_level(i)) throw std::invalid_argument("tower_bracket: bad level");
    return ModuleAction::mat_apply(t.level(i).ev[v], x);
}

} // namespace spencer

#endif
