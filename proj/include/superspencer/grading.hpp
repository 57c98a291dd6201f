#ifndef SUPERSPENCER_GRADING_HPP
#define SUPERSPENCER_GRADING_HPP

#include "superspencer/algebras.hpp"

namespace spencer {

/// The input to the prolongation engine: g0 together with its action on
/// g_{-1}, the distinguished central generators (dropped by `reduced`),
/// and the faithfulness data (computed, never assumed).
struct GradedPair {
    LieSuperalgebra g0;
    ModuleAction action; // g0 on g_{-1}
    std::string provenance;
    std::vector<SparseVec> central; // central elements in g0 coordinates
    Subspace action_kernel{0};
    bool faithful = false;
    int eps_rank = 0, delta_rank = 0;

    const SuperSpace& module() const { return action.module; }

    /// g0 basis indices acting as raising operators: lex-positive weight.
    std::vector<int> raising_indices() const {
        std::vector<int> out;
        Weight zero = Weight::zero(eps_rank, delta_rank);
        for (int i = 0; i < g0.dim(); ++i)
            if (zero < g0.space().weight(i)) out.push_back(i);
        return out;
    }
};

inline GradedPair finish_pair(LieSuperalgebra g0, ModuleAction action, std::string label,
                              std::vector<SparseVec> central, int eps_rank, int delta_rank) {
    GradedPair p{std::move(g0), std::move(action), std::move(label), std::move(central),
                 Subspace(0), false, eps_rank, delta_rank};
    if (!p.action.verify()) throw std::logic_error(p.provenance + ": representation identity fails");
    p.action_kernel = p.action.action_kernel();
    p.faithful = (p.action_kernel.dim() == 0);
    return p;
}

/// Extracts (g_{-1}, g_0) from a Z-graded algebra whose basis is aligned
/// with the grading; the action is the bracket.
inline GradedPair pair_from_graded_algebra(const LieSuperalgebra& g, const std::string& label,
                                           const std::vector<SparseVec>& central_in_g,
                                           int eps_rank, int delta_rank) {
    std::vector<int> I0 = g.indices_of_degree(0);
    std::vector<int> Im = g.indices_of_degree(-1);
    std::vector<int> back(g.dim(), -1);
    for (int i = 0; i < (int)I0.size(); ++i) back[I0[i]] = i;
    std::vector<int> backm(g.dim(), -1);
    for (int i = 0; i < (int)Im.size(); ++i) backm[Im[i]] = i;

    std::vector<BasisVector> b0, bm;
    for (int i : I0) b0.push_back(g.space().basis()[i]);
    for (int i : Im) bm.push_back(g.space().basis()[i]);

    auto project = [&](const SparseVec& v, const std::vector<int>& backmap) {
        SparseVec out;
        for (auto& [k, x] : v) {
            if (backmap[k] < 0) throw std::logic_error("grading closure violated");
            out.emplace_back(backmap[k], x);
        }
        sv_normalize(out);
        return out;
    };

    const int n0 = (int)I0.size();
    std::vector<std::vector<SparseVec>> br(n0, std::vector<SparseVec>(n0));
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n0; ++j) br[i][j] = project(g.bracket(I0[i], I0[j]), back);
    LieSuperalgebra g0(SuperSpace(std::move(b0)), std::move(br));

    ModuleAction act{g0, SuperSpace(std::move(bm)), {}};
    for (int a = 0; a < n0; ++a) {
        SparseMatrix m((int)Im.size(), (int)Im.size());
        for (int c = 0; c < (int)Im.size(); ++c)
            for (auto& [k, x] : g.bracket(I0[a], Im[c])) {
                if (backm[k] < 0) throw std::logic_error("grading closure violated");
                m.add(backm[k], c, x);
            }
        act.rho.push_back(std::move(m));
    }

    std::vector<SparseVec> central;
    for (auto& c : central_in_g) {
        SparseVec v;
        for (auto& [k, x] : c) {
            if (back[k] < 0) throw std::logic_error("central element not in degree 0");
            v.emplace_back(back[k], x);
        }
        sv_normalize(v);
        central.push_back(std::move(v));
    }
    return finish_pair(std::move(g0), std::move(act), label, std::move(central), eps_rank,
                       delta_rank);
}

// ---------------------------------------------------------------------
// Odd-metric family: pairs (V(n|n), g0) with g0 one of pe(n), spe(n),
// cpe(n), cspe(n), spe(n) + <a tau + b z>.
// ---------------------------------------------------------------------

enum class PeKind { Pe, Spe, Cpe, Cspe, Ext };

inline GradedPair pe_pair(PeKind kind, int n, const Rat& a = Rat(0), const Rat& b = Rat(0)) {
    std::pair<LieSuperalgebra, ModuleAction> built = [&] {
        switch (kind) {
        case PeKind::Pe: return build_pe(n);
        case PeKind::Spe: return build_spe(n);
        case PeKind::Cpe: return build_cpe(n);
        case PeKind::Cspe: return build_pe_extension(n, Rat(0), Rat(1));
        case PeKind::Ext: return build_pe_extension(n, a, b);
        }
        throw std::logic_error("unreachable");
    }();
    std::string label;
    switch (kind) {
    case PeKind::Pe: label = "pe:" + std::to_string(n); break;
    case PeKind::Spe: label = "spe:" + std::to_string(n); break;
    case PeKind::Cpe: label = "cpe:" + std::to_string(n); break;
    case PeKind::Cspe: label = "cspe:" + std::to_string(n); break;
    case PeKind::Ext:
        label = "pe-ext:" + std::to_string(n) + ":" + a.get_str() + ":" + b.get_str();
        break;
    }
    std::vector<SparseVec> central;
    if (kind == PeKind::Cpe || kind == PeKind::Cspe) {
        // z is the last basis element in both constructions
        central.push_back(SparseVec{{built.first.dim() - 1, Rat(1)}});
    }
    return finish_pair(std::move(built.first), std::move(built.second), label, std::move(central),
                       n, 0);
}

// ---------------------------------------------------------------------
// Depth-1 gradings of sl(m|n) / psl(n|n).
//
// The module V(m|n) is reordered into two blocks W1 = (m-p|q) and
// W2 = (p|n-q); eps indexes the whole first block, delta the second.
// g_{-1} = Hom(W1, W2) = W2 ox W1*, g0 = c(sl(W1) + sl(W2)).
// ---------------------------------------------------------------------

struct SlGradingSpec {
    int m, n, p, q;
    bool force_keep_center = false; // the standard grading keeps z even for m = n
};

inline LieSuperalgebra build_sl_graded(const SlGradingSpec& s, std::vector<int>& zc_index) {
    const int d1 = (s.m - s.p) + s.q;
    const int d2 = s.p + (s.n - s.q);
    if (s.p < 0 || s.p > s.m || s.q < 0 || s.q > s.n || d1 == 0 || d2 == 0)
        throw std::invalid_argument("degenerate block split for sl grading");
    const int N = d1 + d2;

    std::vector<BasisVector> mod;
    auto add = [&](bool odd, int block, int pos_in_block, const char* nm, int i) {
        Weight w = Weight::zero(d1, d2);
        (block == 0 ? w.eps : w.delta)[pos_in_block] = 1;
        mod.push_back({std::string(nm) + std::to_string(i + 1), odd, w});
    };
    for (int i = 0; i < s.m - s.p; ++i) add(false, 0, i, "e", i);
    for (int i = 0; i < s.q; ++i) add(true, 0, s.m - s.p + i, "f", i);
    for (int i = 0; i < s.p; ++i) add(false, 1, i, "e'", i);
    for (int i = 0; i < s.n - s.q; ++i) add(true, 1, s.p + i, "f'", i);
    SuperSpace V(std::move(mod));

    auto block_of = [&](int i) { return i < d1 ? 0 : 1; };
    MatrixRealization real;
    real.module = V;
    std::vector<int> degrees;
    // within-block off-diagonal units
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (i == j || block_of(i) != block_of(j)) continue;
            real.elements.push_back({idx2("E", i + 1, j + 1), V.odd(i) != V.odd(j),
                                     V.weight(i) + (-V.weight(j))});
            real.mats.push_back(matrix_unit(N, i, j));
            degrees.push_back(0);
        }
    // traceless diagonals per block
    auto add_diag = [&](int from, int to, const char* head) {
        auto hs = traceless_diagonals(V, from, to);
        for (size_t k = 0; k < hs.size(); ++k) {
            real.elements.push_back({std::string(head) + std::to_string(k + 1), false,
                                     Weight::zero(d1, d2)});
            real.mats.push_back(hs[k]);
            degrees.push_back(0);
        }
    };
    add_diag(0, d1, "H");
    add_diag(d1, N, "H'");
    // the remaining supertraceless diagonal direction
    {
        int s1 = 0, s2 = 0;
        for (int i = 0; i < d1; ++i) s1 += V.odd(i) ? -1 : 1;
        for (int i = d1; i < N; ++i) s2 += V.odd(i) ? -1 : 1;
        SparseMatrix z(N, N);
        if (s.m != s.n) {
            // normalized to act as the identity on g_{-1} = Hom(W1, W2)
            Rat alpha = frac(-s2, s.m - s.n), beta = frac(s1, s.m - s.n);
            for (int i = 0; i < d1; ++i) z.set(i, i, alpha);
            for (int i = d1; i < N; ++i) z.set(i, i, beta);
        } else {
            z = SparseMatrix::identity(N);
        }
        zc_index.push_back((int)real.mats.size());
        real.elements.push_back({"zc", false, Weight::zero(d1, d2)});
        real.mats.push_back(std::move(z));
        degrees.push_back(0);
    }
    // cross blocks: Hom(W1,W2) has degree -1
    for (int i = d1; i < N; ++i)
        for (int j = 0; j < d1; ++j) {
            real.elements.push_back({idx2("E", i + 1, j + 1), V.odd(i) != V.odd(j),
                                     V.weight(i) + (-V.weight(j))});
            real.mats.push_back(matrix_unit(N, i, j));
            degrees.push_back(-1);
        }
    for (int i = 0; i < d1; ++i)
        for (int j = d1; j < N; ++j) {
            real.elements.push_back({idx2("E", i + 1, j + 1), V.odd(i) != V.odd(j),
                                     V.weight(i) + (-V.weight(j))});
            real.mats.push_back(matrix_unit(N, i, j));
            degrees.push_back(1);
        }
    auto [alg, act] = algebra_from_matrices(real);
    alg.set_grading(std::move(degrees));
    return alg;
}

/// Drops a central basis element: the quotient map just forgets that
/// coordinate. Requires [x_idx, -] = 0.
inline LieSuperalgebra drop_central_basis_element(const LieSuperalgebra& a, int idx) {
    for (int j = 0; j < a.dim(); ++j)
        if (!a.bracket(idx, j).empty())
            throw std::invalid_argument("drop_central_basis_element: element is not central");
    std::vector<BasisVector> basis;
    std::vector<int> keep, back(a.dim(), -1);
    for (int i = 0; i < a.dim(); ++i)
        if (i != idx) {
            back[i] = (int)keep.size();
            keep.push_back(i);
            basis.push_back(a.space().basis()[i]);
        }
    const int q = (int)keep.size();
    std::vector<std::vector<SparseVec>> br(q, std::vector<SparseVec>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            SparseVec v;
            for (auto& [k, x] : a.bracket(keep[i], keep[j]))
                if (k != idx) v.emplace_back(back[k], x);
            sv_normalize(v);
            br[i][j] = std::move(v);
        }
    LieSuperalgebra out(SuperSpace(std::move(basis)), std::move(br));
    if (a.has_grading()) {
        std::vector<int> deg;
        for (int i : keep) deg.push_back(a.degree(i));
        out.set_grading(std::move(deg));
    }
    return out;
}

inline GradedPair sl_depth1_pair(int m, int n, int p, int q) {
    SlGradingSpec spec{m, n, p, q, (p == 0 && q == 0)};
    std::vector<int> zc;
    LieSuperalgebra g = build_sl_graded(spec, zc);
    std::string label = (p == 0 && q == 0)
                            ? "sl-std:" + std::to_string(m) + ":" + std::to_string(n)
                            : "sl-d1:" + std::to_string(m) + ":" + std::to_string(n) + ":" +
                                  std::to_string(p) + ":" + std::to_string(q);
    const int d1 = (m - p) + q, d2 = p + (n - q);
    if (m == n && !spec.force_keep_center) {
        // psl(n|n): the depth-1 gradings of sl(n|n) with p,q != 0 are carried
        // by the simple quotient; zc = 1_{2n} is dropped.
        LieSuperalgebra pg = drop_central_basis_element(g, zc.at(0));
        return pair_from_graded_algebra(pg, label, {}, d1, d2);
    }
    std::vector<SparseVec> central{SparseVec{{zc.at(0), Rat(1)}}};
    return pair_from_graded_algebra(g, label, central, d1, d2);
}

inline GradedPair sl_standard_pair(int m, int n) { return sl_depth1_pair(m, n, 0, 0); }

// ---------------------------------------------------------------------
// Queer grassmannians: g0 = ps(q(p) + q(n-p)) acting on one of the two
// irreducible halves of V(p|p)* ox V(n-p|n-p).
// ---------------------------------------------------------------------

inline GradedPair q_pair(int n, int p, int sign) {
    if (p < 1 || p >= n) throw std::invalid_argument("q grading needs 1 <= p < n");
    const int r1 = p, r2 = n - p;
    auto [q1, act1] = build_q(r1, false); // eps weights
    auto [q2, act2] = build_q(r2, true);  // delta weights

    auto lift = [&](bool second, const Weight& w) {
        Weight out = Weight::zero(r1, r2);
        if (!second)
            out.eps = w.eps;
        else
            out.delta = w.delta;
        return out;
    };
    LieSuperalgebra sum = direct_sum(q1, q2, lift);

    // remap the factor modules to the common (eps, delta) ranks
    auto remap = [&](const SuperSpace& sp, bool second) {
        std::vector<BasisVector> b;
        for (auto& v : sp.basis()) b.push_back({v.label + (second ? "''" : "'"), v.odd,
                                                lift(second, v.weight)});
        return SuperSpace(std::move(b));
    };
    SuperSpace V1(remap(act1.module, false)), V2(remap(act2.module, true));

    // actions of the direct sum on V1* and V2
    ModuleAction a1{sum, V1, {}};
    ModuleAction a2{sum, V2, {}};
    for (int a = 0; a < sum.dim(); ++a) {
        a1.rho.push_back(a < q1.dim() ? act1.rho[a] : SparseMatrix(V1.dim(), V1.dim()));
        a2.rho.push_back(a >= q1.dim() ? act2.rho[a - q1.dim()]
                                       : SparseMatrix(V2.dim(), V2.dim()));
    }
    ModuleAction W = tensor_action(dual_action(a1), a2);

    // Pi ox Pi with the normalization that squares to +1:
    // S: e* <-> f* on V1*, T = J: e -> -f, f -> e on V2.
    const int n1 = V1.dim(), n2 = V2.dim();
    SparseMatrix S(n1, n1), T(n2, n2);
    for (int i = 0; i < r1; ++i) {
        S.set(r1 + i, i, Rat(1));
        S.set(i, r1 + i, Rat(1));
    }
    for (int j = 0; j < r2; ++j) {
        T.set(r2 + j, j, Rat(-1));
        T.set(j, r2 + j, Rat(1));
    }
    SparseMatrix Pi(n1 * n2, n1 * n2);
    SuperSpace V1d = dual_space(V1);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) {
            Rat koszul = V1d.odd(i) ? Rat(-1) : Rat(1); // (S ox T)(u ox v), p(T) = 1
            for (int r = 0; r < n1; ++r) {
                Rat sv = S.get(r, i);
                if (is_zero(sv)) continue;
                for (int t = 0; t < n2; ++t) {
                    Rat tv = T.get(t, j);
                    if (!is_zero(tv)) Pi.add(r * n2 + t, i * n2 + j, koszul * sv * tv);
                }
            }
        }
    if (!(Pi * Pi == SparseMatrix::identity(n1 * n2)))
        throw std::logic_error("q grading: involution does not square to one");

    // restrict to s(q(p)+q(n-p)): replace the odd diagonals by otr-balanced
    // combinations, and make the even identity a basis element for the
    // central quotient.
    std::vector<SparseVec> newbasis;
    std::vector<std::string> labels;
    auto unit = [&](int i) { return SparseVec{{i, Rat(1)}}; };
    int off2 = q1.dim();
    auto q_index = [&](int which, const char* head, int i, int j) {
        // build_q interleaves A_{ij}, B_{ij}; A at even position
        int k = (which == 0 ? r1 : r2);
        int base = (which == 0 ? 0 : off2);
        int pos = 2 * ((i - 1) * k + (j - 1)) + (head[0] == 'B' ? 1 : 0);
        return base + pos;
    };
    int z_position = -1;
    for (int w = 0; w < 2; ++w) {
        int k = (w == 0 ? r1 : r2);
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j) {
                if (i == j) continue;
                newbasis.push_back(unit(q_index(w, "A", i, j)));
                labels.push_back((w ? "A''" : "A'") + std::to_string(i) + "," + std::to_string(j));
                newbasis.push_back(unit(q_index(w, "B", i, j)));
                labels.push_back((w ? "B''" : "B'") + std::to_string(i) + "," + std::to_string(j));
            }
    }
    // even diagonals: traceless within each factor, then the global identity
    for (int w = 0; w < 2; ++w) {
        int k = (w == 0 ? r1 : r2);
        for (int i = 1; i < k; ++i) {
            SparseVec v = unit(q_index(w, "A", i, i));
            sv_axpy(v, Rat(-1), unit(q_index(w, "A", i + 1, i + 1)));
            newbasis.push_back(std::move(v));
            labels.push_back((w ? "HA''" : "HA'") + std::to_string(i));
        }
    }
    {
        SparseVec z;
        for (int i = 1; i <= r1; ++i) sv_axpy(z, Rat(1), unit(q_index(0, "A", i, i)));
        for (int i = 1; i <= r2; ++i) sv_axpy(z, Rat(1), unit(q_index(1, "A", i, i)));
        z_position = (int)newbasis.size();
        newbasis.push_back(std::move(z));
        labels.push_back("z");
    }
    // odd diagonals with otr q(p) + otr q(n-p) = 0
    {
        SparseVec last = unit(q_index(1, "B", r2, r2));
        for (int i = 1; i <= r1; ++i) {
            SparseVec v = unit(q_index(0, "B", i, i));
            sv_axpy(v, Rat(-1), last);
            newbasis.push_back(std::move(v));
            labels.push_back("d'" + std::to_string(i));
        }
        for (int i = 1; i < r2; ++i) {
            SparseVec v = unit(q_index(1, "B", i, i));
            sv_axpy(v, Rat(-1), last);
            newbasis.push_back(std::move(v));
            labels.push_back("d''" + std::to_string(i));
        }
    }

    // structure constants of the restricted algebra
    const int ns = (int)newbasis.size();
    SparseMatrix gen_t(sum.dim(), ns);
    for (int a = 0; a < ns; ++a)
        for (auto& [k, x] : newbasis[a]) gen_t.add(k, a, x);
    SolveCache cache(gen_t);
    std::vector<BasisVector> sbasis;
    for (int a = 0; a < ns; ++a)
        sbasis.push_back({labels[a], sum.space().parity_of(newbasis[a]),
                          sum.space().weight_of(newbasis[a])});
    std::vector<std::vector<SparseVec>> sbr(ns, std::vector<SparseVec>(ns));
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < ns; ++j) {
            auto sol = cache.solve_sparse(sum.bracket(newbasis[i], newbasis[j]));
            if (!sol) throw std::logic_error("s(q+q) is not closed under bracket");
            sbr[i][j] = *sol;
        }
    LieSuperalgebra salg(SuperSpace(std::move(sbasis)), std::move(sbr));

    // action of the restricted algebra on the tensor module
    std::vector<SparseMatrix> srho;
    for (int a = 0; a < ns; ++a) {
        SparseMatrix mrho(n1 * n2, n1 * n2);
        for (auto& [k, x] : newbasis[a]) mrho = mrho + W.rho[k].scaled(x);
        srho.push_back(std::move(mrho));
    }
    // check the involution is equivariant, then cut the eigenspace
    for (int a = 0; a < ns; ++a)
        if (!(srho[a] * Pi == Pi * srho[a]))
            throw std::logic_error("q grading: involution is not equivariant");

    SparseMatrix proj = Pi;
    {
        SparseMatrix one = SparseMatrix::identity(n1 * n2);
        proj = (sign > 0) ? (one - Pi) : (one + Pi); // kernel = +/- eigenspace
    }
    Subspace eig = kernel_basis(proj);

    // quotient by the central identity, which acts as zero on the module
    LieSuperalgebra psalg = drop_central_basis_element(salg, z_position);
    std::vector<SparseMatrix> psrho;
    for (int a = 0; a < ns; ++a)
        if (a != z_position) psrho.push_back(srho[a]);

    // module = eigenspace rows
    SuperSpace Wspace = W.module;
    std::vector<BasisVector> mb;
    for (int r = 0; r < eig.dim(); ++r) {
        mb.push_back({"m" + std::to_string(r), Wspace.parity_of(eig.basis().row(r)),
                      Wspace.weight_of(eig.basis().row(r))});
    }
    ModuleAction act{psalg, SuperSpace(std::move(mb)), {}};
    for (auto& rho_full : psrho) {
        SparseMatrix m(eig.dim(), eig.dim());
        for (int c = 0; c < eig.dim(); ++c) {
            SparseVec img = ModuleAction::mat_apply(rho_full, eig.basis().row(c));
            auto coords = eig.coords_of(img);
            if (!coords) throw std::logic_error("q grading: eigenspace is not invariant");
            for (int r = 0; r < eig.dim(); ++r)
                if (!is_zero((*coords)[r])) m.add(r, c, (*coords)[r]);
        }
        act.rho.push_back(std::move(m));
    }
    std::string label = "q:" + std::to_string(n) + ":" + std::to_string(p) + ":" +
                        (sign > 0 ? "+" : "-");
    return finish_pair(std::move(psalg), std::move(act), label, {}, r1, r2);
}

// ---------------------------------------------------------------------
// osp(m|2n) with its depth-1 grading: g0 = c osp(m-2|2n).
// ---------------------------------------------------------------------

inline GradedPair osp_pair(int m, int n2) {
    auto [alg, act] = build_osp(m, n2);
    // central element: the grading element h, normalized to act as the
    // identity on g_{-1}; h has [h, x] = -x there, so take -h.
    OspLayout L = osp_layout(m, n2);
    const int N = L.module.dim();
    SparseMatrix h(N, N);
    h.set(L.module.index_of("u+"), L.module.index_of("u+"), Rat(-1));
    h.set(L.module.index_of("u-"), L.module.index_of("u-"), Rat(1));
    SparseMatrix gen_t(N * N, alg.dim());
    for (int a = 0; a < alg.dim(); ++a)
        for (auto& [idx, x] : vectorize(act.rho[a])) gen_t.add(idx, a, x);
    auto hc = solve(gen_t, sv_to_dense(vectorize(h), N * N));
    if (!hc) throw std::logic_error("osp grading element missing");
    return pair_from_graded_algebra(alg, "osp:" + std::to_string(m) + ":" + std::to_string(n2),
                                    {sv_from_dense(*hc)}, L.r, L.n);
}

// ---------------------------------------------------------------------
// Reduced pairs: replace g0 by its derived subalgebra after checking that
// g0 = [g0,g0] + (recorded center) as a direct sum.
// ---------------------------------------------------------------------

inline GradedPair reduced_pair(const GradedPair& pair) {
    if (pair.central.empty()) return pair; // centerless: reduction is the identity
    Echelon der(pair.g0.dim());
    for (int i = 0; i < pair.g0.dim(); ++i)
        for (int j = 0; j < pair.g0.dim(); ++j) der.add_row(pair.g0.bracket(i, j));
    Subspace derived = Subspace::from_echelon(der);
    SparseMatrix cent(0, pair.g0.dim());
    for (auto& c : pair.central) cent.append_row(c);
    Subspace center = Subspace::from_rows(cent);
    if (derived.dim() + center.dim() != pair.g0.dim() ||
        derived.intersect(center).dim() != 0)
        throw std::logic_error("reduced_pair: g0 is not derived + center");

    const SparseMatrix& rows = derived.basis();
    const int q = rows.rows();
    std::vector<BasisVector> basis;
    for (int r = 0; r < q; ++r)
        basis.push_back({"r" + std::to_string(r), pair.g0.space().parity_of(rows.row(r)),
                         pair.g0.space().weight_of(rows.row(r))});
    std::vector<std::vector<SparseVec>> br(q, std::vector<SparseVec>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            SparseVec v = pair.g0.bracket(rows.row(i), rows.row(j));
            auto coords = derived.coords_of(v);
            if (!coords) throw std::logic_error("derived subalgebra not closed");
            br[i][j] = sv_from_dense(*coords);
        }
    LieSuperalgebra g0(SuperSpace(std::move(basis)), std::move(br));

    ModuleAction act{g0, pair.action.module, {}};
    for (int r = 0; r < q; ++r) {
        SparseMatrix mrho(pair.action.module.dim(), pair.action.module.dim());
        for (auto& [a, x] : rows.row(r)) mrho = mrho + pair.action.rho[a].scaled(x);
        act.rho.push_back(std::move(mrho));
    }
    return finish_pair(std::move(g0), std::move(act), "reduced:" + pair.provenance, {},
                       pair.eps_rank, pair.delta_rank);
}

// ---------------------------------------------------------------------
// Case labels: "pe:n", "spe:n", "cpe:n", "cspe:n", "pe-ext:n:a:b",
// "sl-std:m:n", "sl-d1:m:n:p:q", "q:n:p:+", "osp:m:2n", prefix "reduced:".
// ---------------------------------------------------------------------

inline GradedPair build_case(const std::string& label) {
    std::string s = label;
    bool reduce = false;
    const std::string pref = "reduced:";
    if (s.rfind(pref, 0) == 0) {
        reduce = true;
        s = s.substr(pref.size());
    }
    std::vector<std::string> parts;
    {
        std::string cur;
        for (char c : s) {
            if (c == ':') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        parts.push_back(cur);
    }
    auto want = [&](size_t k) {
        if (parts.size() != k) throw std::invalid_argument("bad case label: " + label);
    };
    auto num = [&](size_t i) { return std::stoi(parts.at(i)); };
    GradedPair p = [&]() -> GradedPair {
        const std::string& head = parts.at(0);
        if (head == "pe") {
            want(2);
            return pe_pair(PeKind::Pe, num(1));
        }
        if (head == "spe") {
            want(2);
            return pe_pair(PeKind::Spe, num(1));
        }
        if (head == "cpe") {
            want(2);
            return pe_pair(PeKind::Cpe, num(1));
        }
        if (head == "cspe") {
            want(2);
            return pe_pair(PeKind::Cspe, num(1));
        }
        if (head == "pe-ext") {
            want(4);
            return pe_pair(PeKind::Ext, num(1), parse_rat(parts.at(2)), parse_rat(parts.at(3)));
        }
        if (head == "sl-std") {
            want(3);
            return sl_standard_pair(num(1), num(2));
        }
        if (head == "sl-d1") {
            want(5);
            return sl_depth1_pair(num(1), num(2), num(3), num(4));
        }
        if (head == "q") {
            want(4);
            int sign = parts.at(3) == "+" ? 1 : parts.at(3) == "-" ? -1 : 0;
            if (sign == 0) throw std::invalid_argument("bad sign in label: " + label);
            return q_pair(num(1), num(2), sign);
        }
        if (head == "osp") {
            want(3);
            return osp_pair(num(1), num(2));
        }
        throw std::invalid_argument("unknown case: " + label);
    }();
    if (reduce) {
        GradedPair r = reduced_pair(p);
        r.provenance = "reduced:" + p.provenance;
        return r;
    }
    return p;
}

} // namespace spencer

#endif
