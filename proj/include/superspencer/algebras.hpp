#ifndef SUPERSPENCER_ALGEBRAS_HPP
#define SUPERSPENCER_ALGEBRAS_HPP

#include "superspencer/rep.hpp"

#include <sstream>

namespace spencer {

inline std::string idx2(const char* head, int i, int j) {
    std::ostringstream os;
    os << head << "_" << i << "," << j;
    return os.str();
}

/// Standard module of gl(m|n): e_1..e_m even of weight eps_i, f_1..f_n odd
/// of weight delta_j.
inline SuperSpace gl_standard_module(int m, int n) {
    std::vector<BasisVector> b;
    for (int i = 0; i < m; ++i) {
        Weight w = Weight::zero(m, n);
        w.eps[i] = 1;
        b.push_back({"e" + std::to_string(i + 1), false, w});
    }
    for (int j = 0; j < n; ++j) {
        Weight w = Weight::zero(m, n);
        w.delta[j] = 1;
        b.push_back({"f" + std::to_string(j + 1), true, w});
    }
    return SuperSpace(std::move(b));
}

inline SparseMatrix matrix_unit(int N, int r, int c) {
    SparseMatrix m(N, N);
    m.set(r, c, Rat(1));
    return m;
}

/// gl(m|n) = Mat(m|n) with the basis of matrix units.
inline std::pair<LieSuperalgebra, ModuleAction> build_gl(int m, int n) {
    if (m + n < 1) throw std::invalid_argument("gl(m|n) needs m+n >= 1");
    SuperSpace V = gl_standard_module(m, n);
    const int N = m + n;
    MatrixRealization real;
    real.module = V;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            real.elements.push_back({idx2("E", i + 1, j + 1), V.odd(i) != V.odd(j),
                                     V.weight(i) + (-V.weight(j))});
            real.mats.push_back(matrix_unit(N, i, j));
        }
    return algebra_from_matrices(real);
}

inline Rat supertrace(const SparseMatrix& x, const SuperSpace& module) {
    Rat t(0);
    for (int i = 0; i < module.dim(); ++i) t += (module.odd(i) ? -x.get(i, i) : x.get(i, i));
    return t;
}

/// Supertraceless diagonal combinations E_kk -(-1)^{p_k+p_{k+1}} E_{k+1,k+1}.
inline std::vector<SparseMatrix> traceless_diagonals(const SuperSpace& V, int from, int to) {
    std::vector<SparseMatrix> out;
    for (int k = from; k + 1 < to; ++k) {
        SparseMatrix h = matrix_unit(V.dim(), k, k);
        Rat s = (V.odd(k) != V.odd(k + 1)) ? Rat(1) : Rat(-1);
        h.add(k + 1, k + 1, s);
        out.push_back(std::move(h));
    }
    return out;
}

/// sl(m|n): kernel of the supertrace.
inline std::pair<LieSuperalgebra, ModuleAction> build_sl(int m, int n) {
    SuperSpace V = gl_standard_module(m, n);
    const int N = m + n;
    MatrixRealization real;
    real.module = V;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (i == j) continue;
            real.elements.push_back({idx2("E", i + 1, j + 1), V.odd(i) != V.odd(j),
                                     V.weight(i) + (-V.weight(j))});
            real.mats.push_back(matrix_unit(N, i, j));
        }
    auto diag = traceless_diagonals(V, 0, N);
    for (size_t k = 0; k < diag.size(); ++k) {
        real.elements.push_back({"H_" + std::to_string(k + 1), false, Weight::zero(m, n)});
        real.mats.push_back(diag[k]);
    }
    return algebra_from_matrices(real);
}

/// psl(n|n) = sl(n|n)/<1_{2n}>.
inline LieSuperalgebra build_psl(int n, int n2) {
    if (n != n2) throw std::invalid_argument("psl(m|n) requires m == n");
    auto [sl, act] = build_sl(n, n);
    // 1_{2n} in sl coordinates: solve is overkill; it is the combination of
    // the H_k with известными coefficients, but solving keeps this robust.
    SparseMatrix gen_t(2 * n * 2 * n, sl.dim());
    for (int a = 0; a < sl.dim(); ++a)
        for (auto& [idx, x] : vectorize(act.rho[a])) gen_t.add(idx, a, x);
    auto id_coords = solve(gen_t, sv_to_dense(vectorize(SparseMatrix::identity(2 * n)), 4 * n * n));
    if (!id_coords) throw std::logic_error("identity not found inside sl(n|n)");
    return quotient_by_ideal(sl, Subspace::span_of(sv_from_dense(*id_coords), sl.dim()));
}

/// Standard module of pe(n): e_i of weight eps_i, f_i of weight -eps_i
/// (the odd form P = antidiag(1_n,1_n) pairs them).
inline SuperSpace pe_standard_module(int n) {
    std::vector<BasisVector> b;
    for (int i = 0; i < n; ++i) {
        Weight w = Weight::zero(n, 0);
        w.eps[i] = 1;
        b.push_back({"e" + std::to_string(i + 1), false, w});
    }
    for (int i = 0; i < n; ++i) {
        Weight w = Weight::zero(n, 0);
        w.eps[i] = -1;
        b.push_back({"f" + std::to_string(i + 1), true, w});
    }
    return SuperSpace(std::move(b));
}

struct PeBasis {
    MatrixRealization real;
    std::vector<int> degrees; // only set by the graded pe(n+1) builders
};

// A_{ij} = E_{ij} - E_{n+j,n+i}   (even part gl(n))
// B_{ij} = E_{i,n+j} + E_{j,n+i}, i <= j   (B block symmetric)
// C_{ij} = E_{n+i,j} - E_{n+j,i}, i < j    (C block antisymmetric)
inline void pe_family_elements(int n, bool traceless, MatrixRealization& real) {
    const int N = 2 * n;
    SuperSpace V = pe_standard_module(n);
    real.module = V;
    auto wt = [&](int i, int j, int si, int sj) {
        Weight w = Weight::zero(n, 0);
        w.eps[i] += si;
        w.eps[j] += sj;
        return w;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (traceless && i == j) continue;
            SparseMatrix m = matrix_unit(N, i, j);
            m.add(n + j, n + i, Rat(-1));
            real.elements.push_back({idx2("A", i + 1, j + 1), false, wt(i, j, 1, -1)});
            real.mats.push_back(std::move(m));
        }
    if (traceless) {
        for (int k = 0; k + 1 < n; ++k) {
            SparseMatrix m = matrix_unit(N, k, k);
            m.add(n + k, n + k, Rat(-1));
            m.add(k + 1, k + 1, Rat(-1));
            m.add(n + k + 1, n + k + 1, Rat(1));
            real.elements.push_back({"H_" + std::to_string(k + 1), false, Weight::zero(n, 0)});
            real.mats.push_back(std::move(m));
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            SparseMatrix m = matrix_unit(N, i, n + j);
            if (i != j) m.add(j, n + i, Rat(1));
            real.elements.push_back({idx2("B", i + 1, j + 1), true, wt(i, j, 1, 1)});
            real.mats.push_back(std::move(m));
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            SparseMatrix m = matrix_unit(N, n + i, j);
            m.add(n + j, i, Rat(-1));
            real.elements.push_back({idx2("C", i + 1, j + 1), true, wt(i, j, -1, -1)});
            real.mats.push_back(std::move(m));
        }
}

inline SparseMatrix pe_tau(int n) {
    SparseMatrix t(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        t.set(i, i, Rat(1));
        t.set(n + i, n + i, Rat(-1));
    }
    return t;
}

inline std::pair<LieSuperalgebra, ModuleAction> build_pe(int n) {
    if (n < 2) throw std::invalid_argument("pe(n) needs n >= 2");
    MatrixRealization real;
    pe_family_elements(n, false, real);
    return algebra_from_matrices(real);
}

inline std::pair<LieSuperalgebra, ModuleAction> build_spe(int n) {
    if (n < 2) throw std::invalid_argument("spe(n) needs n >= 2");
    MatrixRealization real;
    pe_family_elements(n, true, real);
    return algebra_from_matrices(real);
}

/// spe(n) extended by a tau + b z with tau = diag(1_n,-1_n), z = 1_{2n}.
/// (1,0) recovers pe(n) in another basis; (0,1) is cspe(n).
inline std::pair<LieSuperalgebra, ModuleAction> build_pe_extension(int n, const Rat& a,
                                                                   const Rat& b) {
    if (n < 2) throw std::invalid_argument("pe extension needs n >= 2");
    if (is_zero(a) && is_zero(b)) throw std::invalid_argument("pe extension needs (a,b) != 0");
    MatrixRealization real;
    pe_family_elements(n, true, real);
    SparseMatrix ext = pe_tau(n).scaled(a) + SparseMatrix::identity(2 * n).scaled(b);
    real.elements.push_back({"t", false, Weight::zero(n, 0)});
    real.mats.push_back(std::move(ext));
    return algebra_from_matrices(real);
}

/// cpe(n) = pe(n) + <z>, z acting as the identity on the standard module.
inline std::pair<LieSuperalgebra, ModuleAction> build_cpe(int n) {
    if (n < 2) throw std::invalid_argument("cpe(n) needs n >= 2");
    MatrixRealization real;
    pe_family_elements(n, false, real);
    real.elements.push_back({"z", false, Weight::zero(n, 0)});
    real.mats.push_back(SparseMatrix::identity(2 * n));
    return algebra_from_matrices(real);
}

/// The graded pe(n+1) (or spe(n+1)) whose degree comes from the bracket
/// with the grading element of the last hyperbolic pair: components
/// g_{-1} (n|n), g_0 = cpe(n) resp. spe(n)+<tau+nz>, g_1 (n|n), g_2 (0|1).
inline LieSuperalgebra build_pe_graded(int n_small, bool special) {
    const int n = n_small + 1;
    MatrixRealization real;
    pe_family_elements(n, special, real);
    auto [alg, act] = algebra_from_matrices(real);
    std::vector<int> degrees;
    for (int a = 0; a < alg.dim(); ++a) {
        const std::string& lbl = real.elements[a].label;
        const SparseMatrix& m = real.mats[a];
        // deg(E_{rc}) = h_r - h_c with h = +1 on e_n, -1 on f_n.
        auto h = [&](int r) {
            if (r == n - 1) return 1;
            if (r == 2 * n - 1) return -1;
            return 0;
        };
        int deg = 0;
        bool first = true;
        for (int r = 0; r < m.rows(); ++r)
            for (auto& [c, x] : m.row(r)) {
                int d = h(r) - h(c);
                if (first) {
                    deg = d;
                    first = false;
                } else if (d != deg) {
                    throw std::logic_error("pe grading: basis element " + lbl +
                                           " is not degree homogeneous");
                }
            }
        degrees.push_back(deg);
    }
    alg.set_grading(std::move(degrees));
    return alg;
}

inline LieSuperalgebra direct_sum(const LieSuperalgebra& a, const LieSuperalgebra& b,
                                  const std::function<Weight(bool, const Weight&)>& lift) {
    std::vector<BasisVector> basis;
    for (int i = 0; i < a.dim(); ++i)
        basis.push_back({a.space().label(i) + "'", a.odd(i), lift(false, a.space().weight(i))});
    for (int i = 0; i < b.dim(); ++i)
        basis.push_back({b.space().label(i) + "''", b.odd(i), lift(true, b.space().weight(i))});
    const int n = a.dim() + b.dim();
    std::vector<std::vector<SparseVec>> br(n, std::vector<SparseVec>(n));
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) br[i][j] = a.bracket(i, j);
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) {
            SparseVec v = b.bracket(i, j);
            for (auto& [k, x] : v) k += a.dim();
            br[a.dim() + i][a.dim() + j] = std::move(v);
        }
    return LieSuperalgebra(SuperSpace(std::move(basis)), std::move(br));
}

/// q(k): matrices commuting with the odd involution J = antidiag(1,-1);
/// the standard module has e_i and f_i of the SAME weight.
inline std::pair<LieSuperalgebra, ModuleAction> build_q(int k, bool delta_weights) {
    std::vector<BasisVector> mod;
    for (int i = 0; i < k; ++i) {
        Weight w = delta_weights ? Weight::zero(0, k) : Weight::zero(k, 0);
        (delta_weights ? w.delta : w.eps)[i] = 1;
        mod.push_back({"e" + std::to_string(i + 1), false, w});
    }
    for (int i = 0; i < k; ++i) {
        Weight w = delta_weights ? Weight::zero(0, k) : Weight::zero(k, 0);
        (delta_weights ? w.delta : w.eps)[i] = 1;
        mod.push_back({"f" + std::to_string(i + 1), true, w});
    }
    MatrixRealization real;
    real.module = SuperSpace(std::move(mod));
    const int N = 2 * k;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            SparseMatrix a = matrix_unit(N, i, j);
            a.add(k + i, k + j, Rat(1));
            real.elements.push_back({idx2("A", i + 1, j + 1), false,
                                     real.module.weight(i) + (-real.module.weight(j))});
            real.mats.push_back(std::move(a));
            SparseMatrix b = matrix_unit(N, i, k + j);
            b.add(k + i, j, Rat(1));
            real.elements.push_back({idx2("B", i + 1, j + 1), true,
                                     real.module.weight(i) + (-real.module.weight(j))});
            real.mats.push_back(std::move(b));
        }
    return algebra_from_matrices(real);
}

/// Orthosymplectic osp(m|2n) for the split even form (hyperbolic pairs plus
/// a middle vector when the even rank is odd) and the standard symplectic
/// odd form. Weight coordinates are those of the o(m-2) x sp(2n) torus of
/// the depth-1 grading, so the first hyperbolic pair carries weight zero.
struct OspLayout {
    int m = 0, n = 0;       // osp(m|2n)
    int r = 0;              // rank of o(m-2)
    bool middle = false;    // m-2 odd
    SuperSpace module;      // u+, v_i^+, (w), v_i^-, u-, x_j^+, x_j^-
    SparseMatrix form;      // supersymmetric even bilinear form
    std::vector<int> h_eig; // grading eigenvalue of each module vector
};

inline OspLayout osp_layout(int m, int n2) {
    if (m < 3 || n2 < 2 || n2 % 2 != 0)
        throw std::invalid_argument("osp(m|2n) needs m >= 3 and even 2n >= 2");
    const int n = n2 / 2;
    OspLayout L;
    L.m = m;
    L.n = n;
    L.r = (m - 2) / 2;
    L.middle = ((m - 2) % 2) == 1;
    std::vector<BasisVector> b;
    std::vector<int> h;
    auto wz = [&] { return Weight::zero(L.r, n); };
    b.push_back({"u+", false, wz()});
    h.push_back(1);
    for (int i = 0; i < L.r; ++i) {
        Weight w = wz();
        w.eps[i] = 1;
        b.push_back({"v" + std::to_string(i + 1) + "+", false, w});
        h.push_back(0);
    }
    if (L.middle) {
        b.push_back({"w", false, wz()});
        h.push_back(0);
    }
    for (int i = 0; i < L.r; ++i) {
        Weight w = wz();
        w.eps[i] = -1;
        b.push_back({"v" + std::to_string(i + 1) + "-", false, w});
        h.push_back(0);
    }
    b.push_back({"u-", false, wz()});
    h.push_back(-1);
    for (int j = 0; j < n; ++j) {
        Weight w = wz();
        w.delta[j] = 1;
        b.push_back({"x" + std::to_string(j + 1) + "+", true, w});
        h.push_back(0);
    }
    for (int j = 0; j < n; ++j) {
        Weight w = wz();
        w.delta[j] = -1;
        b.push_back({"x" + std::to_string(j + 1) + "-", true, w});
        h.push_back(0);
    }
    L.module = SuperSpace(std::move(b));
    L.h_eig = std::move(h);

    const int N = L.module.dim();
    L.form = SparseMatrix(N, N);
    auto I = [&](const std::string& s) { return L.module.index_of(s); };
    L.form.set(I("u+"), I("u-"), Rat(1));
    L.form.set(I("u-"), I("u+"), Rat(1));
    for (int i = 0; i < L.r; ++i) {
        int p = I("v" + std::to_string(i + 1) + "+"), q = I("v" + std::to_string(i + 1) + "-");
        L.form.set(p, q, Rat(1));
        L.form.set(q, p, Rat(1));
    }
    if (L.middle) L.form.set(I("w"), I("w"), Rat(1));
    for (int j = 0; j < n; ++j) {
        int p = I("x" + std::to_string(j + 1) + "+"), q = I("x" + std::to_string(j + 1) + "-");
        L.form.set(p, q, Rat(1));
        L.form.set(q, p, Rat(-1));
    }
    return L;
}

/// Kernel construction: X preserves the form iff
/// Phi(X u, v) + (-1)^{p(X)p(u)} Phi(u, X v) = 0 for all basis u, v.
inline std::pair<LieSuperalgebra, ModuleAction> build_osp(int m, int n2) {
    OspLayout L = osp_layout(m, n2);
    const int N = L.module.dim();
    // Solve for each parity of X separately.
    std::vector<std::pair<SparseVec, bool>> rows; // (vectorized matrix, parity)
    for (int parity = 0; parity <= 1; ++parity) {
        std::vector<int> unknowns; // matrix positions (a,b) with p_a+p_b = parity
        std::map<long, int> pos;
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b)
                if ((L.module.odd(a) != L.module.odd(b)) == (parity == 1)) {
                    pos[(long)a * N + b] = (int)unknowns.size();
                    unknowns.push_back(a * N + b);
                }
        SparseMatrix sys(N * N, (int)unknowns.size());
        for (int u = 0; u < N; ++u)
            for (int v = 0; v < N; ++v) {
                // sum_a X[a][u] Phi[a][v] + (-1)^{p(X)p(u)} sum_a X[a][v] Phi[u][a] = 0
                for (int a = 0; a < N; ++a) {
                    Rat f1 = L.form.get(a, v);
                    if (!is_zero(f1)) {
                        auto it = pos.find((long)a * N + u);
                        if (it != pos.end()) sys.add(u * N + v, it->second, f1);
                    }
                    Rat f2 = L.form.get(u, a);
                    if (!is_zero(f2)) {
                        Rat sign = (parity == 1 && L.module.odd(u)) ? Rat(-1) : Rat(1);
                        auto it = pos.find((long)a * N + v);
                        if (it != pos.end()) sys.add(u * N + v, it->second, sign * f2);
                    }
                }
            }
        SparseMatrix ker = kernel_basis_matrix(sys);
        for (int rr = 0; rr < ker.rows(); ++rr) {
            SparseVec full;
            for (auto& [c, x] : ker.row(rr)) full.emplace_back(unknowns[c], x);
            sv_normalize(full);
            rows.emplace_back(std::move(full), parity == 1);
        }
    }
    MatrixRealization real;
    real.module = L.module;
    int counter = 0;
    for (auto& [vec, odd] : rows) {
        SparseMatrix mat(N, N);
        for (auto& [idx, x] : vec) mat.set((int)(idx / N), (int)(idx % N), x);
        // weight/degree homogeneity of RREF rows: read off the first entry
        Weight w = Weight::zero(L.r, L.n);
        bool first = true;
        for (auto& [idx, x] : vec) {
            Weight cw = L.module.weight((int)(idx / N)) + (-L.module.weight((int)(idx % N)));
            if (first) {
                w = cw;
                first = false;
            } else if (!(cw == w)) {
                throw std::logic_error("osp basis row mixes weights");
            }
        }
        real.elements.push_back({"g" + std::to_string(counter++), odd, w});
        real.mats.push_back(std::move(mat));
    }
    auto [alg, act] = algebra_from_matrices(real);
    // degree = h_a - h_b, constant over each row by the grading argument
    std::vector<int> degrees;
    for (auto& [vec, odd] : rows) {
        int deg = 0;
        bool first = true;
        for (auto& [idx, x] : vec) {
            int d = L.h_eig[(int)(idx / N)] - L.h_eig[(int)(idx % N)];
            if (first) {
                deg = d;
                first = false;
            } else if (d != deg) {
                throw std::logic_error("osp basis row mixes degrees");
            }
        }
        degrees.push_back(deg);
    }
    alg.set_grading(std::move(degrees));
    return {std::move(alg), std::move(act)};
}

} // namespace spencer

#endif
