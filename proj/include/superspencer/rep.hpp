#ifndef SUPERSPENCER_REP_HPP
#define SUPERSPENCER_REP_HPP

#include "superspencer/lie_superalgebra.hpp"

#include <functional>

namespace spencer {

/// Dual action: (x.phi)(u) = -(-1)^{p(x)p(phi)} phi(x.u), so in coordinates
/// rho*(x)[j,i] = -(-1)^{p(x)p_i} rho(x)[i,j].
inline ModuleAction dual_action(const ModuleAction& act) {
    ModuleAction out{act.algebra, dual_space(act.module), {}};
    out.rho.reserve(act.rho.size());
    for (int a = 0; a < act.algebra.dim(); ++a) {
        SparseMatrix m(act.module.dim(), act.module.dim());
        for (int i = 0; i < act.module.dim(); ++i)
            for (auto& [j, e] : act.rho[a].row(i)) {
                Rat sign = (act.algebra.odd(a) && act.module.odd(i)) ? Rat(1) : Rat(-1);
                m.add(j, i, sign * e);
            }
        out.rho.push_back(std::move(m));
    }
    return out;
}

/// Tensor product action with the Koszul sign:
/// x.(u ox v) = (x.u) ox v + (-1)^{p(x)p(u)} u ox (x.v).
inline ModuleAction tensor_action(const ModuleAction& a, const ModuleAction& b) {
    if (a.algebra.dim() != b.algebra.dim())
        throw std::invalid_argument("tensor_action: different algebras");
    ModuleAction out{a.algebra, tensor_space(a.module, b.module), {}};
    const int da = a.module.dim(), db = b.module.dim();
    for (int g = 0; g < a.algebra.dim(); ++g) {
        SparseMatrix m(da * db, da * db);
        for (int r = 0; r < da; ++r)
            for (auto& [i, e] : a.rho[g].row(r)) // rho_a(g)[r,i] = e
                for (int j = 0; j < db; ++j) m.add(r * db + j, i * db + j, e);
        for (int r = 0; r < db; ++r)
            for (auto& [j, e] : b.rho[g].row(r)) // rho_b(g)[r,j] = e
                for (int i = 0; i < da; ++i) {
                    Rat sign = (a.algebra.odd(g) && a.module.odd(i)) ? Rat(-1) : Rat(1);
                    m.add(i * db + r, i * db + j, sign * e);
                }
        out.rho.push_back(std::move(m));
    }
    return out;
}

inline ModuleAction trivial_action(const LieSuperalgebra& alg, const SuperSpace& module) {
    ModuleAction out{alg, module, {}};
    for (int a = 0; a < alg.dim(); ++a)
        out.rho.emplace_back(module.dim(), module.dim());
    return out;
}

/// Koszul sign accumulated when sorting a tuple of homogeneous factors;
/// `ext` adds the alternating -1 per transposition. Returns 0 sign when a
/// forbidden repeat appears (odd repeat for sym, even repeat for ext).
inline std::optional<Rat> sort_tuple_sign(std::vector<int>& idx, const SuperSpace& v, bool ext) {
    Rat sign(1);
    for (size_t i = 1; i < idx.size(); ++i)
        for (size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
            Rat s = (v.odd(idx[j]) && v.odd(idx[j - 1])) ? Rat(-1) : Rat(1);
            if (ext) s = -s;
            sign *= s;
            std::swap(idx[j], idx[j - 1]);
        }
    for (size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) {
            bool odd = v.odd(idx[i]);
            if ((odd && !ext) || (!odd && ext)) return std::nullopt;
        }
    return sign;
}

/// A super-symmetric or super-exterior power presented inside the tensor
/// power: monomial basis, inclusion into V^{ox s} (1/s! averaging, the
/// convention vw = (v ox w + (-1)^{p(v)p(w)} w ox v)/2 for s = 2) and the
/// projection the other way.
struct PowerSpace {
    SuperSpace space;
    std::vector<std::vector<int>> indices;
    SparseMatrix inclusion;  // tensor-power coords x power coords
    SparseMatrix projection; // power coords x tensor-power coords
};

namespace detail {
inline void permutations(std::vector<int> base,
                         const std::function<void(const std::vector<int>&)>& fn) {
    std::sort(base.begin(), base.end());
    do {
        fn(base);
    } while (std::next_permutation(base.begin(), base.end()));
}

inline long tensor_index(const std::vector<int>& tup, int dim) {
    long t = 0;
    for (int i : tup) t = t * dim + i;
    return t;
}
} // namespace detail

inline PowerSpace power_space(const SuperSpace& v, int s, bool ext) {
    PowerSpace out;
    out.indices = ext ? ext_power_indices(v, s) : sym_power_indices(v, s);
    out.space = space_from_indices(v, out.indices, ext ? "^" : ".");
    long ts = 1;
    for (int i = 0; i < s; ++i) ts *= v.dim();
    out.inclusion = SparseMatrix((int)ts, out.space.dim());
    out.projection = SparseMatrix(out.space.dim(), (int)ts);

    // projection: sort the tuple, pick up the Koszul/alternation sign
    std::map<std::vector<int>, int> pos;
    for (int i = 0; i < (int)out.indices.size(); ++i) pos[out.indices[i]] = i;

    std::vector<int> tup(s, 0);
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == s) {
            std::vector<int> sorted = tup;
            auto sign = sort_tuple_sign(sorted, v, ext);
            if (sign) {
                auto it = pos.find(sorted);
                if (it == pos.end()) throw std::logic_error("power basis gap");
                out.projection.add(it->second, (int)detail::tensor_index(tup, v.dim()), *sign);
            }
            return;
        }
        for (int i = 0; i < v.dim(); ++i) {
            tup[depth] = i;
            self(self, depth + 1);
        }
    };
    if (s > 0) rec(rec, 0);
    if (s == 0) {
        out.projection.add(0, 0, Rat(1));
        out.inclusion.add(0, 0, Rat(1));
        return out;
    }

    // inclusion: average the orbit of the monomial with signs
    Rat fact(1);
    for (int i = 2; i <= s; ++i) fact *= i;
    for (int m = 0; m < (int)out.indices.size(); ++m) {
        detail::permutations(out.indices[m], [&](const std::vector<int>& perm) {
            std::vector<int> sorted = perm;
            auto sign = sort_tuple_sign(sorted, v, ext);
            if (!sign) return;
            out.inclusion.add((int)detail::tensor_index(perm, v.dim()), m, *sign / fact);
        });
    }
    // repeated indices make the orbit smaller than s!; rescale so that
    // projection . inclusion = identity
    SparseMatrix pi = out.projection * out.inclusion;
    for (int m = 0; m < out.space.dim(); ++m) {
        Rat d = pi.get(m, m);
        if (is_zero(d)) throw std::logic_error("degenerate power normalization");
        if (d != Rat(1))
            for (int t = 0; t < out.inclusion.rows(); ++t) {
                Rat x = out.inclusion.get(t, m);
                if (!is_zero(x)) out.inclusion.set(t, m, x / d);
            }
    }
    return out;
}

inline ModuleAction tensor_power_action(const ModuleAction& a, int s) {
    if (s == 0) return trivial_action(a.algebra, space_from_indices(a.module, {{}}, ""));
    ModuleAction out = a;
    for (int i = 1; i < s; ++i) out = tensor_action(out, a);
    return out;
}

/// Action carried to the power coordinates: P rho I.
inline ModuleAction power_action(const ModuleAction& a, const PowerSpace& p) {
    int s = p.indices.empty() ? 0 : (int)p.indices.front().size();
    ModuleAction tp = tensor_power_action(a, s);
    ModuleAction out{a.algebra, p.space, {}};
    for (int g = 0; g < a.algebra.dim(); ++g)
        out.rho.push_back(p.projection * tp.rho[g] * p.inclusion);
    return out;
}

} // namespace spencer

#endif
