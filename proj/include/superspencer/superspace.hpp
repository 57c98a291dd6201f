#ifndef SUPERSPENCER_SUPERSPACE_HPP
#define SUPERSPENCER_SUPERSPACE_HPP

#include "superspencer/sparse_matrix.hpp"

#include <string>

namespace spencer {

/// Torus weight in (eps, delta) coordinates; coordinate lengths are fixed
/// per case by the constructors.
struct Weight {
    std::vector<Rat> eps;
    std::vector<Rat> delta;

    Weight() = default;
    Weight(std::vector<Rat> e, std::vector<Rat> d)
        : eps(std::move(e)), delta(std::move(d)) {}

    static Weight zero(int eps_rank, int delta_rank) {
        return Weight(std::vector<Rat>(eps_rank, Rat(0)),
                      std::vector<Rat>(delta_rank, Rat(0)));
    }

    Weight operator+(const Weight& o) const {
        Weight w = *this;
        for (size_t i = 0; i < eps.size(); ++i) w.eps[i] += o.eps[i];
        for (size_t i = 0; i < delta.size(); ++i) w.delta[i] += o.delta[i];
        return w;
    }

    Weight operator-() const {
        Weight w = *this;
        for (auto& x : w.eps) x = -x;
        for (auto& x : w.delta) x = -x;
        return w;
    }

    bool operator==(const Weight& o) const { return eps == o.eps && delta == o.delta; }

    // Lexicographic on (eps, delta); the ordering used to pick "maximal"
    // weights in composition series.
    bool operator<(const Weight& o) const {
        if (eps != o.eps) return std::lexicographical_compare(eps.begin(), eps.end(),
                                                              o.eps.begin(), o.eps.end());
        return std::lexicographical_compare(delta.begin(), delta.end(),
                                            o.delta.begin(), o.delta.end());
    }

    std::string str() const {
        auto part = [](const std::vector<Rat>& v, const char* sym, std::string& out) {
            for (size_t i = 0; i < v.size(); ++i) {
                if (is_zero(v[i])) continue;
                std::string c = v[i].get_str();
                if (!out.empty() && c[0] != '-') out += "+";
                if (c == "1")
                    out += "";
                else if (c == "-1")
                    out += "-";
                else
                    out += c + "*";
                out += sym + std::to_string(i + 1);
            }
        };
        std::string out;
        part(eps, "eps", out);
        part(delta, "delta", out);
        return out.empty() ? "0" : out;
    }
};

struct BasisVector {
    std::string label;
    bool odd = false;
    Weight weight;
};

/// Finite-dimensional Z/2-graded vector space with a labeled, parity-tagged
/// basis. Weights ride along through every tensor construction.
class SuperSpace {
public:
    SuperSpace() = default;
    explicit SuperSpace(std::vector<BasisVector> basis) : basis_(std::move(basis)) {
        for (size_t i = 0; i < basis_.size(); ++i)
            for (size_t j = i + 1; j < basis_.size(); ++j)
                if (basis_[i].label == basis_[j].label)
                    throw std::invalid_argument("duplicate basis label: " + basis_[i].label);
    }

    int dim() const { return (int)basis_.size(); }
    bool odd(int i) const { return basis_[i].odd; }
    const Weight& weight(int i) const { return basis_[i].weight; }
    const std::string& label(int i) const { return basis_[i].label; }
    const std::vector<BasisVector>& basis() const { return basis_; }

    std::pair<int, int> superdim() const {
        int even = 0, oddc = 0;
        for (auto& b : basis_) (b.odd ? oddc : even)++;
        return {even, oddc};
    }

    int index_of(const std::string& label) const {
        for (int i = 0; i < dim(); ++i)
            if (basis_[i].label == label) return i;
        throw std::invalid_argument("no basis vector labeled " + label);
    }

    /// Parity of a homogeneous vector; throws when components mix parity.
    bool parity_of(const SparseVec& v) const {
        bool seen = false, p = false;
        for (auto& [c, x] : v) {
            if (!seen) {
                p = odd(c);
                seen = true;
            } else if (odd(c) != p) {
                throw std::runtime_error("vector is not parity homogeneous");
            }
        }
        return p;
    }

    /// Weight of a homogeneous vector; throws when components mix weights.
    Weight weight_of(const SparseVec& v) const {
        if (v.empty()) throw std::runtime_error("weight of zero vector");
        Weight w = weight(v.front().first);
        for (auto& [c, x] : v)
            if (!(weight(c) == w)) throw std::runtime_error("vector is not weight homogeneous");
        return w;
    }

private:
    std::vector<BasisVector> basis_;
};

inline SuperSpace dual_space(const SuperSpace& v) {
    std::vector<BasisVector> b;
    b.reserve(v.dim());
    for (int i = 0; i < v.dim(); ++i)
        b.push_back({v.label(i) + "*", v.odd(i), -v.weight(i)});
    return SuperSpace(std::move(b));
}

inline SuperSpace tensor_space(const SuperSpace& a, const SuperSpace& b) {
    std::vector<BasisVector> out;
    out.reserve((size_t)a.dim() * b.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j)
            out.push_back({"(" + a.label(i) + ")(" + b.label(j) + ")",
                           a.odd(i) != b.odd(j), a.weight(i) + b.weight(j)});
    return SuperSpace(std::move(out));
}

/// Multi-indices of the monomial basis of the s-th super-symmetric power:
/// nondecreasing, strictly increasing at odd positions (theta^2 = 0).
inline std::vector<std::vector<int>> sym_power_indices(const SuperSpace& v, int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if ((int)cur.size() == s) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < v.dim(); ++i) {
            bool repeat_ok = !v.odd(i);
            if (!cur.empty() && cur.back() == i && !repeat_ok) continue;
            cur.push_back(i);
            self(self, i + (repeat_ok ? 0 : 1));
            cur.pop_back();
        }
    };
    if (s == 0)
        out.push_back({});
    else
        rec(rec, 0);
    return out;
}

/// Same for the super-exterior power: strictly increasing at even
/// positions, repeats allowed at odd ones (theta wedge theta != 0).
inline std::vector<std::vector<int>> ext_power_indices(const SuperSpace& v, int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if ((int)cur.size() == s) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < v.dim(); ++i) {
            bool repeat_ok = v.odd(i);
            if (!cur.empty() && cur.back() == i && !repeat_ok) continue;
            cur.push_back(i);
            self(self, i + (repeat_ok ? 0 : 1));
            cur.pop_back();
        }
    };
    if (s == 0)
        out.push_back({});
    else
        rec(rec, 0);
    return out;
}

inline SuperSpace space_from_indices(const SuperSpace& v,
                                     const std::vector<std::vector<int>>& idx,
                                     const std::string& sep) {
    std::vector<BasisVector> b;
    b.reserve(idx.size());
    for (auto& I : idx) {
        std::string label;
        bool odd = false;
        Weight w = Weight::zero((int)(v.dim() ? v.weight(0).eps.size() : 0),
                                (int)(v.dim() ? v.weight(0).delta.size() : 0));
        for (size_t t = 0; t < I.size(); ++t) {
            label += (t ? sep : "") + v.label(I[t]);
            odd = (odd != v.odd(I[t]));
            w = w + v.weight(I[t]);
        }
        if (I.empty()) label = "1";
        b.push_back({label, odd, w});
    }
    return SuperSpace(std::move(b));
}

} // namespace spencer

#endif
