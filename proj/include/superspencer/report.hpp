#ifndef SUPERSPENCER_REPORT_HPP
#define SUPERSPENCER_REPORT_HPP

#include "superspencer/repmod.hpp"

#include <json.hpp>

#include <fstream>

namespace spencer {

using json = nlohmann::ordered_json;

inline json weight_to_json(const Weight& w) {
    json j;
    j["eps"] = json::array();
    j["delta"] = json::array();
    for (auto& x : w.eps) j["eps"].push_back(x.get_str());
    for (auto& x : w.delta) j["delta"].push_back(x.get_str());
    j["str"] = w.str();
    return j;
}

inline Weight weight_from_json(const json& j, int eps_rank, int delta_rank) {
    Weight w = Weight::zero(eps_rank, delta_rank);
    auto read = [](const json& arr, std::vector<Rat>& out) {
        out.clear();
        for (auto& v : arr) {
            if (v.is_number_integer())
                out.push_back(Rat((long)v.get<long>()));
            else
                out.push_back(parse_rat(v.get<std::string>()));
        }
    };
    if (j.contains("eps")) read(j["eps"], w.eps);
    if (j.contains("delta")) read(j["delta"], w.delta);
    while ((int)w.eps.size() < eps_rank) w.eps.push_back(Rat(0));
    while ((int)w.delta.size() < delta_rank) w.delta.push_back(Rat(0));
    return w;
}

inline json report_to_json(const CompositionReport& r) {
    json j;
    j["dim"] = r.dim;
    j["weight_multiplicities"] = json::array();
    for (auto& [w, m] : r.weight_mult)
        j["weight_multiplicities"].push_back({{"weight", weight_to_json(w)}, {"mult", m}});
    j["factors"] = json::array();
    for (auto& f : r.factors)
        j["factors"].push_back({{"weight", weight_to_json(f.weight)},
                                {"dim", f.dim},
                                {"parity", f.odd ? "odd" : "even"}});
    j["splitness"] = json::array();
    for (bool s : r.split_flags) j["splitness"].push_back(s ? "split" : "nonsplit");
    j["highest"] = json::array();
    for (size_t i = 0; i < r.highest.size(); ++i) {
        json h;
        h["weight"] = weight_to_json(r.highest[i].first);
        h["parity"] = r.highest_odd[i] ? "odd" : "even";
        json coords = json::array();
        for (auto& [c, x] : r.highest[i].second)
            coords.push_back({{"index", c}, {"value", x.get_str()}});
        h["coords"] = coords;
        j["highest"].push_back(h);
    }
    return j;
}

inline json algebra_to_json(const LieSuperalgebra& a) {
    json j;
    j["dim"] = a.dim();
    j["basis"] = json::array();
    for (int i = 0; i < a.dim(); ++i)
        j["basis"].push_back({{"label", a.space().label(i)},
                              {"parity", a.odd(i) ? "odd" : "even"},
                              {"weight", weight_to_json(a.space().weight(i))}});
    json sc = json::array();
    for (int i = 0; i < a.dim(); ++i)
        for (int jdx = 0; jdx < a.dim(); ++jdx)
            for (auto& [k, c] : a.bracket(i, jdx))
                sc.push_back({{"i", i}, {"j", jdx}, {"k", k}, {"c", c.get_str()}});
    j["structure_constants"] = sc;
    return j;
}

// Sparse triplet text format: "rows cols nnz" header then "r c value".
inline void dump_matrix(const SparseMatrix& m, std::ostream& os) {
    os << m.rows() << " " << m.cols() << " " << m.nnz() << "\n";
    for (int r = 0; r < m.rows(); ++r)
        for (auto& [c, x] : m.row(r)) os << r << " " << c << " " << x.get_str() << "\n";
}

struct RunReport {
    std::string label;
    bool faithful = false;
    bool stabilized = false;
    std::vector<int> tower_dims; // from g_{-1}
    struct PerK {
        int k = 0;
        int dim = 0;
        CompositionReport report;
    };
    std::vector<PerK> cohomology;
    long timing_ms = 0;

    json to_json() const {
        json j;
        j["schema"] = "superspencer-report-v1";
        j["case"] = label;
        j["faithful"] = faithful;
        j["tower"] = {{"dims", tower_dims}, {"stabilized", stabilized}};
        j["cohomology"] = json::array();
        for (auto& pk : cohomology) {
            json e = report_to_json(pk.report);
            e["k"] = pk.k;
            e["s"] = 2;
            j["cohomology"].push_back(std::move(e));
        }
        j["timing_ms"] = timing_ms;
        return j;
    }

    std::string to_csv() const {
        std::string out = "case,k,dim,factors,splitness\n";
        for (auto& pk : cohomology) {
            std::string fs, ss;
            for (size_t i = 0; i < pk.report.factors.size(); ++i)
                fs += (i ? "|" : "") + pk.report.factors[i].weight.str();
            for (size_t i = 0; i < pk.report.split_flags.size(); ++i)
                ss += std::string(i ? "|" : "") + (pk.report.split_flags[i] ? "split" : "nonsplit");
            out += label + "," + std::to_string(pk.k) + "," + std::to_string(pk.dim) + "," + fs +
                   "," + ss + "\n";
        }
        return out;
    }
};

// ---------------------------------------------------------------------
// Expectations: data files encoding published theorem/table rows.
// ---------------------------------------------------------------------

struct ExpectedFactor {
    Weight weight;
    std::optional<int> dim;
    std::optional<bool> odd;
};

struct Expectation {
    std::string label;
    int k = 2;
    std::optional<int> dim;
    std::vector<ExpectedFactor> factors;
    bool factors_given = false;
    std::vector<bool> split_flags;
    bool splitness_given = false;
    std::string source;
};

inline std::vector<Expectation> load_expectations(const std::string& path, int eps_rank_hint,
                                                  int delta_rank_hint) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    std::vector<Expectation> out;
    for (auto& e : j["expectations"]) {
        Expectation x;
        x.label = e.at("case").get<std::string>();
        x.k = e.at("k").get<int>();
        if (e.contains("dim")) x.dim = e["dim"].get<int>();
        if (e.contains("factors")) {
            x.factors_given = true;
            for (auto& f : e["factors"]) {
                ExpectedFactor ef;
                ef.weight = weight_from_json(f, eps_rank_hint, delta_rank_hint);
                if (f.contains("dim")) ef.dim = f["dim"].get<int>();
                if (f.contains("parity")) ef.odd = (f["parity"].get<std::string>() == "odd");
                x.factors.push_back(std::move(ef));
            }
        }
        if (e.contains("splitness")) {
            x.splitness_given = true;
            for (auto& s : e["splitness"]) x.split_flags.push_back(s.get<std::string>() == "split");
        }
        if (e.contains("source"))
            x.source = e["source"].get<std::string>();
        else if (j.contains("source"))
            x.source = j["source"].get<std::string>();
        if (x.source.empty())
            throw std::runtime_error("expectation for " + x.label + " lacks a source citation");
        out.push_back(std::move(x));
    }
    return out;
}

/// Structured comparison; empty result means pass.
inline json diff_expectation(const Expectation& e, const RunReport& run) {
    json diffs = json::array();
    const RunReport::PerK* pk = nullptr;
    for (auto& c : run.cohomology)
        if (c.k == e.k) pk = &c;
    if (!pk) {
        diffs.push_back({{"kind", "missing-k"}, {"k", e.k}});
        return diffs;
    }
    if (e.dim && *e.dim != pk->dim)
        diffs.push_back({{"kind", "dim"}, {"expected", *e.dim}, {"got", pk->dim}});
    if (e.factors_given) {
        if (e.factors.size() != pk->report.factors.size()) {
            diffs.push_back({{"kind", "factor-count"},
                             {"expected", e.factors.size()},
                             {"got", pk->report.factors.size()}});
        } else {
            // compare as multisets ordered by weight
            auto key = [](const Weight& w) { return w; };
            std::vector<int> order_e(e.factors.size()), order_g(e.factors.size());
            for (size_t i = 0; i < e.factors.size(); ++i) order_e[i] = (int)i, order_g[i] = (int)i;
            std::sort(order_e.begin(), order_e.end(), [&](int a, int b) {
                return key(e.factors[a].weight) < key(e.factors[b].weight);
            });
            std::sort(order_g.begin(), order_g.end(), [&](int a, int b) {
                return key(pk->report.factors[a].weight) < key(pk->report.factors[b].weight);
            });
            for (size_t i = 0; i < order_e.size(); ++i) {
                const ExpectedFactor& ef = e.factors[order_e[i]];
                const CompositionFactor& gf = pk->report.factors[order_g[i]];
                if (!(ef.weight == gf.weight))
                    diffs.push_back({{"kind", "factor-weight"},
                                     {"expected", ef.weight.str()},
                                     {"got", gf.weight.str()}});
                else if (ef.dim && *ef.dim != gf.dim)
                    diffs.push_back({{"kind", "factor-dim"},
                                     {"weight", ef.weight.str()},
                                     {"expected", *ef.dim},
                                     {"got", gf.dim}});
                else if (ef.odd && *ef.odd != gf.odd)
                    diffs.push_back({{"kind", "factor-parity"},
                                     {"weight", ef.weight.str()},
                                     {"expected", *ef.odd ? "odd" : "even"},
                                     {"got", gf.odd ? "odd" : "even"}});
            }
        }
    }
    if (e.splitness_given) {
        std::vector<bool> got = pk->report.split_flags;
        if (e.split_flags != got) {
            json ex = json::array(), g = json::array();
            for (bool b : e.split_flags) ex.push_back(b ? "split" : "nonsplit");
            for (bool b : got) g.push_back(b ? "split" : "nonsplit");
            diffs.push_back({{"kind", "splitness"}, {"expected", ex}, {"got", g}});
        }
    }
    return diffs;
}

} // namespace spencer

#endif
