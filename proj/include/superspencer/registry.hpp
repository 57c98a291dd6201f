#ifndef SUPERSPENCER_REGISTRY_HPP
#define SUPERSPENCER_REGISTRY_HPP

#include "superspencer/report.hpp"

#include <chrono>

namespace spencer {

struct CaseSpec {
    std::string label;
    std::vector<int> ks; // orders to compute, nonempty
    int kmax = 0;        // 0: derive from ks
};

inline std::vector<int> parse_k_range(const std::string& s) {
    auto dots = s.find("..");
    std::vector<int> ks;
    if (dots == std::string::npos) {
        ks.push_back(std::stoi(s));
    } else {
        int a = std::stoi(s.substr(0, dots));
        int b = std::stoi(s.substr(dots + 2));
        for (int k = a; k <= b; ++k) ks.push_back(k);
    }
    if (ks.empty()) throw std::invalid_argument("empty k range");
    return ks;
}

inline RunReport run_case(const CaseSpec& spec) {
    auto t0 = std::chrono::steady_clock::now();
    GradedPair pair = build_case(spec.label);
    int maxk = 1;
    for (int k : spec.ks) maxk = std::max(maxk, k);
    int kmax = spec.kmax > 0 ? spec.kmax : std::max(1, maxk - 1);
    ProlongationTower tower = cartan_prolong(pair, kmax);

    RunReport run;
    run.label = spec.label;
    run.faithful = pair.faithful;
    run.stabilized = tower.stabilized;
    run.tower_dims = tower.term_dims();
    for (int k : spec.ks) {
        CohomologySpace h = spencer_cohomology(tower, k, 2);
        RunReport::PerK pk;
        pk.k = k;
        pk.dim = h.dim;
        RepSpace hrep = rep_of_cohomology(pair, h);
        pk.report = composition_report(hrep);
        run.cohomology.push_back(std::move(pk));
    }
    run.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    return run;
}

/// The desk-scale registry: every case exercised by the verification data.
inline std::vector<std::string> registry_cases() {
    return {
        "pe:2",          "pe:3",           "pe:4",          "spe:2",
        "spe:3",         "spe:4",          "cpe:2",         "cpe:3",
        "cspe:2",        "cspe:3",         "cspe:4",        "pe-ext:2:1:1",
        "pe-ext:3:1:1",  "pe-ext:4:1:1",   "pe-ext:2:1:2",  "pe-ext:3:1:3",
        "pe-ext:4:1:4",  "sl-std:1:2",     "sl-std:1:3",    "reduced:sl-std:1:2",
        "reduced:sl-std:1:3",              "sl-std:2:2",    "reduced:sl-std:2:2",
        "sl-std:2:3",    "reduced:sl-std:2:3",              "sl-std:3:2",
        "sl-std:3:3",    "sl-d1:2:4:0:1",  "sl-d1:3:2:1:1", "sl-d1:2:4:1:1",
        "q:3:1:+",       "q:3:1:-",        "osp:4:2",       "reduced:osp:4:2",
        "osp:5:2",       "reduced:osp:5:2",
    };
}

} // namespace spencer

#endif
