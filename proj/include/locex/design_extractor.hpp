#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "locex/descriptor.hpp"
#include "locex/design.hpp"
#include "locex/prng.hpp"
#include "locex/util.hpp"

namespace locex {

// Bipartite graph that is both a sampler-style extractor and a design:
// left degree D, pairwise neighbor intersections <= alpha*D, and for every
// right subset S at most K left vertices misestimate the density of S.
struct DesignExtractorGraph {
    uint32_t left = 0;   // N
    uint32_t right = 0;  // M
    uint32_t degree = 0; // D
    double alpha = 0;
    double eps = 0;
    uint64_t k_bad = 0; // K
    std::vector<std::vector<uint32_t>> gamma; // sorted neighbor lists

    void verify_design() const {
        double cap = alpha * double(degree);
        for (const auto& g : gamma) {
            if (g.size() != degree) throw std::runtime_error("DesignExtractorGraph: degree mismatch");
            for (std::size_t i = 0; i < g.size(); ++i) {
                if (g[i] >= right) throw std::runtime_error("DesignExtractorGraph: neighbor out of range");
                if (i && g[i] <= g[i - 1]) throw std::runtime_error("DesignExtractorGraph: neighbors not distinct");
            }
        }
        for (std::size_t u = 0; u < gamma.size(); ++u)
            for (std::size_t v = u + 1; v < gamma.size(); ++v)
                if (double(Design::intersection_size(gamma[u], gamma[v])) > cap + 1e-9)
                    throw std::runtime_error("DesignExtractorGraph: design property violated");
    }

    nlohmann::json to_json() const {
        nlohmann::json j = {{"kind", "design_extractor"},
                            {"params",
                             {{"N", left}, {"M", right}, {"D", degree}, {"alpha", alpha},
                              {"eps", eps}, {"K", k_bad}}},
                            {"gamma", gamma}};
        j["content_hash"] = hash_hex(j.dump());
        return j;
    }

    static DesignExtractorGraph from_json(const nlohmann::json& j) {
        DesignExtractorGraph g;
        const auto& p = j.at("params");
        g.left = p.at("N").get<uint32_t>();
        g.right = p.at("M").get<uint32_t>();
        g.degree = p.at("D").get<uint32_t>();
        g.alpha = p.at("alpha").get<double>();
        g.eps = p.at("eps").get<double>();
        g.k_bad = p.at("K").get<uint64_t>();
        g.gamma = j.at("gamma").get<std::vector<std::vector<uint32_t>>>();
        if (g.gamma.size() != g.left) throw std::runtime_error("DesignExtractorGraph: left count mismatch");
        g.verify_design();
        return g;
    }
};

// |Bad_S| = #{v : | |Gamma(v) n S|/D  -  |S|/M | > eps}.
inline uint64_t verify_extractor_property(const DesignExtractorGraph& g, const std::vector<bool>& in_s) {
    if (in_s.size() != g.right) throw std::invalid_argument("verify_extractor_property: subset size");
    uint64_t s_size = 0;
    for (bool b : in_s) s_size += b;
    double rho_s = double(s_size) / double(g.right);
    uint64_t bad = 0;
    for (const auto& nb : g.gamma) {
        uint32_t hits = 0;
        for (uint32_t r : nb) hits += in_s[r];
        double rho_v = double(hits) / double(g.degree);
        if (std::abs(rho_v - rho_s) > g.eps) ++bad;
    }
    return bad;
}

// Greedy construction from a seed-embedded strong extractor: candidate left
// vertex x has neighbors {Ext(x, u) : u in {0,1}^d0}. A candidate survives
// when its neighbor set intersects every kept one in at most alpha*D places.
inline DesignExtractorGraph build_design_extractor(const ExtractorDescriptor& base, double alpha,
                                                   uint64_t k_bad, uint32_t want_left, double eps) {
    if (base.embed == SeedEmbed::none)
        throw std::invalid_argument("build_design_extractor: base must embed its seed");
    if (base.n > 24 || base.d > 16 || base.m > 24)
        throw std::invalid_argument("build_design_extractor: candidate space too large");
    uint32_t dgr = uint32_t(1) << base.d;
    DesignExtractorGraph g;
    g.right = uint32_t(1) << base.m;
    g.degree = dgr;
    g.alpha = alpha;
    g.eps = eps;
    g.k_bad = k_bad;
    double cap = alpha * double(dgr);

    uint64_t candidates = uint64_t(1) << base.n;
    for (uint64_t x = 0; x < candidates && g.gamma.size() < want_left; ++x) {
        std::vector<uint32_t> nb(dgr);
        BitVector xv = BitVector::from_u64(x, base.n);
        for (uint32_t u = 0; u < dgr; ++u)
            nb[u] = uint32_t(base.evaluate(xv, BitVector::from_u64(u, base.d)).to_u64());
        std::sort(nb.begin(), nb.end());
        bool distinct = std::adjacent_find(nb.begin(), nb.end()) == nb.end();
        if (!distinct) throw std::runtime_error("build_design_extractor: seed embedding produced repeats");
        bool ok = true;
        for (const auto& kept : g.gamma)
            if (double(Design::intersection_size(nb, kept)) > cap + 1e-9) { ok = false; break; }
        if (ok) g.gamma.push_back(std::move(nb));
    }
    if (g.gamma.size() < want_left)
        throw Infeasible("build_design_extractor: fewer survivors than requested");
    g.left = uint32_t(g.gamma.size());
    g.verify_design();
    return g;
}

// Desk-scale extractor-property certification: the two trivial subsets plus
// `samples` random ones, each recounted exactly. Returns the worst |Bad_S|.
inline uint64_t certify_extractor_property(const DesignExtractorGraph& g, Prng& rng, unsigned samples = 256) {
    uint64_t worst = 0;
    std::vector<bool> s(g.right, false);
    worst = std::max(worst, verify_extractor_property(g, s));
    std::fill(s.begin(), s.end(), true);
    worst = std::max(worst, verify_extractor_property(g, s));
    for (unsigned i = 0; i < samples; ++i) {
        for (uint32_t r = 0; r < g.right; ++r) s[r] = rng.bit();
        worst = std::max(worst, verify_extractor_property(g, s));
    }
    return worst;
}

} // namespace locex
