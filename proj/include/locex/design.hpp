#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "locex/gf2.hpp"
#include "locex/util.hpp"

namespace locex {

struct Infeasible : std::runtime_error {
    explicit Infeasible(const std::string& what) : std::runtime_error(what) {}
};

// (n, m, k, l)-design: m l-subsets of [n] with pairwise intersections <= k.
// Construction self-verifies; loading from JSON re-verifies.
struct Design {
    uint32_t universe = 0;
    uint32_t k = 0;
    uint32_t l = 0;
    std::vector<std::vector<uint32_t>> sets; // each sorted ascending

    void verify() const {
        for (const auto& s : sets) {
            if (s.size() != l) throw std::runtime_error("Design: set size != l");
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i] >= universe) throw std::runtime_error("Design: element out of universe");
                if (i && s[i] <= s[i - 1]) throw std::runtime_error("Design: set not sorted/distinct");
            }
        }
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (std::size_t j = i + 1; j < sets.size(); ++j)
                if (intersection_size(sets[i], sets[j]) > k)
                    throw std::runtime_error("Design: intersection bound violated");
    }

    static uint32_t intersection_size(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        uint32_t c = 0;
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] < b[j]) ++i;
            else if (a[i] > b[j]) ++j;
            else { ++c; ++i; ++j; }
        }
        return c;
    }

    nlohmann::json to_json() const {
        nlohmann::json j = {{"kind", "design"},
                            {"params", {{"n", universe}, {"m", sets.size()}, {"k", k}, {"l", l}}},
                            {"sets", sets}};
        j["content_hash"] = hash_hex(j.dump());
        return j;
    }

    static Design from_json(const nlohmann::json& j) {
        Design d;
        d.universe = j.at("params").at("n").get<uint32_t>();
        d.k = j.at("params").at("k").get<uint32_t>();
        d.l = j.at("params").at("l").get<uint32_t>();
        d.sets = j.at("sets").get<std::vector<std::vector<uint32_t>>>();
        if (j.contains("content_hash")) {
            nlohmann::json copy = j;
            copy.erase("content_hash");
            copy["content_hash"] = hash_hex(copy.dump());
            if (copy["content_hash"] != j["content_hash"])
                throw std::runtime_error("Design: content hash mismatch");
        }
        d.verify();
        return d;
    }
};

namespace designdetail {

// Lexicographically smallest l-subset compatible with all accepted sets,
// found by DFS over ascending elements. Pruning on running intersection
// counts keeps this equivalent to plain lexicographic enumeration while
// skipping doomed prefixes wholesale.
inline bool next_compatible_set(uint32_t n, uint32_t l, uint32_t k,
                                const std::vector<std::vector<bool>>& member,
                                std::vector<uint32_t>& out) {
    std::size_t t = member.size();
    std::vector<uint32_t> inter(t, 0);
    std::vector<uint32_t> chosen;
    chosen.reserve(l);

    // returns true once a full set is found
    std::function<bool(uint32_t)> dfs = [&](uint32_t start) -> bool {
        if (chosen.size() == l) { out = chosen; return true; }
        uint32_t need = l - uint32_t(chosen.size());
        for (uint32_t e = start; e + need <= n; ++e) {
            bool ok = true;
            for (std::size_t s = 0; s < t; ++s) {
                if (member[s][e] && inter[s] + 1 > k) { ok = false; break; }
            }
            if (!ok) continue;
            chosen.push_back(e);
            for (std::size_t s = 0; s < t; ++s)
                if (member[s][e]) ++inter[s];
            if (dfs(e + 1)) return true;
            chosen.pop_back();
            for (std::size_t s = 0; s < t; ++s)
                if (member[s][e]) --inter[s];
        }
        return false;
    };
    return dfs(0);
}

} // namespace designdetail

// Greedy set-by-set construction, candidates in lexicographic order.
inline Design build_design(uint32_t n, uint32_t m, uint32_t k, uint32_t l) {
    if (l > n) throw Infeasible("build_design: l > n");
    Design d;
    d.universe = n;
    d.k = k;
    d.l = l;
    std::vector<std::vector<bool>> member;
    for (uint32_t i = 0; i < m; ++i) {
        std::vector<uint32_t> s;
        if (!designdetail::next_compatible_set(n, l, k, member, s))
            throw Infeasible("build_design: greedy search exhausted candidates");
        std::vector<bool> mem(n, false);
        for (uint32_t e : s) mem[e] = true;
        member.push_back(std::move(mem));
        d.sets.push_back(std::move(s));
    }
    d.verify();
    return d;
}

// Weak design: m l-subsets of [d] with sum_{j<i} 2^{|S_i n S_j|} <= kappa(m-1).
struct WeakDesign {
    uint32_t universe = 0;
    uint32_t l = 0;
    double kappa = 0;
    std::vector<std::vector<uint32_t>> sets;

    void verify() const {
        double bound = kappa * double(sets.size() - 1);
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (sets[i].size() != l) throw std::runtime_error("WeakDesign: set size != l");
            for (uint32_t e : sets[i])
                if (e >= universe) throw std::runtime_error("WeakDesign: element out of universe");
            double sum = 0;
            for (std::size_t j = 0; j < i; ++j)
                sum += std::ldexp(1.0, int(Design::intersection_size(sets[i], sets[j])));
            if (sets.size() > 1 && sum > bound + 1e-9)
                throw std::runtime_error("WeakDesign: overlap sum bound violated");
        }
    }

    nlohmann::json to_json() const {
        nlohmann::json j = {{"kind", "weak_design"},
                            {"params", {{"d", universe}, {"m", sets.size()}, {"kappa", kappa}, {"l", l}}},
                            {"sets", sets}};
        j["content_hash"] = hash_hex(j.dump());
        return j;
    }

    static WeakDesign from_json(const nlohmann::json& j) {
        WeakDesign d;
        d.universe = j.at("params").at("d").get<uint32_t>();
        d.kappa = j.at("params").at("kappa").get<double>();
        d.l = j.at("params").at("l").get<uint32_t>();
        d.sets = j.at("sets").get<std::vector<std::vector<uint32_t>>>();
        d.verify();
        return d;
    }
};

namespace designdetail {

inline bool is_prime(uint64_t q) {
    if (q < 2) return false;
    for (uint64_t p = 2; p * p <= q; ++p)
        if (q % p == 0) return false;
    return true;
}

// Smallest prime or power of two >= l. Odd prime powers (9, 25, 27, ...)
// are skipped; a prime below the next one always exists at these scales.
inline uint64_t field_order_for(uint32_t l) {
    for (uint64_t q = std::max<uint64_t>(2, l);; ++q)
        if (is_prime(q) || (q & (q - 1)) == 0) return q;
}

// Evaluation of the i-th polynomial (coefficients = base-q digits of i) at
// point a, over Z_q or GF(2^e) depending on the order.
inline uint64_t poly_eval(uint64_t index, uint64_t a, uint64_t q) {
    bool pow2 = (q & (q - 1)) == 0;
    if (!pow2) {
        uint64_t acc = 0, pw = 1;
        while (index) {
            acc = (acc + (index % q) * pw) % q;
            pw = (pw * a) % q;
            index /= q;
        }
        return acc;
    }
    const GF2Field& f = field_cache(ceil_log2(q));
    Fe acc = f.zero(), pw = f.one(), pa = f.encode(a);
    while (index) {
        acc = f.add(acc, f.mul(f.encode(index % q), pw));
        pw = f.mul(pw, pa);
        index /= q;
    }
    return acc.lo();
}

} // namespace designdetail

// Polynomial-graph construction: the universe splits into l blocks of size
// c = ceil(l / ln kappa); set i takes position (p_i(a) mod c) inside block a.
// Candidates failing the running overlap bound are skipped (greedy), so the
// returned family always verifies.
inline WeakDesign build_weak_design(uint32_t m, double kappa, uint32_t l) {
    if (kappa <= 1.0) throw std::invalid_argument("build_weak_design: kappa must exceed 1");
    if (m == 0 || l == 0) throw std::invalid_argument("build_weak_design: empty parameters");
    uint32_t c = uint32_t(std::ceil(double(l) / std::log(kappa)));
    WeakDesign wd;
    wd.universe = c * l;
    wd.l = l;
    wd.kappa = kappa;

    uint64_t q = designdetail::field_order_for(l);
    double bound = kappa * double(m - 1);
    uint64_t budget = std::max<uint64_t>(4096, 256 * uint64_t(m) * q);

    for (uint64_t index = 0; wd.sets.size() < m; ++index) {
        if (index > budget) throw Infeasible("build_weak_design: polynomial candidates exhausted");
        std::vector<uint32_t> s(l);
        for (uint32_t a = 0; a < l; ++a) {
            uint64_t v = designdetail::poly_eval(index, a, q) % c;
            s[a] = a * c + uint32_t(v);
        }
        std::sort(s.begin(), s.end());
        double sum = 0;
        bool ok = true;
        for (const auto& prev : wd.sets) {
            sum += std::ldexp(1.0, int(Design::intersection_size(s, prev)));
            if (m > 1 && sum > bound + 1e-9) { ok = false; break; }
        }
        if (ok) wd.sets.push_back(std::move(s));
    }
    wd.verify();
    return wd;
}

} // namespace locex
