#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "locex/bitvec.hpp"
#include "locex/prng.hpp"

namespace locex {

// Explicit probability table over {0,1}^bits, bits <= 24. Beyond the table
// cap only sampler-backed estimators are allowed.
class FiniteDistribution {
public:
    static constexpr unsigned table_cap_bits = 24;

    FiniteDistribution(unsigned bits, std::vector<double> probs)
        : bits_(bits), p_(std::move(probs)) {
        if (bits > table_cap_bits) throw std::invalid_argument("FiniteDistribution: table cap exceeded");
        if (p_.size() != (std::size_t(1) << bits)) throw std::invalid_argument("FiniteDistribution: table size mismatch");
        double s = 0;
        for (double v : p_) {
            if (v < 0) throw std::invalid_argument("FiniteDistribution: negative probability");
            s += v;
        }
        if (std::abs(s - 1.0) > 1e-12) throw std::invalid_argument("FiniteDistribution: table does not sum to 1");
    }

    static FiniteDistribution uniform(unsigned bits) {
        std::vector<double> p(std::size_t(1) << bits, 1.0 / double(std::size_t(1) << bits));
        return FiniteDistribution(bits, std::move(p));
    }

    static FiniteDistribution point_mass(unsigned bits, uint64_t outcome) {
        std::vector<double> p(std::size_t(1) << bits, 0.0);
        p.at(outcome) = 1.0;
        return FiniteDistribution(bits, std::move(p));
    }

    unsigned bits() const { return bits_; }
    double prob(uint64_t a) const { return p_[a]; }
    const std::vector<double>& table() const { return p_; }

    // Nonzero outcomes, ascending.
    std::vector<uint64_t> support() const {
        std::vector<uint64_t> s;
        for (uint64_t a = 0; a < p_.size(); ++a)
            if (p_[a] > 0) s.push_back(a);
        return s;
    }

    FiniteDistribution map(unsigned out_bits, const std::function<uint64_t(uint64_t)>& f) const {
        std::vector<double> q(std::size_t(1) << out_bits, 0.0);
        for (uint64_t a = 0; a < p_.size(); ++a)
            if (p_[a] > 0) q.at(f(a)) += p_[a];
        return FiniteDistribution(out_bits, std::move(q));
    }

    uint64_t sample(Prng& rng) const {
        double r = rng.real01();
        double acc = 0;
        for (uint64_t a = 0; a < p_.size(); ++a) {
            acc += p_[a];
            if (r < acc) return a;
        }
        return uint64_t(p_.size() - 1);
    }

private:
    unsigned bits_;
    std::vector<double> p_;
};

// (1/2) * sum |P(a) - Q(a)|, exact on explicit tables.
inline double statistical_distance(const FiniteDistribution& p, const FiniteDistribution& q) {
    if (p.bits() != q.bits()) throw std::invalid_argument("statistical_distance: length mismatch");
    double s = 0;
    for (uint64_t a = 0; a < p.table().size(); ++a) s += std::abs(p.prob(a) - q.prob(a));
    return 0.5 * s;
}

inline double sd_from_uniform(const FiniteDistribution& p) {
    double u = 1.0 / double(p.table().size());
    double s = 0;
    for (double v : p.table()) s += std::abs(v - u);
    return 0.5 * s;
}

// -log2 of the maximum outcome probability.
inline double min_entropy(const FiniteDistribution& p) {
    double mx = 0;
    for (double v : p.table()) mx = std::max(mx, v);
    if (mx <= 0) throw std::invalid_argument("min_entropy: empty support");
    return -std::log2(mx);
}

// coll(X) = Pr[X1 = X2] = sum P(a)^2, exact.
inline double collision_probability(const FiniteDistribution& p) {
    double s = 0;
    for (double v : p.table()) s += v * v;
    return s;
}

inline double renyi2_entropy(const FiniteDistribution& p) {
    return -std::log2(collision_probability(p));
}

// Unbiased paired-sample estimator for coll(X) when only a sampler exists.
template <typename Draw>
Estimate collision_estimate(Draw&& draw, uint64_t pairs) {
    uint64_t hits = 0;
    for (uint64_t i = 0; i < pairs; ++i)
        if (draw() == draw()) ++hits;
    double v = double(hits) / double(pairs);
    double sigma = std::sqrt(std::max(v * (1 - v), 1e-300) / double(pairs));
    return Estimate{v, sigma, pairs};
}

// Exact source constructors used throughout the verification harness.

// Uniform over `support_size` outcomes chosen without replacement.
inline FiniteDistribution make_flat_source(unsigned n, unsigned k, Prng& rng) {
    if (n > FiniteDistribution::table_cap_bits) throw std::invalid_argument("make_flat_source: cap exceeded");
    uint64_t size = uint64_t(1) << k;
    auto supp = rng.distinct(uint64_t(1) << n, size);
    std::vector<double> p(std::size_t(1) << n, 0.0);
    for (uint64_t a : supp) p[a] = 1.0 / double(size);
    return FiniteDistribution(n, std::move(p));
}

// Free positions uniform, the rest pinned to fixed_values.
inline FiniteDistribution make_bit_fixing_source(unsigned n, const std::vector<uint32_t>& free_pos,
                                                 const BitVector& fixed_values) {
    if (n > FiniteDistribution::table_cap_bits) throw std::invalid_argument("make_bit_fixing_source: cap exceeded");
    if (fixed_values.size() != n) throw std::invalid_argument("make_bit_fixing_source: fixed_values length");
    std::vector<double> p(std::size_t(1) << n, 0.0);
    uint64_t k = free_pos.size();
    double w = 1.0 / double(uint64_t(1) << k);
    for (uint64_t assign = 0; assign < (uint64_t(1) << k); ++assign) {
        uint64_t a = fixed_values.to_u64();
        for (uint64_t j = 0; j < k; ++j) {
            uint64_t m = uint64_t(1) << free_pos[j];
            if ((assign >> j) & 1) a |= m;
            else a &= ~m;
        }
        p[a] += w;
    }
    return FiniteDistribution(n, std::move(p));
}

// Uniform over offset + span(basis); basis rows must be independent.
inline FiniteDistribution make_affine_source(unsigned n, const std::vector<uint64_t>& basis, uint64_t offset) {
    if (n > FiniteDistribution::table_cap_bits) throw std::invalid_argument("make_affine_source: cap exceeded");
    // rank check by elimination
    std::vector<uint64_t> rows = basis;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        uint64_t pivot = 0;
        for (std::size_t j = i; j < rows.size(); ++j)
            if (rows[j]) { std::swap(rows[i], rows[j]); pivot = rows[i]; break; }
        if (!pivot) throw std::invalid_argument("make_affine_source: dependent basis");
        int hb = 63 - std::countl_zero(pivot);
        for (std::size_t j = 0; j < rows.size(); ++j)
            if (j != i && ((rows[j] >> hb) & 1)) rows[j] ^= pivot;
    }
    uint64_t k = basis.size();
    std::vector<double> p(std::size_t(1) << n, 0.0);
    double w = 1.0 / double(uint64_t(1) << k);
    for (uint64_t coef = 0; coef < (uint64_t(1) << k); ++coef) {
        uint64_t a = offset;
        for (uint64_t j = 0; j < k; ++j)
            if ((coef >> j) & 1) a ^= basis[j];
        p[a] += w;
    }
    return FiniteDistribution(n, std::move(p));
}

// Random k-dimensional affine source; adversarial inputs for linear maps.
inline FiniteDistribution make_random_affine_source(unsigned n, unsigned k, Prng& rng) {
    std::vector<uint64_t> basis;
    uint64_t mask = (n >= 64) ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
    std::vector<uint64_t> echelon;
    while (basis.size() < k) {
        uint64_t v = rng.u64() & mask;
        uint64_t r = v;
        for (uint64_t e : echelon) {
            int hb = 63 - std::countl_zero(e);
            if ((r >> hb) & 1) r ^= e;
        }
        if (r == 0) continue;
        basis.push_back(v);
        echelon.push_back(r);
    }
    return make_affine_source(n, basis, rng.u64() & mask);
}

} // namespace locex
