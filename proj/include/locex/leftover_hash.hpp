#pragma once

#include <cstdint>
#include <stdexcept>

#include "locex/descriptor.hpp"
#include "locex/gf2.hpp"

namespace locex {

// h_u(x) = top-index m bits of u*x computed in GF(2^n'). With index i
// holding the coefficient of x^i, output bit j is coefficient n'-m+j.
inline BitVector leftover_hash_extract(const BitVector& x, const BitVector& u, unsigned m) {
    if (x.size() != u.size()) throw std::invalid_argument("leftover_hash_extract: length mismatch");
    unsigned np = unsigned(x.size());
    if (m > np) throw std::invalid_argument("leftover_hash_extract: m > n'");
    const GF2Field& f = field_cache(np);
    Fe prod = f.mul(Fe::from_bits(u), Fe::from_bits(x));
    BitVector out(m);
    for (unsigned j = 0; j < m; ++j)
        if (prod.get(np - m + j)) out.set(j, true);
    return out;
}

// Leftover hash lemma packaging: a strong (k, 2^-delta)-extractor with
// m = k - 2*delta. The optional embeddings overwrite part of the output with
// the seed verbatim (first bits for the design-extractor neighbor map, last
// bits for samplers that need distinct samples).
inline ExtractorDescriptor make_leftover_hash(unsigned n_prime, double k, unsigned delta,
                                              SeedEmbed embed = SeedEmbed::none) {
    if (k > n_prime) throw std::invalid_argument("make_leftover_hash: k > n'");
    if (2.0 * delta >= k) throw std::invalid_argument("make_leftover_hash: m would be empty");
    unsigned m = unsigned(k - 2 * delta);
    if (embed != SeedEmbed::none && m < n_prime)
        throw std::invalid_argument("make_leftover_hash: embedding needs m >= d");
    ExtractorDescriptor e;
    e.name = "leftover_hash";
    e.n = n_prime;
    e.d = n_prime;
    e.m = m;
    e.k_claim = k;
    e.eps_claim = std::ldexp(1.0, -int(delta));
    e.locality_claim = n_prime; // dense GF(2^n') multiplication
    e.embed = embed;
    e.params = {{"kind", "leftover_hash"}, {"n", n_prime}, {"k", k}, {"delta", delta},
                {"embed", int(embed)}};
    e.evaluate = [m, embed](const BitVector& x, const BitVector& u) {
        BitVector out = leftover_hash_extract(x, u, m);
        if (embed == SeedEmbed::first_bits) {
            for (std::size_t i = 0; i < u.size(); ++i) out.set(i, u.get(i));
        } else if (embed == SeedEmbed::last_bits) {
            for (std::size_t i = 0; i < u.size(); ++i) out.set(m - u.size() + i, u.get(i));
        }
        return out;
    };
    return e;
}

} // namespace locex
