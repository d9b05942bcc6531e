#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "locex/bitvec.hpp"
#include "locex/gf2.hpp"

namespace locex {

// Seed of the affine pairwise-independent family over GF(2^l):
// a_i = A xor enc(i) * B. Serialized length is exactly 2l bits (A then B).
struct PairwiseSeed {
    unsigned l = 0;
    Fe a;
    Fe b;

    static PairwiseSeed from_bits(const BitVector& r) {
        if (r.size() % 2 != 0) throw std::invalid_argument("PairwiseSeed: seed length must be 2l");
        PairwiseSeed s;
        s.l = unsigned(r.size() / 2);
        s.a = Fe::from_bits(r.slice(0, s.l));
        s.b = Fe::from_bits(r.slice(s.l, s.l));
        return s;
    }

    BitVector to_bits() const { return a.to_bits(l).concat(b.to_bits(l)); }
};

// The first `count` strings of the family. Over a uniform seed these are
// uniform and pairwise independent; enc(0) = 0 pins a_0 = A.
inline std::vector<BitVector> pairwise_strings(const PairwiseSeed& r, uint64_t count) {
    if (r.l == 0 || (r.l < 64 && count > (uint64_t(1) << r.l)))
        throw std::invalid_argument("pairwise_strings: count exceeds field size");
    const GF2Field& f = field_cache(r.l);
    std::vector<BitVector> out;
    out.reserve(count);
    for (uint64_t i = 0; i < count; ++i)
        out.push_back(f.add(r.a, f.mul(f.encode(i), r.b)).to_bits(r.l));
    return out;
}

inline BitVector pairwise_string_at(const PairwiseSeed& r, uint64_t i) {
    const GF2Field& f = field_cache(r.l);
    return f.add(r.a, f.mul(f.encode(i), r.b)).to_bits(r.l);
}

} // namespace locex
