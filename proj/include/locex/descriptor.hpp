#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "json.hpp"

#include "locex/bitvec.hpp"

namespace locex {

enum class SeedEmbed { none, first_bits, last_bits };

// Every construction in this library is delivered as one of these: the
// claimed parameters plus a total, deterministic evaluation map. Claims are
// never trusted by the harness; they are what gets measured against.
struct ExtractorDescriptor {
    std::string name;
    unsigned n = 0; // source length
    unsigned d = 0; // seed length
    unsigned m = 0; // output length
    double k_claim = 0;
    double eps_claim = 1.0;
    unsigned locality_claim = 0; // per-output-bit dependency bound; n for dense maps
    SeedEmbed embed = SeedEmbed::none;
    nlohmann::json params; // construction tree, never the evaluation itself
    std::function<BitVector(const BitVector&, const BitVector&)> evaluate;

    BitVector operator()(const BitVector& x, const BitVector& seed) const {
        if (x.size() != n) throw std::invalid_argument(name + ": source length mismatch");
        if (seed.size() != d) throw std::invalid_argument(name + ": seed length mismatch");
        return evaluate(x, seed);
    }
};

// Seeded condensers share the same calling shape but claim output entropy
// instead of closeness to uniform.
struct CondenserDescriptor {
    std::string name;
    unsigned n = 0;
    unsigned d = 0;
    unsigned t = 0; // output length
    double k_in = 0;
    double k_out_claim = 0;
    double eps_claim = 1.0;
    unsigned locality_claim = 0;
    nlohmann::json params;
    std::function<BitVector(const BitVector&, const BitVector&)> evaluate;

    BitVector operator()(const BitVector& x, const BitVector& seed) const {
        if (x.size() != n) throw std::invalid_argument(name + ": source length mismatch");
        if (seed.size() != d) throw std::invalid_argument(name + ": seed length mismatch");
        return evaluate(x, seed);
    }
};

// Identity and constant fixtures used by composition tests.
inline ExtractorDescriptor identity_descriptor(unsigned n) {
    ExtractorDescriptor e;
    e.name = "identity";
    e.n = n;
    e.d = 0;
    e.m = n;
    e.locality_claim = 1;
    e.params = {{"kind", "identity"}, {"n", n}};
    e.evaluate = [](const BitVector& x, const BitVector&) { return x; };
    return e;
}

inline ExtractorDescriptor constant_descriptor(unsigned n, unsigned d, const BitVector& out) {
    ExtractorDescriptor e;
    e.name = "constant";
    e.n = n;
    e.d = d;
    e.m = unsigned(out.size());
    e.locality_claim = 0;
    e.params = {{"kind", "constant"}, {"n", n}, {"d", d}, {"out", out.to_hex()}};
    e.evaluate = [out](const BitVector&, const BitVector&) { return out; };
    return e;
}

} // namespace locex
