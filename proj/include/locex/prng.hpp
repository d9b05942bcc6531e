#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "locex/bitvec.hpp"

namespace locex {

// Seeded, versioned PRNG for all Monte-Carlo work. The engine identity and
// seed go into every report so a run can be replayed bit for bit. Raw engine
// words only; std distributions vary across standard libraries.
class Prng {
public:
    static constexpr const char* version = "mt19937_64/v1";

    explicit Prng(uint64_t seed) : seed_(seed), eng_(seed) {}

    uint64_t seed() const { return seed_; }

    uint64_t u64() { return eng_(); }

    // Uniform in [0, n) by masked rejection.
    uint64_t below(uint64_t n) {
        if (n == 0) throw std::invalid_argument("Prng::below(0)");
        if ((n & (n - 1)) == 0) return u64() & (n - 1);
        int bits = 64 - std::countl_zero(n - 1);
        uint64_t mask = (bits >= 64) ? ~uint64_t(0) : ((uint64_t(1) << bits) - 1);
        for (;;) {
            uint64_t v = u64() & mask;
            if (v < n) return v;
        }
    }

    // Uniform double in [0,1) with 53 random bits.
    double real01() { return double(u64() >> 11) * 0x1.0p-53; }

    bool bit() { return u64() & 1; }

    BitVector bits(std::size_t len) {
        BitVector v(len);
        for (std::size_t i = 0; i < len; i += 64) {
            uint64_t w = u64();
            for (std::size_t b = 0; b < 64 && i + b < len; ++b)
                if ((w >> b) & 1) v.set(i + b, true);
        }
        return v;
    }

    // k distinct values from [0, n), ascending.
    std::vector<uint64_t> distinct(uint64_t n, std::size_t k) {
        if (k > n) throw std::invalid_argument("Prng::distinct: k > n");
        std::vector<uint64_t> out;
        if (k * 3 > n) {
            std::vector<uint64_t> all(n);
            for (uint64_t i = 0; i < n; ++i) all[i] = i;
            for (std::size_t i = 0; i < k; ++i) {
                std::size_t j = i + std::size_t(below(n - i));
                std::swap(all[i], all[j]);
            }
            out.assign(all.begin(), all.begin() + std::ptrdiff_t(k));
        } else {
            std::vector<bool> seen(n, false);
            while (out.size() < k) {
                uint64_t v = below(n);
                if (!seen[v]) {
                    seen[v] = true;
                    out.push_back(v);
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    uint64_t seed_;
    std::mt19937_64 eng_;
};

// Monte-Carlo results always carry their standard error.
struct Estimate {
    double value = 0.0;
    double sigma = 0.0;
    uint64_t trials = 0;
};

} // namespace locex
