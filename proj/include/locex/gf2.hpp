#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>
#include <bit>

#include "locex/bitvec.hpp"

namespace locex {

// Field element of GF(2^w), w <= 256. Coefficient of x^i sits at bit i.
struct Fe {
    std::array<uint64_t, 4> w{};

    bool operator==(const Fe& o) const { return w == o.w; }
    bool operator!=(const Fe& o) const { return !(*this == o); }
    bool is_zero() const { return !(w[0] | w[1] | w[2] | w[3]); }

    bool get(unsigned i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(unsigned i) { w[i >> 6] |= uint64_t(1) << (i & 63); }

    Fe operator^(const Fe& o) const {
        Fe r;
        for (int i = 0; i < 4; ++i) r.w[i] = w[i] ^ o.w[i];
        return r;
    }

    static Fe from_u64(uint64_t v) { Fe r; r.w[0] = v; return r; }
    uint64_t lo() const { return w[0]; }

    static Fe from_bits(const BitVector& b) {
        if (b.size() > 256) throw std::invalid_argument("Fe: too many bits");
        Fe r;
        for (std::size_t i = 0; i < b.words().size(); ++i) r.w[i] = b.words()[i];
        return r;
    }

    BitVector to_bits(unsigned len) const {
        BitVector b(len);
        for (unsigned i = 0; i < len; ++i) if (get(i)) b.set(i, true);
        return b;
    }
};

namespace gf2detail {

// Dense GF(2)[x] polynomials as word arrays, degree tracked implicitly.
using Poly = std::vector<uint64_t>;

inline int degree(const Poly& p) {
    for (std::size_t i = p.size(); i-- > 0;)
        if (p[i]) return int(i) * 64 + 63 - std::countl_zero(p[i]);
    return -1;
}

inline bool get_bit(const Poly& p, int i) {
    std::size_t w = std::size_t(i) >> 6;
    return w < p.size() && ((p[w] >> (i & 63)) & 1);
}

inline void set_bit(Poly& p, int i) {
    std::size_t w = std::size_t(i) >> 6;
    if (w >= p.size()) p.resize(w + 1, 0);
    p[w] |= uint64_t(1) << (i & 63);
}

inline Poly pxor(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] ^= a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] ^= b[i];
    return r;
}

inline Poly shift_left(const Poly& a, int k) {
    Poly r((a.size() * 64 + std::size_t(k) + 63) / 64 + 1, 0);
    for (std::size_t i = 0; i < a.size() * 64; ++i)
        if (get_bit(a, int(i))) set_bit(r, int(i) + k);
    return r;
}

inline Poly pmod(Poly a, const Poly& m) {
    int dm = degree(m);
    if (dm < 0) throw std::invalid_argument("pmod: zero modulus");
    int da = degree(a);
    while (da >= dm) {
        Poly s = shift_left(m, da - dm);
        a = pxor(a, s);
        da = degree(a);
    }
    a.resize(std::size_t(dm) / 64 + 1);
    return a;
}

inline Poly pmul(const Poly& a, const Poly& b) {
    int da = degree(a), db = degree(b);
    if (da < 0 || db < 0) return Poly{0};
    Poly r((std::size_t(da + db) / 64) + 2, 0);
    for (int i = 0; i <= da; ++i) {
        if (!get_bit(a, i)) continue;
        for (std::size_t w = 0; w < b.size(); ++w) {
            uint64_t word = b[w];
            while (word) {
                int j = std::countr_zero(word);
                word &= word - 1;
                set_bit(r, i + int(w) * 64 + j);
            }
        }
    }
    return r;
}

inline Poly pmulmod(const Poly& a, const Poly& b, const Poly& m) {
    return pmod(pmul(a, b), m);
}

inline Poly pgcd(Poly a, Poly b) {
    while (degree(b) >= 0) {
        Poly r = pmod(a, b);
        a = b;
        b = r;
    }
    return a;
}

inline bool is_one(const Poly& p) { return degree(p) == 0; }

// x^(2^e) mod m by repeated squaring.
inline Poly frobenius(unsigned e, const Poly& m) {
    Poly x{2};
    Poly r = pmod(x, m);
    for (unsigned i = 0; i < e; ++i) r = pmulmod(r, r, m);
    return r;
}

// Rabin's test: f of degree w is irreducible iff x^(2^w) == x (mod f) and
// gcd(x^(2^(w/p)) - x, f) = 1 for every prime p dividing w.
inline bool is_irreducible(const Poly& f) {
    int w = degree(f);
    if (w <= 0) return false;
    if (!get_bit(f, 0)) return w == 1 && get_bit(f, 1); // divisible by x unless f == x
    Poly x{2};
    Poly xw = frobenius(unsigned(w), f);
    if (degree(pxor(xw, pmod(x, f))) >= 0) return false;

    unsigned n = unsigned(w);
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        Poly t = pxor(frobenius(unsigned(w) / p, f), pmod(x, f));
        if (!is_one(pgcd(f, t))) return false;
    }
    if (n > 1) {
        Poly t = pxor(frobenius(unsigned(w) / n, f), pmod(x, f));
        if (!is_one(pgcd(f, t))) return false;
    }
    return true;
}

} // namespace gf2detail

// GF(2^w) with a fixed irreducible modulus. For w in 1..64 the modulus comes
// from the built-in low-weight trinomial/pentanomial table; elsewhere it is
// the lexicographically smallest irreducible of degree w (Rabin search).
// Construction always re-verifies irreducibility.
class GF2Field {
public:
    explicit GF2Field(unsigned w) : w_(w) {
        if (w == 0 || w > 256) throw std::invalid_argument("GF2Field: w must be in 1..256");
        mod_words_ = find_modulus(w);
        gf2detail::Poly p = to_poly(mod_words_, w);
        if (!gf2detail::is_irreducible(p))
            throw std::runtime_error("GF2Field: modulus failed irreducibility check");
    }

    unsigned width() const { return w_; }

    // Modulus as bits 0..w (bit w always set).
    const std::array<uint64_t, 5>& modulus() const { return mod_words_; }

    Fe zero() const { return Fe{}; }
    Fe one() const { return Fe::from_u64(1); }

    Fe encode(uint64_t i) const {
        if (w_ < 64 && (i >> w_) != 0) throw std::invalid_argument("GF2Field: value out of range");
        return Fe::from_u64(i);
    }

    Fe add(const Fe& a, const Fe& b) const { return a ^ b; }

    // Carry-less product reduced modulo the field modulus.
    Fe mul(const Fe& a, const Fe& b) const {
        // product has up to 2w-1 coefficients; 8 words cover w = 256
        std::array<uint64_t, 8> prod{};
        for (unsigned wi = 0; wi < 4; ++wi) {
            uint64_t word = a.w[wi];
            while (word) {
                unsigned i = unsigned(wi) * 64 + unsigned(std::countr_zero(word));
                word &= word - 1;
                // prod ^= b << i
                unsigned sh = i & 63, base = i >> 6;
                for (unsigned bj = 0; bj < 4; ++bj) {
                    uint64_t v = b.w[bj];
                    if (!v) continue;
                    prod[base + bj] ^= v << sh;
                    if (sh) prod[base + bj + 1] ^= v >> (64 - sh);
                }
            }
        }
        reduce(prod);
        Fe r;
        for (int i = 0; i < 4; ++i) r.w[i] = prod[i];
        return r;
    }

    Fe pow(Fe a, uint64_t e) const {
        Fe r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

private:
    static gf2detail::Poly to_poly(const std::array<uint64_t, 5>& words, unsigned) {
        return gf2detail::Poly(words.begin(), words.end());
    }

    void reduce(std::array<uint64_t, 8>& prod) const {
        for (int i = 2 * int(w_) - 2; i >= int(w_); --i) {
            uint64_t bit = (prod[std::size_t(i) >> 6] >> (i & 63)) & 1;
            if (!bit) continue;
            prod[std::size_t(i) >> 6] ^= uint64_t(1) << (i & 63);
            // add modulus (without leading term) shifted by i - w
            int sh = i - int(w_);
            for (unsigned j = 0; j < w_; ++j) {
                if ((mod_words_[j >> 6] >> (j & 63)) & 1) {
                    int t = sh + int(j);
                    prod[std::size_t(t) >> 6] ^= uint64_t(1) << (t & 63);
                }
            }
        }
    }

    static std::array<uint64_t, 5> find_modulus(unsigned w);

    unsigned w_;
    std::array<uint64_t, 5> mod_words_{};
};

namespace gf2detail {

// Exponents of the middle terms of x^w + ... + 1 for w = 1..64
// (low-weight irreducibles, trinomials where they exist).
inline const std::array<std::array<int, 3>, 65>& modulus_table() {
    static const std::array<std::array<int, 3>, 65> t = {{
        {0, 0, 0},   // unused
        {0, -1, -1}, // w=1: x + 1 (middle term exponent 0 collides with constant; handled below)
        {1, -1, -1}, {1, -1, -1}, {1, -1, -1}, {2, -1, -1}, {1, -1, -1}, {1, -1, -1},
        {4, 3, 1},   // 8
        {1, -1, -1}, {3, -1, -1}, {2, -1, -1}, {3, -1, -1},
        {4, 3, 1},   // 13
        {5, -1, -1}, {1, -1, -1},
        {5, 3, 1},   // 16
        {3, -1, -1}, {3, -1, -1},
        {5, 2, 1},   // 19
        {3, -1, -1}, {2, -1, -1}, {1, -1, -1}, {5, -1, -1},
        {4, 3, 1},   // 24
        {3, -1, -1},
        {4, 3, 1},   // 26
        {5, 2, 1},   // 27
        {1, -1, -1}, {2, -1, -1}, {1, -1, -1}, {3, -1, -1},
        {7, 3, 2},   // 32
        {10, -1, -1}, {7, -1, -1}, {2, -1, -1}, {9, -1, -1},
        {6, 4, 1},   // 37
        {6, 5, 1},   // 38
        {4, -1, -1},
        {5, 4, 3},   // 40
        {3, -1, -1}, {7, -1, -1},
        {6, 4, 3},   // 43
        {5, -1, -1},
        {4, 3, 1},   // 45
        {1, -1, -1}, {5, -1, -1},
        {5, 3, 2},   // 48
        {9, -1, -1},
        {4, 3, 2},   // 50
        {6, 3, 1},   // 51
        {3, -1, -1},
        {6, 2, 1},   // 53
        {9, -1, -1}, {7, -1, -1},
        {7, 4, 2},   // 56
        {4, -1, -1}, {19, -1, -1},
        {7, 4, 2},   // 59
        {1, -1, -1},
        {5, 2, 1},   // 61
        {29, -1, -1}, {1, -1, -1},
        {4, 3, 1},   // 64
    }};
    return t;
}

} // namespace gf2detail

inline std::array<uint64_t, 5> GF2Field::find_modulus(unsigned w) {
    std::array<uint64_t, 5> m{};
    auto set = [&m](unsigned i) { m[i >> 6] |= uint64_t(1) << (i & 63); };
    if (w == 1) {
        set(0);
        set(1); // x + 1
        return m;
    }
    if (w <= 64) {
        const auto& row = gf2detail::modulus_table()[w];
        set(0);
        set(w);
        for (int e : row)
            if (e > 0) set(unsigned(e));
        return m;
    }
    // Search the lexicographically smallest irreducible: x^w + c for ascending c.
    for (uint64_t c = 1;; c += 2) {
        gf2detail::Poly p(5, 0);
        p[0] = c;
        gf2detail::set_bit(p, int(w));
        if (gf2detail::is_irreducible(p)) {
            m.fill(0);
            m[0] = c;
            set(w);
            return m;
        }
        if (c > (uint64_t(1) << 20)) throw std::runtime_error("GF2Field: modulus search exhausted");
    }
}

// Carry-less product of a and b reduced mod the field modulus; a,b < 2^w.
inline uint64_t gf2w_mul(uint64_t a, uint64_t b, const GF2Field& f) {
    if (f.width() < 64 && ((a >> f.width()) != 0 || (b >> f.width()) != 0))
        throw std::invalid_argument("gf2w_mul: element out of range");
    return f.mul(Fe::from_u64(a), Fe::from_u64(b)).lo();
}

// Shared per-width field instances (construction runs an irreducibility test,
// so repeated field lookups would be wasteful).
inline const GF2Field& field_cache(unsigned w) {
    static std::map<unsigned, GF2Field> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, GF2Field(w)).first;
    return it->second;
}

} // namespace locex
