#pragma once

#include <cstdint>
#include <string>

namespace locex {

// FNV-1a 64, used as the content hash on design artifacts, profiles and
// experiment configs.
inline uint64_t fnv1a(const std::string& data) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hash_hex(const std::string& data) {
    uint64_t h = fnv1a(data);
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[std::size_t(i)] = "0123456789abcdef"[h & 15];
        h >>= 4;
    }
    return s;
}

inline unsigned ceil_log2(uint64_t n) {
    unsigned b = 0;
    while (b < 64 && (uint64_t(1) << b) < n) ++b;
    return b;
}

} // namespace locex
