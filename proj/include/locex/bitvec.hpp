#pragma once

#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>
#include <bit>

namespace locex {

// Fixed-length GF(2) vector, packed 64 bits per word.
// Bit 0 is the least significant bit of word 0. When parsing "1011",
// the leftmost character becomes bit 0.
class BitVector {
public:
    BitVector() = default;

    explicit BitVector(std::size_t length)
        : len_(length), words_((length + 63) / 64, 0) {}

    static BitVector from_string(const std::string& bits) {
        BitVector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] == '1') v.set(i, true);
            else if (bits[i] != '0') throw std::invalid_argument("BitVector: bad bit char");
        }
        return v;
    }

    static BitVector from_u64(uint64_t value, std::size_t length) {
        if (length < 64 && length > 0 && (value >> length) != 0)
            throw std::invalid_argument("BitVector: value does not fit length");
        BitVector v(length);
        if (length > 0) v.words_[0] = (length >= 64) ? value : (value & mask_low(length));
        return v;
    }

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void set(std::size_t i, bool b) {
        check_index(i);
        uint64_t m = uint64_t(1) << (i & 63);
        if (b) words_[i >> 6] |= m;
        else words_[i >> 6] &= ~m;
    }

    void flip(std::size_t i) {
        check_index(i);
        words_[i >> 6] ^= uint64_t(1) << (i & 63);
    }

    BitVector operator^(const BitVector& o) const {
        if (len_ != o.len_) throw std::invalid_argument("BitVector xor: length mismatch");
        BitVector r = *this;
        for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] ^= o.words_[w];
        return r;
    }

    BitVector& operator^=(const BitVector& o) {
        if (len_ != o.len_) throw std::invalid_argument("BitVector xor: length mismatch");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }

    BitVector operator&(const BitVector& o) const {
        if (len_ != o.len_) throw std::invalid_argument("BitVector and: length mismatch");
        BitVector r = *this;
        for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= o.words_[w];
        return r;
    }

    bool operator==(const BitVector& o) const { return len_ == o.len_ && words_ == o.words_; }
    bool operator!=(const BitVector& o) const { return !(*this == o); }
    bool operator<(const BitVector& o) const {
        if (len_ != o.len_) return len_ < o.len_;
        for (std::size_t w = words_.size(); w-- > 0;)
            if (words_[w] != o.words_[w]) return words_[w] < o.words_[w];
        return false;
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (uint64_t w : words_) c += std::size_t(std::popcount(w));
        return c;
    }

    bool any() const {
        for (uint64_t w : words_) if (w) return true;
        return false;
    }

    uint64_t to_u64() const {
        if (len_ > 64) throw std::invalid_argument("BitVector: longer than 64 bits");
        return words_.empty() ? 0 : words_[0];
    }

    // Bits [start, start+count) as a fresh vector.
    BitVector slice(std::size_t start, std::size_t count) const {
        if (start + count > len_) throw std::out_of_range("BitVector slice out of range");
        BitVector r(count);
        for (std::size_t i = 0; i < count; ++i) r.set(i, get(start + i));
        return r;
    }

    BitVector concat(const BitVector& o) const {
        BitVector r(len_ + o.len_);
        for (std::size_t i = 0; i < len_; ++i) r.set(i, get(i));
        for (std::size_t i = 0; i < o.len_; ++i) r.set(len_ + i, o.get(i));
        return r;
    }

    std::string to_string() const {
        std::string s(len_, '0');
        for (std::size_t i = 0; i < len_; ++i) if (get(i)) s[i] = '1';
        return s;
    }

    // Serialized form used in every file format: "len:hex". The hex digits
    // spell the integer sum(bit_i * 2^i), most significant nibble first,
    // padded to ceil(len/4) digits. "5:0d" is the 5-bit vector 10110.
    std::string to_hex() const {
        std::size_t nibbles = (len_ + 3) / 4;
        std::string s = std::to_string(len_) + ":";
        for (std::size_t j = nibbles; j-- > 0;) {
            unsigned nib = 0;
            for (unsigned b = 0; b < 4; ++b) {
                std::size_t i = 4 * j + b;
                if (i < len_ && get(i)) nib |= 1u << b;
            }
            s += "0123456789abcdef"[nib];
        }
        return s;
    }

    static BitVector from_hex(const std::string& s) {
        auto colon = s.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("BitVector: missing length prefix");
        std::size_t len = std::stoull(s.substr(0, colon));
        std::string hex = s.substr(colon + 1);
        if (hex.size() != (len + 3) / 4) throw std::invalid_argument("BitVector: hex digit count mismatch");
        BitVector v(len);
        for (std::size_t j = 0; j < hex.size(); ++j) {
            char c = hex[hex.size() - 1 - j];
            unsigned nib;
            if (c >= '0' && c <= '9') nib = unsigned(c - '0');
            else if (c >= 'a' && c <= 'f') nib = unsigned(c - 'a') + 10;
            else if (c >= 'A' && c <= 'F') nib = unsigned(c - 'A') + 10;
            else throw std::invalid_argument("BitVector: bad hex digit");
            for (unsigned b = 0; b < 4; ++b) {
                std::size_t i = 4 * j + b;
                if (nib & (1u << b)) {
                    if (i >= len) throw std::invalid_argument("BitVector: set bit beyond length");
                    v.set(i, true);
                }
            }
        }
        return v;
    }

    const std::vector<uint64_t>& words() const { return words_; }

private:
    static uint64_t mask_low(std::size_t n) { return n >= 64 ? ~uint64_t(0) : ((uint64_t(1) << n) - 1); }

    void check_index(std::size_t i) const {
        if (i >= len_) throw std::out_of_range("BitVector index out of range");
    }

    std::size_t len_ = 0;
    std::vector<uint64_t> words_;
};

// <a,b> = sum a_i b_i mod 2. Lengths must agree.
inline int inner_product(const BitVector& a, const BitVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("inner_product: length mismatch");
    uint64_t acc = 0;
    const auto& wa = a.words();
    const auto& wb = b.words();
    for (std::size_t w = 0; w < wa.size(); ++w) acc ^= wa[w] & wb[w];
    return std::popcount(acc) & 1;
}

// Output bit j = x[idx[j]]; duplicate indices permitted.
inline BitVector select_bits(const BitVector& x, const std::vector<uint32_t>& idx) {
    BitVector r(idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] >= x.size()) throw std::out_of_range("select_bits: index out of range");
        r.set(j, x.get(idx[j]));
    }
    return r;
}

} // namespace locex
