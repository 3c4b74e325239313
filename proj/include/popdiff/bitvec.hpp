#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace popdiff {

// Minimal bit vector supporting the one operation the autocorrelation fast
// path needs: popcount of (a AND (b >> shift)).
class BitVec {
public:
    explicit BitVec(std::size_t nbits)
        : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    std::size_t size() const { return nbits_; }

    // word starting at bit offset `bit` (zero-padded past the end)
    std::uint64_t word_at(std::size_t bit) const {
        std::size_t q = bit >> 6, r = bit & 63;
        std::uint64_t lo = q < w_.size() ? w_[q] : 0;
        if (r == 0) return lo;
        std::uint64_t hi = q + 1 < w_.size() ? w_[q + 1] : 0;
        return (lo >> r) | (hi << (64 - r));
    }

    // sum over i of a[i] * b[i + shift]
    static long long shifted_and_count(const BitVec& a, const BitVec& b, std::size_t shift) {
        long long total = 0;
        for (std::size_t j = 0; j < a.w_.size(); ++j) {
            std::uint64_t x = a.w_[j];
            if (!x) continue;
            total += std::popcount(x & b.word_at(j * 64 + shift));
        }
        return total;
    }

private:
    std::size_t nbits_;
    std::vector<std::uint64_t> w_;
};

} // namespace popdiff
