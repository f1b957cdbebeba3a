#pragma once

#include <cmath>
#include <cstdint>

namespace nbm {

// Philox 4x32-10 counter-based generator (Salmon et al., SC 2011).
// A stream is identified by (seed, stream id); draws within a stream are
// indexed by a 64-bit counter. Streams with distinct ids are independent,
// so batch-parallel sampling reproduces bit-identically regardless of
// scheduling.
class Philox {
public:
    Philox(uint64_t seed, uint64_t stream) {
        key_[0] = static_cast<uint32_t>(seed);
        key_[1] = static_cast<uint32_t>(seed >> 32);
        ctr_[0] = 0;
        ctr_[1] = 0;
        ctr_[2] = static_cast<uint32_t>(stream);
        ctr_[3] = static_cast<uint32_t>(stream >> 32);
        buf_pos_ = 4;
        have_cached_normal_ = false;
        cached_normal_ = 0.0;
    }

    uint32_t next_u32() {
        if (buf_pos_ == 4) refill();
        return buf_[buf_pos_++];
    }

    uint64_t next_u64() {
        uint64_t lo = next_u32();
        uint64_t hi = next_u32();
        return (hi << 32) | lo;
    }

    // Uniform on [0,1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on [0,1) with 24 random bits.
    float next_float() { return static_cast<float>(next_u32() >> 8) * 0x1.0p-24f; }

    // Standard normal via Box-Muller; pairs are cached.
    double next_normal() {
        if (have_cached_normal_) {
            have_cached_normal_ = false;
            return cached_normal_;
        }
        double u1 = 1.0 - next_double();  // (0,1], keeps log() finite
        double u2 = next_double();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        cached_normal_ = r * std::sin(a);
        have_cached_normal_ = true;
        return r * std::cos(a);
    }

    // Unbiased integer on [0, n).
    uint64_t next_below(uint64_t n) {
        uint64_t x, r;
        do {
            x = next_u64();
            r = x % n;
        } while (x - r > UINT64_MAX - (n - 1));
        return r;
    }

private:
    static void mul_hi_lo(uint32_t a, uint32_t b, uint32_t* hi, uint32_t* lo) {
        uint64_t p = static_cast<uint64_t>(a) * b;
        *lo = static_cast<uint32_t>(p);
        *hi = static_cast<uint32_t>(p >> 32);
    }

    void refill() {
        uint32_t c[4] = {ctr_[0], ctr_[1], ctr_[2], ctr_[3]};
        uint32_t k[2] = {key_[0], key_[1]};
        for (int round = 0; round < 10; ++round) {
            uint32_t hi0, lo0, hi1, lo1;
            mul_hi_lo(0xD2511F53u, c[0], &hi0, &lo0);
            mul_hi_lo(0xCD9E8D57u, c[2], &hi1, &lo1);
            uint32_t n0 = hi1 ^ c[1] ^ k[0];
            uint32_t n1 = lo1;
            uint32_t n2 = hi0 ^ c[3] ^ k[1];
            uint32_t n3 = lo0;
            c[0] = n0;
            c[1] = n1;
            c[2] = n2;
            c[3] = n3;
            k[0] += 0x9E3779B9u;
            k[1] += 0xBB67AE85u;
        }
        buf_[0] = c[0];
        buf_[1] = c[1];
        buf_[2] = c[2];
        buf_[3] = c[3];
        buf_pos_ = 0;
        if (++ctr_[0] == 0) ++ctr_[1];  // 64-bit draw counter in words 0..1
    }

    uint32_t key_[2];
    uint32_t ctr_[4];
    uint32_t buf_[4];
    int buf_pos_;
    bool have_cached_normal_;
    double cached_normal_;
};

// Stream-id layout: purpose tag in the top byte, payload below. Keeps the
// streams used for initialization, shuffling, chains, and data noise disjoint.
constexpr uint64_t stream_id(uint8_t tag, uint64_t payload) {
    return (static_cast<uint64_t>(tag) << 56) | (payload & 0x00FFFFFFFFFFFFFFull);
}

namespace stream_tag {
constexpr uint8_t mlp_init = 1;
constexpr uint8_t shuffle = 2;
constexpr uint8_t chain = 3;
constexpr uint8_t data_noise = 4;
constexpr uint8_t synth = 5;
constexpr uint8_t sample_cmd = 6;
}  // namespace stream_tag

// Chain stream for (training step, row index): 36 bits of step, 20 of row.
constexpr uint64_t chain_stream(uint64_t step, uint64_t row) {
    return stream_id(stream_tag::chain, (step << 20) | (row & 0xFFFFFull));
}

}  // namespace nbm
