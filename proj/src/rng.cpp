#include "fmd/rng.hpp"

#include <cmath>

namespace fmd {
namespace {

// SplitMix64 finalizer, used only for seed derivation.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void philox_round(std::uint32_t c[4], std::uint32_t k0, std::uint32_t k1) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * c[2];
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t out0 = hi1 ^ c[1] ^ k0;
    const std::uint32_t out2 = hi0 ^ c[3] ^ k1;
    c[0] = out0;
    c[1] = lo1;
    c[2] = out2;
    c[3] = lo0;
}

} // namespace

Seed Seed::child(std::uint64_t index) const {
    return Seed{mix64(value ^ mix64(index + 1))};
}

PixelRng::PixelRng(Seed seed, std::uint64_t stream) : pos_(4) {
    key_[0] = static_cast<std::uint32_t>(seed.value);
    key_[1] = static_cast<std::uint32_t>(seed.value >> 32);
    counter_[0] = static_cast<std::uint32_t>(stream);
    counter_[1] = static_cast<std::uint32_t>(stream >> 32);
    counter_[2] = 0; // block index, incremented per refill
    counter_[3] = 0;
}

void PixelRng::refill() {
    std::uint32_t c[4] = {counter_[0], counter_[1], counter_[2], counter_[3]};
    std::uint32_t k0 = key_[0];
    std::uint32_t k1 = key_[1];
    for (int round = 0; round < 10; ++round) {
        philox_round(c, k0, k1);
        k0 += kPhiloxW0;
        k1 += kPhiloxW1;
    }
    block_[0] = c[0];
    block_[1] = c[1];
    block_[2] = c[2];
    block_[3] = c[3];
    if (++counter_[2] == 0) ++counter_[3];
    pos_ = 0;
}

std::uint32_t PixelRng::next_u32() {
    if (pos_ == 4) refill();
    return block_[pos_++];
}

std::uint64_t PixelRng::next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
}

double PixelRng::next_double() {
    // 53-bit mantissa, offset by half an ulp so the result is never 0 or 1.
    const std::uint64_t bits = next_u64() >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double PixelRng::next_normal() {
    const double u1 = next_double();
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
}

long PixelRng::next_poisson(double mean) {
    if (mean <= 0.0) return 0;
    if (mean < 10.0) {
        // Inversion by sequential search.
        const double u = next_double();
        double p = std::exp(-mean);
        double cdf = p;
        long k = 0;
        while (u > cdf) {
            ++k;
            p *= mean / static_cast<double>(k);
            cdf += p;
            if (p <= 0.0) break; // underflow guard; tail mass is negligible
        }
        return k;
    }
    // Hormann's PTRS (transformed rejection with squeeze).
    const double slam = std::sqrt(mean);
    const double loglam = std::log(mean);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    for (;;) {
        const double u = next_double() - 0.5;
        const double v = next_double();
        const double us = 0.5 - std::fabs(u);
        const long k = static_cast<long>(std::floor((2.0 * a / us + b) * u + mean + 0.43));
        if (us >= 0.07 && v <= v_r) return k;
        if (k < 0 || (us < 0.013 && v > us)) continue;
        if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
            static_cast<double>(k) * loglam - mean - std::lgamma(static_cast<double>(k) + 1.0)) {
            return k;
        }
    }
}

} // namespace fmd
