#pragma once

#include <cstdint>

namespace fmd {

/// Seed for all stochastic operations. Identical seeds yield identical
/// sample streams regardless of evaluation order or thread count.
struct Seed {
    std::uint64_t value = 0;

    /// Derives an independent child seed (realization index, FOV index, ...).
    [[nodiscard]] Seed child(std::uint64_t index) const;
};

/// Philox4x32-10 counter-based generator. One instance per logical stream
/// (e.g. per pixel); streams with distinct (seed, stream) pairs are
/// statistically independent and can be drawn from in any order.
class PixelRng {
public:
    PixelRng(Seed seed, std::uint64_t stream);

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    /// Uniform double in the open interval (0, 1).
    double next_double();

    /// Standard normal via Box-Muller.
    double next_normal();

    /// Poisson sample. Sequential-search inversion below mean 10,
    /// Hormann's PTRS transformed rejection at and above.
    long next_poisson(double mean);

private:
    void refill();

    std::uint32_t key_[2];
    std::uint32_t counter_[4];
    std::uint32_t block_[4];
    int pos_;
};

} // namespace fmd
