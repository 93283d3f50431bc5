#pragma once
#include <array>
#include <cmath>
#include <cstdint>

namespace syk {

// Philox 4x32-10 counter-based generator (Salmon et al., SC'11 constants).
// A draw is a pure function of (key, counter), which makes streams trivially
// parallel and order-independent: draw i of stream s is always the same bits.
namespace philox {

inline constexpr std::uint32_t kMult0 = 0xD2511F53u;
inline constexpr std::uint32_t kMult1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
inline constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline std::array<std::uint32_t, 4> block(std::uint64_t key, std::uint64_t ctr_hi,
                                          std::uint64_t ctr_lo) {
    std::uint32_t c0 = static_cast<std::uint32_t>(ctr_lo);
    std::uint32_t c1 = static_cast<std::uint32_t>(ctr_lo >> 32);
    std::uint32_t c2 = static_cast<std::uint32_t>(ctr_hi);
    std::uint32_t c3 = static_cast<std::uint32_t>(ctr_hi >> 32);
    std::uint32_t k0 = static_cast<std::uint32_t>(key);
    std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(kMult0) * c0;
        const std::uint64_t p1 = static_cast<std::uint64_t>(kMult1) * c2;
        const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
        const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
        const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
        const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
        c0 = hi1 ^ c1 ^ k0;
        c1 = lo1;
        c2 = hi0 ^ c3 ^ k1;
        c3 = lo0;
        k0 += kWeyl0;
        k1 += kWeyl1;
    }
    return {c0, c1, c2, c3};
}

}  // namespace philox

// One logical stream of i.i.d. draws, keyed by (seed, stream id). Each draw
// consumes exactly one 128-bit Philox block addressed by its index, so draws
// may be generated in any order, on any thread, with identical results.
class RandomStream {
  public:
    RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0)
        : seed_(seed), stream_(stream_id) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    // Uniform double in the open interval (0, 1), 53 random bits.
    double uniform(std::uint64_t index) const {
        const auto b = philox::block(seed_, stream_, index);
        const std::uint64_t bits =
            ((static_cast<std::uint64_t>(b[0]) << 32) | b[1]) >> 11;
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; one block per draw.
    double normal(std::uint64_t index) const {
        const auto b = philox::block(seed_, stream_, index);
        const std::uint64_t u1bits =
            ((static_cast<std::uint64_t>(b[0]) << 32) | b[1]) >> 11;
        const std::uint64_t u2bits =
            ((static_cast<std::uint64_t>(b[2]) << 32) | b[3]) >> 11;
        const double u1 = (static_cast<double>(u1bits) + 0.5) * 0x1.0p-53;
        const double u2 = (static_cast<double>(u2bits) + 0.5) * 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    // Rademacher sign, +1 or -1 with equal probability.
    int sign(std::uint64_t index) const {
        const auto b = philox::block(seed_, stream_, index);
        return (b[0] & 1u) ? 1 : -1;
    }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_;
};

}  // namespace syk
