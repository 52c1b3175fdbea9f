#pragma once

#include <cstdint>

namespace qrkg {

/// Addressable stream identity: identical (base, context, point, sample)
/// reproduces an identical random object on any platform and at any
/// thread count.
struct RngSeed {
    std::uint64_t base = 0;
    std::uint32_t context = 0;  // which experiment stage is drawing
    std::uint32_t point = 0;    // axis index within a sweep
    std::uint32_t sample = 0;   // sample index within a point
};

// Context tags used by the library. Values are part of the output format:
// changing one changes every seeded artifact.
inline constexpr std::uint32_t kCtxCli = 0;
inline constexpr std::uint32_t kCtxSweep = 1;
inline constexpr std::uint32_t kCtxWidthScan = 2;
inline constexpr std::uint32_t kCtxWidthConfirm = 3;
inline constexpr std::uint32_t kCtxCoupleRkg = 4;
inline constexpr std::uint32_t kCtxCoupleEr = 5;

/// SplitMix64 finalizer; also the stream-key mixer.
std::uint64_t mix64(std::uint64_t x);

/// Collapses a seed tuple into one 64-bit stream key by chained mixing:
///   k = mix64(base); k = mix64(k ^ context); k = mix64(k ^ point);
///   k = mix64(k ^ sample).
std::uint64_t stream_key(const RngSeed& seed);

/// xoshiro256** seeded from a stream key via four SplitMix64 draws.
/// The generator and every derived draw (bounded ints by Lemire rejection,
/// doubles from the top 53 bits) are fixed algorithms so that seeds stay
/// portable across compilers and library versions.
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t key);
    explicit Xoshiro256(const RngSeed& seed) : Xoshiro256(stream_key(seed)) {}

    std::uint64_t next();

    /// Uniform integer in [0, bound); bound must be nonzero.
    std::uint64_t next_below(std::uint64_t bound);

    /// Uniform double in [0, 1).
    double next_double();

private:
    std::uint64_t s_[4];
};

}  // namespace qrkg
