#pragma once

#include <cstdint>

namespace baselgeo {

// Canonical double in [0, 1): top 53 bits of a 64-bit draw.  Used instead of
// std::uniform_real_distribution, whose output is implementation-defined.
inline double uniform01(std::uint64_t raw) {
    return static_cast<double>(raw >> 11) * 0x1.0p-53;
}

// splitmix64 finalizer; decorrelates per-stream seeds derived from a master seed.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace baselgeo
