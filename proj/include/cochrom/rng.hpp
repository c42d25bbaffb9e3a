#ifndef COCHROM_RNG_HPP
#define COCHROM_RNG_HPP

#include <cstdint>

namespace cochrom {

// SplitMix64 finalizer (Steele, Lea, Flood 2014). Used as a counter-based
// generator: the k-th value of the stream seeded with s is
// splitmix64(s + (k+1) * GOLDEN_GAMMA). Evaluating at arbitrary counters
// makes every draw order-independent and reproducible across platforms.
inline constexpr std::uint64_t GOLDEN_GAMMA = 0x9E3779B97F4A7C15ULL;

inline constexpr std::uint64_t splitmix64(std::uint64_t x)
{
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

inline constexpr std::uint64_t stream_at(std::uint64_t seed, std::uint64_t counter)
{
    return splitmix64(seed + (counter + 1) * GOLDEN_GAMMA);
}

} // namespace cochrom

#endif
