#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace risklab::rng {

// Counter-based substreams: every draw is a pure function of
// (seed, path, step), so simulated paths are identical no matter how work
// is scheduled across threads.

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Distinct, well-mixed word per (seed, path, step, lane).
inline std::uint64_t counter_word(std::uint64_t seed, std::uint64_t path,
                                  std::uint64_t step, std::uint64_t lane) {
    std::uint64_t z = mix64(seed + 0x9e3779b97f4a7c15ull);
    z = mix64(z ^ (path + 0xbf58476d1ce4e5b9ull));
    z = mix64(z ^ (step + 0x94d049bb133111ebull));
    return mix64(z ^ (lane + 0xd6e8feb86659fd93ull));
}

// Uniform in the open interval (0, 1); never returns 0 or 1. The half-step
// offset stays exactly representable only with 52 mantissa bits, hence >> 12.
inline double to_unit(std::uint64_t bits) {
    return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52;
}

// Standard normal draw for (seed, path, step) via Box-Muller.
inline double normal_shock(std::uint64_t seed, std::uint64_t path, std::uint64_t step) {
    const double u1 = to_unit(counter_word(seed, path, step, 0));
    const double u2 = to_unit(counter_word(seed, path, step, 1));
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi_v<double> * u2);
}

} // namespace risklab::rng
