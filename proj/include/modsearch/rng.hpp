#pragma once

// Reproducible randomness. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; bounded draws use rejection sampling
// below instead of std::uniform_int_distribution, whose algorithm is
// implementation-defined. Together they make every seeded dataset, query
// and fuzz case bit-identical across standard libraries.

#include <cstdint>
#include <initializer_list>
#include <random>

namespace modsearch {

using Engine = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Folds a base seed and a list of coordinates (size, trial, case index...)
/// into an independent stream seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> coords) noexcept {
  std::uint64_t h = mix64(base);
  for (const std::uint64_t c : coords) h = mix64(h ^ mix64(c));
  return h;
}

/// Uniform integer in [0, bound). bound must be > 0.
inline std::uint64_t uniform_below(Engine& eng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = eng();
    if (r >= threshold) return r % bound;
  }
}

/// Uniform integer in [lo, hi], lo <= hi.
inline std::int64_t uniform_between(Engine& eng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == UINT64_MAX) return static_cast<std::int64_t>(eng());
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + uniform_below(eng, span + 1));
}

inline bool coin_flip(Engine& eng) { return uniform_below(eng, 2) == 0; }

}  // namespace modsearch
