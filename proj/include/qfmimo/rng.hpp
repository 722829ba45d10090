#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace qfmimo {

using Engine = std::mt19937_64;

/// Stream tags keep substreams for different purposes disjoint.
enum class StreamTag : std::uint64_t {
  placement = 0x706c6163,
  phase1 = 0x70687331,
  phase2 = 0x70687332,
  iid = 0x69696400,
  sample = 0x73616d70,
  sweep = 0x73776570,
};

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Folds a sequence of keys into one seed; order matters.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) {
  std::uint64_t h = mix64(seed);
  for (std::uint64_t k : keys) h = mix64(h ^ mix64(k));
  return h;
}

inline Engine make_engine(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) {
  return Engine(derive_seed(seed, keys));
}

inline std::uint64_t key(StreamTag tag) { return static_cast<std::uint64_t>(tag); }

}  // namespace qfmimo
