#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace tg {

// All randomness in the project descends from a single 64-bit seed. Each
// component draws from its own named stream so corpora stay reproducible when
// unrelated code adds or removes draws.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::mt19937_64 make_stream(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return std::mt19937_64(splitmix64(seed ^ h));
}

}  // namespace tg
