#pragma once

// Every random draw descends from one seed. Consumers ask for a named
// substream, so adding a new consumer never shifts the draws of another.

#include <cstdint>
#include <random>
#include <string_view>

namespace kmt {

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

class SeedTree {
 public:
  explicit SeedTree(std::uint64_t seed) noexcept : seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  SeedTree child(std::string_view name) const noexcept { return SeedTree(splitmix64(seed_ ^ fnv1a(name))); }
  std::mt19937_64 stream(std::string_view name) const { return std::mt19937_64(child(name).seed_); }

 private:
  std::uint64_t seed_;
};

}  // namespace kmt
