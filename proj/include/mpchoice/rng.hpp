#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace mpchoice {

/// SplitMix64 finaliser; used to spread seeds and derive per-trial streams.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-based stream derivation: trial i of master seed m gets its own seed.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

/// mt19937_64 with portable bounded draws (std distributions differ between
/// standard libraries, so they are avoided for reproducibility).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound), bound > 0; rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = (~std::uint64_t{0}) - ((~std::uint64_t{0}) % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Partial Fisher-Yates: after the call the first r entries of pool are a
  /// uniform r-subset (in random order) of the pool's contents.
  template <typename T>
  void partial_shuffle(std::span<T> pool, std::size_t r) {
    for (std::size_t i = 0; i < r && i + 1 < pool.size(); ++i) {
      const auto j = i + static_cast<std::size_t>(below(pool.size() - i));
      std::swap(pool[i], pool[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mpchoice
