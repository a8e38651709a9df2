#pragma once

// Counter-based random bits.  Every output is a pure function of
// (seed, stream, counter), so per-edge bits are reproducible independent of
// iteration order and of how trials are spread over workers.

#include <cstdint>

namespace perc {

struct RngSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

namespace detail {
// Two rounds of the splitmix64 finalizer; bijective and well mixed.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z = z ^ (z >> 31);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

inline std::uint64_t rng_key(const RngSeed& s) {
  return detail::mix64(s.seed + 0x9e3779b97f4a7c15ULL * detail::mix64(s.stream + 0x2545f4914f6cdd1dULL));
}

// 64 random bits for the given block counter.
inline std::uint64_t rng_block(std::uint64_t key, std::uint64_t counter) {
  return detail::mix64(key ^ (counter + 0x9e3779b97f4a7c15ULL) * 0xd6e8feb86659fd93ULL);
}

// The random bit attached to one edge slot.
inline bool rng_bit(std::uint64_t key, std::uint64_t slot) {
  return (rng_block(key, slot >> 6) >> (slot & 63)) & 1;
}

// Small sequential convenience generator on top of the counter scheme.
class CounterRng {
 public:
  explicit CounterRng(RngSeed s) : key_(rng_key(s)) {}
  std::uint64_t next() { return rng_block(key_, ctr_++); }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  double uniform() { return (next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
};

}  // namespace perc
