#ifndef EFFORGE_RNG_HPP
#define EFFORGE_RNG_HPP

#include <cstdint>
#include <vector>

#include "efforge/rational.hpp"

namespace efforge {

// splitmix64 stream. Self-contained so that seeded runs are bit-identical
// across platforms and standard library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here, the
  // stream only has to be deterministic.
  long next_int(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eedef0123456789ULL;

// Deterministic suite of integer objectives with entries in [-9, 9].
inline std::vector<RatVec> objective_suite(int dim, int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<RatVec> suite;
  suite.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    RatVec c(static_cast<size_t>(dim));
    for (auto& entry : c) entry = Rational(rng.next_int(-9, 9));
    suite.push_back(std::move(c));
  }
  return suite;
}

}  // namespace efforge

#endif
