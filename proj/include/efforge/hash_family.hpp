#ifndef EFFORGE_HASH_FAMILY_HPP
#define EFFORGE_HASH_FAMILY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "efforge/rng.hpp"

namespace efforge {

// Family of maps [n] -> [r] that together hit every r-subset of [n]
// bijectively. Maps are stored 0-based: maps[i][v] in {0..r-1} is the color
// of node v+1.
struct HashFamily {
  int n = 0;
  int r = 0;
  std::vector<std::vector<int>> maps;
  bool certified = false;
};

struct CertifyResult {
  bool ok = false;
  std::vector<int> failing_subset;  // 1-based witness when !ok
};

// Exhaustive check over all C(n,r) subsets.
CertifyResult certify(const HashFamily& family);

// Seeded greedy construction: repeatedly adds the candidate map covering the
// most still-uncovered r-subsets (lowest candidate index on ties) until all
// are covered. Candidates are balanced pseudo-random maps; candidate 0 is the
// plain round-robin coloring, so n == r yields the identity in one map.
// Deterministic for a fixed seed; result is certified before returning.
HashFamily build_family(int n, int r, std::uint64_t seed = kDefaultSeed);

}  // namespace efforge

#endif
