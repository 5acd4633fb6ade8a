#include "efforge/hash_family.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace efforge {

namespace {

constexpr int kNodeCap = 16;
constexpr int kBatchSize = 64;
constexpr int kMaxBatches = 20000;

std::vector<std::vector<int>> all_subsets(int n, int r) {
  std::vector<std::vector<int>> subsets;
  std::vector<int> combo(static_cast<size_t>(r));
  std::iota(combo.begin(), combo.end(), 1);
  while (true) {
    subsets.push_back(combo);
    int i = r - 1;
    while (i >= 0 && combo[static_cast<size_t>(i)] == n - r + i + 1) --i;
    if (i < 0) break;
    ++combo[static_cast<size_t>(i)];
    for (int j = i + 1; j < r; ++j)
      combo[static_cast<size_t>(j)] = combo[static_cast<size_t>(j - 1)] + 1;
  }
  return subsets;
}

bool injective_on(const std::vector<int>& map, const std::vector<int>& subset, int r,
                  std::vector<bool>& scratch) {
  std::fill(scratch.begin(), scratch.end(), false);
  for (int v : subset) {
    int color = map[static_cast<size_t>(v - 1)];
    if (scratch[static_cast<size_t>(color)]) return false;
    scratch[static_cast<size_t>(color)] = true;
  }
  (void)r;
  return true;
}

// Balanced map: a random permutation colored round-robin, so every color
// class has floor(n/r) or ceil(n/r) nodes. Candidate index 0 keeps the
// identity permutation.
std::vector<int> balanced_map(int n, int r, Rng& rng, bool identity) {
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  if (!identity) {
    for (int i = n - 1; i > 0; --i) {
      int j = static_cast<int>(rng.next_int(0, i));
      std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    }
  }
  std::vector<int> map(static_cast<size_t>(n));
  for (int pos = 0; pos < n; ++pos)
    map[static_cast<size_t>(perm[static_cast<size_t>(pos)])] = pos % r;
  return map;
}

}  // namespace

CertifyResult certify(const HashFamily& family) {
  if (family.r < 1 || family.r > family.n)
    throw std::domain_error("hash family range out of bounds");
  for (const auto& map : family.maps) {
    if (static_cast<int>(map.size()) != family.n)
      throw std::domain_error("hash map length mismatch");
    for (int color : map)
      if (color < 0 || color >= family.r)
        throw std::domain_error("hash map value out of range");
  }
  CertifyResult result;
  std::vector<bool> scratch(static_cast<size_t>(family.r), false);
  for (const auto& subset : all_subsets(family.n, family.r)) {
    bool covered = false;
    for (const auto& map : family.maps)
      if (injective_on(map, subset, family.r, scratch)) {
        covered = true;
        break;
      }
    if (!covered) {
      result.ok = false;
      result.failing_subset = subset;
      return result;
    }
  }
  result.ok = true;
  return result;
}

HashFamily build_family(int n, int r, std::uint64_t seed) {
  if (r < 1 || r > n) throw std::domain_error("need 1 <= r <= n");
  if (n > kNodeCap)
    throw std::length_error("hash family certification refuses n > " +
                            std::to_string(kNodeCap));

  auto subsets = all_subsets(n, r);
  std::vector<bool> covered(subsets.size(), false);
  size_t remaining = subsets.size();

  HashFamily family;
  family.n = n;
  family.r = r;

  Rng rng(seed);
  std::vector<bool> scratch(static_cast<size_t>(r), false);
  bool first_candidate = true;
  for (int batch = 0; batch < kMaxBatches && remaining > 0; ++batch) {
    std::vector<std::vector<int>> candidates;
    candidates.reserve(kBatchSize);
    for (int i = 0; i < kBatchSize; ++i) {
      candidates.push_back(balanced_map(n, r, rng, first_candidate));
      first_candidate = false;
    }
    size_t best_gain = 0;
    int best_index = -1;
    for (int i = 0; i < kBatchSize; ++i) {
      size_t gain = 0;
      for (size_t s = 0; s < subsets.size(); ++s)
        if (!covered[s] && injective_on(candidates[static_cast<size_t>(i)], subsets[s], r, scratch))
          ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best_index = i;
      }
    }
    if (best_index < 0) continue;  // dead batch, draw fresh candidates
    const auto& chosen = candidates[static_cast<size_t>(best_index)];
    for (size_t s = 0; s < subsets.size(); ++s)
      if (!covered[s] && injective_on(chosen, subsets[s], r, scratch)) {
        covered[s] = true;
        --remaining;
      }
    family.maps.push_back(chosen);
  }
  if (remaining > 0)
    throw std::runtime_error("greedy hash family construction did not converge");

  family.certified = certify(family).ok;
  return family;
}

}  // namespace efforge
