#ifndef EFFORGE_GRAPH_HPP
#define EFFORGE_GRAPH_HPP

#include <utility>
#include <vector>

#include "efforge/rational.hpp"

namespace efforge {

// Node/edge indexing of the complete graph K_n. Nodes are 1-based at the
// interface; edges {v,w} are numbered 0..n(n-1)/2-1 lexicographically by
// (min,max). Immutable after construction.
class CompleteGraphContext {
 public:
  explicit CompleteGraphContext(int n);

  int node_count() const { return n_; }
  int edge_count() const { return n_ * (n_ - 1) / 2; }

  int edge_index(int v, int w) const;
  // Returns (v,w) with v < w, 1-based.
  std::pair<int, int> edge_nodes(int index) const;

 private:
  int n_;
};

// Characteristic set over the edge positions of one context.
class EdgeSubset {
 public:
  explicit EdgeSubset(const CompleteGraphContext& ctx)
      : ctx_(&ctx), member_(static_cast<size_t>(ctx.edge_count()), false) {}

  const CompleteGraphContext& context() const { return *ctx_; }
  bool contains(int edge) const { return member_.at(static_cast<size_t>(edge)); }
  void insert(int edge) { member_.at(static_cast<size_t>(edge)) = true; }
  void insert_pair(int v, int w) { insert(ctx_->edge_index(v, w)); }
  int cardinality() const;
  std::vector<int> edges() const;
  RatVec characteristic_vector() const;

  bool operator==(const EdgeSubset& other) const { return member_ == other.member_; }

 private:
  const CompleteGraphContext* ctx_;
  std::vector<bool> member_;
};

// Brute-force oracles. Deliberately exhaustive; guarded against instances a
// desk-scale check would never use.
std::vector<EdgeSubset> enumerate_matchings(const CompleteGraphContext& ctx, int ell);
std::vector<EdgeSubset> enumerate_cycles(const CompleteGraphContext& ctx, int ell);
std::vector<EdgeSubset> enumerate_spanning_trees(const CompleteGraphContext& ctx);

struct BruteForceOptimum {
  Rational value;
  EdgeSubset argmax;
};

// Max total weight over the family; ties broken by enumeration order.
BruteForceOptimum brute_force_optimum(const std::vector<EdgeSubset>& family,
                                      const RatVec& weights);

}  // namespace efforge

#endif
