#include "efforge/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace efforge {

namespace {

constexpr int kEnumerationNodeCap = 16;
constexpr int kSpanningTreeNodeCap = 8;

void check_node_cap(int n, int cap) {
  if (n > cap)
    throw std::length_error("enumeration oracle refuses n > " + std::to_string(cap));
}

}  // namespace

CompleteGraphContext::CompleteGraphContext(int n) : n_(n) {
  if (n < 1) throw std::domain_error("node count must be >= 1");
}

int CompleteGraphContext::edge_index(int v, int w) const {
  if (v < 1 || w < 1 || v > n_ || w > n_ || v == w)
    throw std::domain_error("invalid edge endpoints");
  if (v > w) std::swap(v, w);
  // Edges sorted by (v,w): all edges with min node 1 first, etc.
  return (v - 1) * n_ - v * (v - 1) / 2 + (w - v - 1);
}

std::pair<int, int> CompleteGraphContext::edge_nodes(int index) const {
  if (index < 0 || index >= edge_count())
    throw std::domain_error("edge index out of range");
  int v = 1;
  int remaining = index;
  while (remaining >= n_ - v) {
    remaining -= n_ - v;
    ++v;
  }
  return {v, v + 1 + remaining};
}

int EdgeSubset::cardinality() const {
  return static_cast<int>(std::count(member_.begin(), member_.end(), true));
}

std::vector<int> EdgeSubset::edges() const {
  std::vector<int> out;
  for (size_t i = 0; i < member_.size(); ++i)
    if (member_[i]) out.push_back(static_cast<int>(i));
  return out;
}

RatVec EdgeSubset::characteristic_vector() const {
  RatVec x = zeros(static_cast<int>(member_.size()));
  for (size_t i = 0; i < member_.size(); ++i)
    if (member_[i]) x[i] = 1;
  return x;
}

namespace {

// Matchings of exactly the requested size: branch on the smallest node not
// yet decided, either leaving it unmatched or pairing it with a larger free
// node. Deterministic order.
void matchings_rec(const CompleteGraphContext& ctx, int ell, int node,
                   std::vector<bool>& used, std::vector<std::pair<int, int>>& chosen,
                   std::vector<EdgeSubset>& out) {
  const int n = ctx.node_count();
  if (static_cast<int>(chosen.size()) == ell) {
    EdgeSubset m(ctx);
    for (auto [v, w] : chosen) m.insert_pair(v, w);
    out.push_back(std::move(m));
    return;
  }
  if (node > n) return;
  int remaining_nodes = n - node + 1;
  if (remaining_nodes < 2 * (ell - static_cast<int>(chosen.size()))) return;
  if (used[static_cast<size_t>(node)]) {
    matchings_rec(ctx, ell, node + 1, used, chosen, out);
    return;
  }
  for (int w = node + 1; w <= n; ++w) {
    if (used[static_cast<size_t>(w)]) continue;
    used[static_cast<size_t>(node)] = used[static_cast<size_t>(w)] = true;
    chosen.emplace_back(node, w);
    matchings_rec(ctx, ell, node + 1, used, chosen, out);
    chosen.pop_back();
    used[static_cast<size_t>(node)] = used[static_cast<size_t>(w)] = false;
  }
  // node stays unmatched
  matchings_rec(ctx, ell, node + 1, used, chosen, out);
}

void cycles_rec(const CompleteGraphContext& ctx, int ell, int anchor,
                std::vector<int>& path, std::vector<bool>& used,
                std::vector<EdgeSubset>& out) {
  const int n = ctx.node_count();
  if (static_cast<int>(path.size()) == ell) {
    // Kill the reflected traversal: second node below last node.
    if (path[1] > path.back()) return;
    EdgeSubset c(ctx);
    for (size_t i = 0; i + 1 < path.size(); ++i)
      c.insert_pair(path[i], path[i + 1]);
    c.insert_pair(path.back(), anchor);
    out.push_back(std::move(c));
    return;
  }
  for (int v = anchor + 1; v <= n; ++v) {
    if (used[static_cast<size_t>(v)]) continue;
    used[static_cast<size_t>(v)] = true;
    path.push_back(v);
    cycles_rec(ctx, ell, anchor, path, used, out);
    path.pop_back();
    used[static_cast<size_t>(v)] = false;
  }
}

}  // namespace

std::vector<EdgeSubset> enumerate_matchings(const CompleteGraphContext& ctx, int ell) {
  check_node_cap(ctx.node_count(), kEnumerationNodeCap);
  if (ell < 0 || 2 * ell > ctx.node_count())
    throw std::domain_error("matching size out of range");
  std::vector<EdgeSubset> out;
  std::vector<bool> used(static_cast<size_t>(ctx.node_count()) + 1, false);
  std::vector<std::pair<int, int>> chosen;
  matchings_rec(ctx, ell, 1, used, chosen, out);
  return out;
}

std::vector<EdgeSubset> enumerate_cycles(const CompleteGraphContext& ctx, int ell) {
  check_node_cap(ctx.node_count(), kEnumerationNodeCap);
  if (ell < 3 || ell > ctx.node_count())
    throw std::domain_error("cycle length out of range");
  std::vector<EdgeSubset> out;
  // Anchor each cycle at its smallest node.
  for (int anchor = 1; anchor + ell - 1 <= ctx.node_count(); ++anchor) {
    std::vector<bool> used(static_cast<size_t>(ctx.node_count()) + 1, false);
    std::vector<int> path = {anchor};
    cycles_rec(ctx, ell, anchor, path, used, out);
  }
  return out;
}

std::vector<EdgeSubset> enumerate_spanning_trees(const CompleteGraphContext& ctx) {
  check_node_cap(ctx.node_count(), kSpanningTreeNodeCap);
  const int n = ctx.node_count();
  const int m = ctx.edge_count();
  std::vector<EdgeSubset> out;
  if (n == 1) {
    out.emplace_back(ctx);
    return out;
  }
  // All (n-1)-subsets of edges, kept when acyclic (then automatically
  // spanning and connected).
  std::vector<int> combo(static_cast<size_t>(n - 1));
  std::iota(combo.begin(), combo.end(), 0);
  std::vector<int> parent(static_cast<size_t>(n) + 1);
  auto find = [&](int v) {
    while (parent[static_cast<size_t>(v)] != v) {
      parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      v = parent[static_cast<size_t>(v)];
    }
    return v;
  };
  while (true) {
    std::iota(parent.begin(), parent.end(), 0);
    bool acyclic = true;
    for (int e : combo) {
      auto [v, w] = ctx.edge_nodes(e);
      int rv = find(v), rw = find(w);
      if (rv == rw) {
        acyclic = false;
        break;
      }
      parent[static_cast<size_t>(rv)] = rw;
    }
    if (acyclic) {
      EdgeSubset tree(ctx);
      for (int e : combo) tree.insert(e);
      out.push_back(std::move(tree));
    }
    // next combination
    int i = n - 2;
    while (i >= 0 && combo[static_cast<size_t>(i)] == m - (n - 1) + i) --i;
    if (i < 0) break;
    ++combo[static_cast<size_t>(i)];
    for (int j = i + 1; j < n - 1; ++j)
      combo[static_cast<size_t>(j)] = combo[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

BruteForceOptimum brute_force_optimum(const std::vector<EdgeSubset>& family,
                                      const RatVec& weights) {
  if (family.empty()) throw std::domain_error("brute_force_optimum: empty family");
  BruteForceOptimum current{Rational(0), family.front()};
  bool first = true;
  for (const auto& member : family) {
    Rational value = 0;
    for (int e : member.edges()) value += weights.at(static_cast<size_t>(e));
    if (first || value > current.value) {
      current.value = value;
      current.argmax = member;
      first = false;
    }
  }
  return current;
}

}  // namespace efforge
