#include "efforge/builders.hpp"

#include <algorithm>
#include <stdexcept>

#include "efforge/union_extension.hpp"

namespace efforge {

namespace {

int popcount(unsigned mask) { return __builtin_popcount(mask); }

RatMat identity_projection(int m) {
  RatMat t(static_cast<size_t>(m), RatVec());
  for (int r = 0; r < m; ++r) {
    t[static_cast<size_t>(r)] = zeros(m);
    t[static_cast<size_t>(r)][static_cast<size_t>(r)] = 1;
  }
  return t;
}

void append_nonnegativity(ExtendedFormulation& ef) {
  for (int j = 0; j < ef.dim; ++j) {
    LinearRow row;
    row.coeffs = zeros(ef.dim);
    row.coeffs[static_cast<size_t>(j)] = -1;
    row.rhs = 0;
    ef.inequalities.push_back(std::move(row));
  }
}

}  // namespace

int spanning_tree_z_index(const CompleteGraphContext& ctx, int edge, int v, int u) {
  const int n = ctx.node_count();
  auto [a, b] = ctx.edge_nodes(edge);
  if (v != a && v != b) throw std::domain_error("v must be an endpoint of the edge");
  if (u == a || u == b || u < 1 || u > n)
    throw std::domain_error("u must be a node outside the edge");
  int side = v == a ? 0 : 1;
  int u_rank = u - 1;
  if (u > a) --u_rank;
  if (u > b) --u_rank;
  return ctx.edge_count() + edge * 2 * (n - 2) + side * (n - 2) + u_rank;
}

ExtendedFormulation build_spanning_tree_ef(int n) {
  if (n < 2) throw std::domain_error("spanning-tree formulation needs n >= 2");
  CompleteGraphContext ctx(n);
  const int num_edges = ctx.edge_count();
  const int dim = num_edges + n * (n - 1) * (n - 2);

  ExtendedFormulation ef;
  ef.dim = dim;

  LinearRow total;
  total.coeffs = zeros(dim);
  for (int e = 0; e < num_edges; ++e) total.coeffs[static_cast<size_t>(e)] = 1;
  total.rhs = n - 1;
  ef.equations.push_back(std::move(total));

  // x_{vw} = z_{vw,v,u} + z_{vw,w,u} for every node u outside the edge.
  for (int e = 0; e < num_edges; ++e) {
    auto [v, w] = ctx.edge_nodes(e);
    for (int u = 1; u <= n; ++u) {
      if (u == v || u == w) continue;
      LinearRow row;
      row.coeffs = zeros(dim);
      row.coeffs[static_cast<size_t>(e)] = 1;
      row.coeffs[static_cast<size_t>(spanning_tree_z_index(ctx, e, v, u))] = -1;
      row.coeffs[static_cast<size_t>(spanning_tree_z_index(ctx, e, w, u))] = -1;
      row.rhs = 0;
      ef.equations.push_back(std::move(row));
    }
  }

  // x_{vw} + sum_{u != v,w} z_{vu,u,w} = 1 for ordered pairs (v,w).
  for (int v = 1; v <= n; ++v) {
    for (int w = 1; w <= n; ++w) {
      if (v == w) continue;
      LinearRow row;
      row.coeffs = zeros(dim);
      row.coeffs[static_cast<size_t>(ctx.edge_index(v, w))] += 1;
      for (int u = 1; u <= n; ++u) {
        if (u == v || u == w) continue;
        int e = ctx.edge_index(v, u);
        row.coeffs[static_cast<size_t>(spanning_tree_z_index(ctx, e, u, w))] += 1;
      }
      row.rhs = 1;
      ef.equations.push_back(std::move(row));
    }
  }

  append_nonnegativity(ef);

  ef.projection_matrix.assign(static_cast<size_t>(num_edges), RatVec());
  for (int e = 0; e < num_edges; ++e) {
    RatVec row = zeros(dim);
    row[static_cast<size_t>(e)] = 1;
    ef.projection_matrix[static_cast<size_t>(e)] = std::move(row);
  }
  ef.projection_offset = zeros(num_edges);
  return ef;
}

RatVec spanning_tree_section(const CompleteGraphContext& ctx, const EdgeSubset& tree) {
  const int n = ctx.node_count();
  if (tree.cardinality() != n - 1)
    throw std::domain_error("edge set is not a spanning tree");

  // Adjacency over tree edges; also serves the connectivity check.
  std::vector<std::vector<int>> adj(static_cast<size_t>(n) + 1);
  for (int e : tree.edges()) {
    auto [v, w] = ctx.edge_nodes(e);
    adj[static_cast<size_t>(v)].push_back(w);
    adj[static_cast<size_t>(w)].push_back(v);
  }
  auto component_of = [&](int start, int blocked_edge) {
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    std::vector<int> stack = {start};
    seen[static_cast<size_t>(start)] = true;
    auto [bv, bw] = ctx.edge_nodes(blocked_edge);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<size_t>(v)]) {
        if ((v == bv && w == bw) || (v == bw && w == bv)) continue;
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = true;
          stack.push_back(w);
        }
      }
    }
    return seen;
  };

  // Connectivity (n-1 edges + connected = tree).
  {
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    std::vector<int> stack = {1};
    seen[1] = true;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<size_t>(v)])
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = true;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached != n) throw std::domain_error("edge set is not a spanning tree");
  }

  const int num_edges = ctx.edge_count();
  RatVec y = zeros(num_edges + n * (n - 1) * (n - 2));
  for (int e : tree.edges()) {
    y[static_cast<size_t>(e)] = 1;
    auto [v, w] = ctx.edge_nodes(e);
    auto side_v = component_of(v, e);
    for (int u = 1; u <= n; ++u) {
      if (u == v || u == w) continue;
      int endpoint = side_v[static_cast<size_t>(u)] ? v : w;
      y[static_cast<size_t>(spanning_tree_z_index(ctx, e, endpoint, u))] = 1;
    }
  }
  return y;
}

ExtendedFormulation build_matching_block(const CompleteGraphContext& ctx,
                                         const std::vector<int>& color_map, int ell) {
  const int n = ctx.node_count();
  const int r = 2 * ell;
  if (static_cast<int>(color_map.size()) != n)
    throw std::domain_error("color map length mismatch");
  const int num_edges = ctx.edge_count();

  ExtendedFormulation ef;
  ef.dim = num_edges;

  // Intra-color edges are pinned to zero by equations, so they do not count
  // toward the size of the block.
  for (int e = 0; e < num_edges; ++e) {
    auto [v, w] = ctx.edge_nodes(e);
    if (color_map[static_cast<size_t>(v - 1)] != color_map[static_cast<size_t>(w - 1)])
      continue;
    LinearRow row;
    row.coeffs = zeros(num_edges);
    row.coeffs[static_cast<size_t>(e)] = 1;
    row.rhs = 0;
    ef.equations.push_back(std::move(row));
  }

  auto cut_coeffs = [&](unsigned color_set) {
    RatVec coeffs = zeros(num_edges);
    for (int e = 0; e < num_edges; ++e) {
      auto [v, w] = ctx.edge_nodes(e);
      bool v_in = (color_set >> color_map[static_cast<size_t>(v - 1)]) & 1u;
      bool w_in = (color_set >> color_map[static_cast<size_t>(w - 1)]) & 1u;
      if (v_in != w_in) coeffs[static_cast<size_t>(e)] = 1;
    }
    return coeffs;
  };

  for (int s = 0; s < r; ++s) {
    LinearRow row;
    row.coeffs = cut_coeffs(1u << s);
    row.rhs = 1;
    ef.equations.push_back(std::move(row));
  }

  append_nonnegativity(ef);

  // Odd-set cuts x(delta(S)) >= 1 for every odd S of color classes.
  for (unsigned mask = 1; mask < (1u << r); ++mask) {
    if (popcount(mask) % 2 == 0) continue;
    LinearRow row;
    row.coeffs = cut_coeffs(mask);
    for (auto& c : row.coeffs) c = -c;
    row.rhs = -1;
    ef.inequalities.push_back(std::move(row));
  }

  ef.projection_matrix = identity_projection(num_edges);
  ef.projection_offset = zeros(num_edges);
  return ef;
}

BlockUnionBuild build_matching_ef(int n, int ell, const HashFamily& family) {
  if (ell < 1 || 2 * ell > n) throw std::domain_error("need 1 <= ell <= n/2");
  if (!family.certified) throw std::domain_error("hash family is not certified");
  if (family.n != n || family.r != 2 * ell)
    throw std::domain_error("hash family does not match (n, 2*ell)");

  CompleteGraphContext ctx(n);
  BlockUnionBuild build;
  build.considered_blocks = static_cast<int>(family.maps.size());
  std::vector<ExtendedFormulation> blocks;
  for (const auto& map : family.maps) {
    std::vector<int> class_size(static_cast<size_t>(2 * ell), 0);
    for (int color : map) ++class_size[static_cast<size_t>(color)];
    if (std::find(class_size.begin(), class_size.end(), 0) != class_size.end())
      continue;  // an empty color class makes the degree equation infeasible
    blocks.push_back(build_matching_block(ctx, map, ell));
  }
  if (blocks.empty())
    throw std::domain_error("every block of the matching formulation is infeasible");
  build.surviving_blocks = static_cast<int>(blocks.size());
  build.ef = union_extension(blocks);
  return build;
}

DPDigraph make_cycle_dp_digraph(int n, int ell, const std::vector<int>& color_map,
                                int v_star) {
  if (ell < 3) throw std::domain_error("cycles need ell >= 3");
  if (static_cast<int>(color_map.size()) != n)
    throw std::domain_error("color map length mismatch");
  if (v_star < 1 || v_star > n || color_map[static_cast<size_t>(v_star - 1)] != ell - 1)
    throw std::domain_error("v_star must carry the last color");

  CompleteGraphContext ctx(n);
  DPDigraph dp;
  dp.n = n;
  dp.ell = ell;
  dp.v_star = v_star;

  const unsigned full = (1u << (ell - 1)) - 1u;
  std::vector<std::vector<int>> node_id(full + 1,
                                        std::vector<int>(static_cast<size_t>(n) + 1, -1));
  int next = 2;  // 0 = source, 1 = sink
  for (unsigned mask = 1; mask <= full; ++mask) {
    for (int v = 1; v <= n; ++v) {
      int color = color_map[static_cast<size_t>(v - 1)];
      if (color >= ell - 1 || ((mask >> color) & 1u) == 0) continue;
      node_id[mask][static_cast<size_t>(v)] = next++;
      dp.internal_labels.emplace_back(static_cast<int>(mask), v);
    }
  }
  dp.num_nodes = next;

  for (int v = 1; v <= n; ++v) {
    int color = color_map[static_cast<size_t>(v - 1)];
    if (color >= ell - 1) continue;
    dp.arcs.push_back({DPDigraph::kSource, node_id[1u << color][static_cast<size_t>(v)],
                       ctx.edge_index(v_star, v)});
  }
  for (unsigned mask = 1; mask <= full; ++mask) {
    for (int v = 1; v <= n; ++v) {
      int from = node_id[mask][static_cast<size_t>(v)];
      if (from < 0) continue;
      for (int w = 1; w <= n; ++w) {
        int color = color_map[static_cast<size_t>(w - 1)];
        if (color >= ell - 1 || ((mask >> color) & 1u) != 0) continue;
        dp.arcs.push_back({from, node_id[mask | (1u << color)][static_cast<size_t>(w)],
                           ctx.edge_index(v, w)});
      }
    }
  }
  for (int v = 1; v <= n; ++v) {
    int from = node_id[full][static_cast<size_t>(v)];
    if (from < 0) continue;
    dp.arcs.push_back({from, DPDigraph::kSink, ctx.edge_index(v_star, v)});
  }
  return dp;
}

ExtendedFormulation build_cycle_dp_block(int n, int ell, const std::vector<int>& color_map,
                                         int v_star) {
  DPDigraph dp = make_cycle_dp_digraph(n, ell, color_map, v_star);
  CompleteGraphContext ctx(n);
  const int num_arcs = static_cast<int>(dp.arcs.size());
  const int num_edges = ctx.edge_count();

  ExtendedFormulation ef;
  ef.dim = num_arcs;

  // Flow conservation at every internal node.
  RatMat balance(static_cast<size_t>(dp.num_nodes), RatVec());
  for (int u = 2; u < dp.num_nodes; ++u)
    balance[static_cast<size_t>(u)] = zeros(num_arcs);
  for (int a = 0; a < num_arcs; ++a) {
    const auto& arc = dp.arcs[static_cast<size_t>(a)];
    if (arc.to >= 2) balance[static_cast<size_t>(arc.to)][static_cast<size_t>(a)] += 1;
    if (arc.from >= 2) balance[static_cast<size_t>(arc.from)][static_cast<size_t>(a)] -= 1;
  }
  for (int u = 2; u < dp.num_nodes; ++u) {
    LinearRow row;
    row.coeffs = std::move(balance[static_cast<size_t>(u)]);
    row.rhs = 0;
    ef.equations.push_back(std::move(row));
  }

  LinearRow source;
  source.coeffs = zeros(num_arcs);
  for (int a = 0; a < num_arcs; ++a)
    if (dp.arcs[static_cast<size_t>(a)].from == DPDigraph::kSource)
      source.coeffs[static_cast<size_t>(a)] = 1;
  source.rhs = 1;
  ef.equations.push_back(std::move(source));

  append_nonnegativity(ef);

  ef.projection_matrix.assign(static_cast<size_t>(num_edges),
                              RatVec(static_cast<size_t>(num_arcs), Rational(0)));
  for (int a = 0; a < num_arcs; ++a)
    ef.projection_matrix[static_cast<size_t>(dp.arcs[static_cast<size_t>(a)].edge)]
                        [static_cast<size_t>(a)] += 1;
  ef.projection_offset = zeros(num_edges);
  return ef;
}

BlockUnionBuild build_cycle_ef(int n, int ell, const HashFamily& family) {
  if (ell < 3 || ell > n) throw std::domain_error("need 3 <= ell <= n");
  if (!family.certified) throw std::domain_error("hash family is not certified");
  if (family.n != n || family.r != ell)
    throw std::domain_error("hash family does not match (n, ell)");

  BlockUnionBuild build;
  build.considered_blocks = static_cast<int>(family.maps.size());
  std::vector<ExtendedFormulation> per_map;
  for (const auto& map : family.maps) {
    std::vector<int> class_size(static_cast<size_t>(ell), 0);
    for (int color : map) ++class_size[static_cast<size_t>(color)];
    // Any empty color class kills every path of this map's digraphs.
    if (std::find(class_size.begin(), class_size.end(), 0) != class_size.end())
      continue;
    std::vector<ExtendedFormulation> inner;
    for (int v = 1; v <= n; ++v)
      if (map[static_cast<size_t>(v - 1)] == ell - 1)
        inner.push_back(build_cycle_dp_block(n, ell, map, v));
    per_map.push_back(union_extension(inner));
  }
  if (per_map.empty())
    throw std::domain_error("every block of the cycle formulation is infeasible");
  build.surviving_blocks = static_cast<int>(per_map.size());
  build.ef = union_extension(per_map);
  return build;
}

}  // namespace efforge
