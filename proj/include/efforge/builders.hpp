#ifndef EFFORGE_BUILDERS_HPP
#define EFFORGE_BUILDERS_HPP

#include <vector>

#include "efforge/graph.hpp"
#include "efforge/hash_family.hpp"
#include "efforge/polyhedra.hpp"

namespace efforge {

// Spanning-tree formulation over K_n: edge variables x_e plus component
// indicators z_{e,v,u} (e an edge, v an endpoint, u outside e), tied by
//   x(E) = n-1,
//   x_{vw} - z_{vw,v,u} - z_{vw,w,u} = 0          (unordered vw, u outside)
//   x_{vw} + sum_u z_{vu,u,w} = 1                 (ordered pairs v,w)
// with nonnegativity on everything; the projection keeps the x block.
ExtendedFormulation build_spanning_tree_ef(int n);

// Variable index of z_{e,v,u} inside the spanning-tree formulation.
int spanning_tree_z_index(const CompleteGraphContext& ctx, int edge, int v, int u);

// The canonical preimage of a tree: z_{e,v,u} = 1 iff e is a tree edge and u
// sits on v's side of the split T minus e. Projects to the characteristic
// vector of T and satisfies every constraint exactly.
RatVec spanning_tree_section(const CompleteGraphContext& ctx, const EdgeSubset& tree);

// One block of the matching construction, for a single coloring of the nodes
// with 2*ell colors: intra-color edges pinned to zero, unit degree across
// every color class, odd-set cuts over color classes. color_map is 0-based.
ExtendedFormulation build_matching_block(const CompleteGraphContext& ctx,
                                         const std::vector<int>& color_map, int ell);

struct BlockUnionBuild {
  ExtendedFormulation ef;
  int considered_blocks = 0;
  int surviving_blocks = 0;
};

// Union of the per-map matching blocks over a certified family with r = 2*ell.
// Blocks with an empty color class are infeasible and dropped before the
// union.
BlockUnionBuild build_matching_ef(int n, int ell, const HashFamily& family);

// Color-coding dynamic-programming digraph for cycles of length ell through
// v_star: internal nodes (A, v) with A a subset of the first ell-1 colors
// containing v's color; arcs extend A by one color.
struct DPArc {
  int from = 0;
  int to = 0;
  int edge = 0;  // K_n edge position charged by this arc
};

struct DPDigraph {
  static constexpr int kSource = 0;
  static constexpr int kSink = 1;
  int n = 0;
  int ell = 0;
  int v_star = 0;
  int num_nodes = 0;  // including source and sink
  std::vector<std::pair<int, int>> internal_labels;  // (color mask, node)
  std::vector<DPArc> arcs;
};

DPDigraph make_cycle_dp_digraph(int n, int ell, const std::vector<int>& color_map,
                                int v_star);

// Unit-flow polytope of the digraph (nonnegative arcs, conservation at the
// internal nodes, one unit leaving the source) projected to the edge space of
// K_n by summing the arcs charged to each edge.
ExtendedFormulation build_cycle_dp_block(int n, int ell, const std::vector<int>& color_map,
                                         int v_star);

// Two-level union: per map, the blocks over every v_star of the last color
// class, then the union over the maps. Family must be certified with r = ell.
BlockUnionBuild build_cycle_ef(int n, int ell, const HashFamily& family);

}  // namespace efforge

#endif
