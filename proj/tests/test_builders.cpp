#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "efforge/builders.hpp"
#include "efforge/rng.hpp"
#include "efforge/union_extension.hpp"

using namespace efforge;

namespace {

bool satisfies(const ExtendedFormulation& ef, const RatVec& y) {
  for (const auto& eq : ef.equations)
    if (dot(eq.coeffs, y) != eq.rhs) return false;
  for (const auto& ineq : ef.inequalities)
    if (dot(ineq.coeffs, y) > ineq.rhs) return false;
  return true;
}

RatVec ones(int n) { return RatVec(static_cast<size_t>(n), Rational(1)); }

}  // namespace

TEST_CASE("spanning tree formulation counts for n=4") {
  ExtendedFormulation ef = build_spanning_tree_ef(4);
  CHECK(ef.dim == 6 + 24);        // x vars + z vars
  CHECK(ef.size() == 30);         // nonnegativity only
  CHECK(ef.equations.size() == 25);  // 1 + 12 + 12
  CHECK(ef.ambient_dim() == 6);
  CHECK_THROWS_AS(build_spanning_tree_ef(1), std::domain_error);
}

TEST_CASE("spanning tree optimum for K_3") {
  ExtendedFormulation ef = build_spanning_tree_ef(3);
  CHECK(optimize(ef, ones(3)).value == 2);
}

TEST_CASE("section values on the path 1-2-3") {
  CompleteGraphContext ctx(3);
  EdgeSubset tree(ctx);
  tree.insert_pair(1, 2);
  tree.insert_pair(2, 3);
  RatVec y = spanning_tree_section(ctx, tree);
  // 3 lies on 2's side of the split at edge {1,2}.
  CHECK(y[static_cast<size_t>(spanning_tree_z_index(ctx, ctx.edge_index(1, 2), 2, 3))] == 1);
  CHECK(y[static_cast<size_t>(spanning_tree_z_index(ctx, ctx.edge_index(1, 2), 1, 3))] == 0);
  // x_{13} + z_{12,2,3} = 0 + 1 = 1.
  Rational lhs = y[static_cast<size_t>(ctx.edge_index(1, 3))] +
                 y[static_cast<size_t>(spanning_tree_z_index(ctx, ctx.edge_index(1, 2), 2, 3))];
  CHECK(lhs == 1);
}

TEST_CASE("sections are feasible and project to their trees") {
  for (int n = 2; n <= 5; ++n) {
    CompleteGraphContext ctx(n);
    ExtendedFormulation ef = build_spanning_tree_ef(n);
    for (const auto& tree : enumerate_spanning_trees(ctx)) {
      RatVec y = spanning_tree_section(ctx, tree);
      CHECK(satisfies(ef, y));
      CHECK(ef.project(y) == tree.characteristic_vector());
    }
  }
  CompleteGraphContext ctx(4);
  EdgeSubset not_tree(ctx);
  not_tree.insert_pair(1, 2);
  not_tree.insert_pair(1, 3);
  not_tree.insert_pair(2, 3);  // triangle, misses node 4
  CHECK_THROWS_AS(spanning_tree_section(ctx, not_tree), std::domain_error);
}

TEST_CASE("feasible points obey the subtour bound") {
  // Random convex combinations of sections project into the tree polytope, in
  // particular x(E(S)) <= |S|-1 on every proper node set S.
  const int n = 4;
  CompleteGraphContext ctx(n);
  ExtendedFormulation ef = build_spanning_tree_ef(n);
  auto trees = enumerate_spanning_trees(ctx);
  std::vector<RatVec> sections;
  for (const auto& tree : trees) sections.push_back(spanning_tree_section(ctx, tree));
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    RatVec weights;
    Rational total = 0;
    for (size_t i = 0; i < sections.size(); ++i) {
      weights.emplace_back(rng.next_int(0, 8));
      total += weights.back();
    }
    if (sgn(total) == 0) weights[0] = total = 1;
    RatVec y = zeros(ef.dim);
    for (size_t i = 0; i < sections.size(); ++i) {
      if (sgn(weights[i]) == 0) continue;
      for (size_t j = 0; j < y.size(); ++j) y[j] += weights[i] / total * sections[i][j];
    }
    CHECK(satisfies(ef, y));
    RatVec x = ef.project(y);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      int size = __builtin_popcount(mask);
      if (size < 2 || size > n - 1) continue;
      Rational inside = 0;
      for (int e = 0; e < ctx.edge_count(); ++e) {
        auto [v, w] = ctx.edge_nodes(e);
        if (((mask >> (v - 1)) & 1u) && ((mask >> (w - 1)) & 1u))
          inside += x[static_cast<size_t>(e)];
      }
      CHECK(inside <= size - 1);
    }
  }
}

TEST_CASE("matching formulation basics") {
  HashFamily family = build_family(3, 2);
  BlockUnionBuild build = build_matching_ef(3, 1, family);
  CHECK(optimize(build.ef, ones(3)).value == 1);
  CHECK(build.surviving_blocks >= 1);

  CHECK_THROWS_AS(build_matching_ef(4, 3, build_family(4, 6, 1)), std::domain_error);
  HashFamily uncertified = build_family(4, 4);
  uncertified.certified = false;
  CHECK_THROWS_AS(build_matching_ef(4, 2, uncertified), std::domain_error);
}

TEST_CASE("matching formulation matches brute force for (2,4)") {
  HashFamily family = build_family(4, 4);
  BlockUnionBuild build = build_matching_ef(4, 2, family);
  CompleteGraphContext ctx(4);
  std::vector<RatVec> vertices;
  for (const auto& m : enumerate_matchings(ctx, 2))
    vertices.push_back(m.characteristic_vector());
  CHECK(vertices.size() == 3);
  auto suite = objective_suite(6, 30, kDefaultSeed);
  CHECK(verify_projection_equals(build.ef, vertices, suite).ok());

  // Size law through the union: every surviving block contributes its
  // nonnegativity rows, all odd color-set cuts, and one multiplier row.
  int per_block = ctx.edge_count() + (1 << (2 * 2 - 1));
  CHECK(build.ef.size() == build.surviving_blocks * (per_block + 1));
}

TEST_CASE("each matching weight vector recovers its own matching for (2,5)") {
  HashFamily family = build_family(5, 4);
  BlockUnionBuild build = build_matching_ef(5, 2, family);
  CompleteGraphContext ctx(5);
  OptimizeSession session(build.ef);
  auto matchings = enumerate_matchings(ctx, 2);
  CHECK(matchings.size() == 15);
  for (const auto& m : matchings)
    CHECK(session.optimize(m.characteristic_vector()).value == 2);
}

TEST_CASE("a block accepts exactly the matchings its map colors bijectively") {
  for (int n = 4; n <= 6; ++n) {
    for (int ell = 1; 2 * ell <= n && ell <= 3; ++ell) {
      HashFamily family = build_family(n, 2 * ell);
      CompleteGraphContext ctx(n);
      auto matchings = enumerate_matchings(ctx, ell);
      for (const auto& map : family.maps) {
        ExtendedFormulation block = build_matching_block(ctx, map, ell);
        for (const auto& m : matchings) {
          std::set<int> colors;
          bool bijective = true;
          for (int e : m.edges()) {
            auto [v, w] = ctx.edge_nodes(e);
            bijective &= colors.insert(map[static_cast<size_t>(v - 1)]).second;
            bijective &= colors.insert(map[static_cast<size_t>(w - 1)]).second;
          }
          CHECK(satisfies(block, m.characteristic_vector()) == bijective);
        }
      }
    }
  }
}

TEST_CASE("blocks with an empty color class are dropped") {
  HashFamily family;
  family.n = 2;
  family.r = 2;
  family.maps = {{0, 0}, {0, 1}};  // first map never uses color 2
  family.certified = certify(family).ok;
  REQUIRE(family.certified);
  BlockUnionBuild build = build_matching_ef(2, 1, family);
  CHECK(build.considered_blocks == 2);
  CHECK(build.surviving_blocks == 1);
  CHECK(optimize(build.ef, ones(1)).value == 1);
}

TEST_CASE("cycle DP digraph for the triangle") {
  // Identity coloring on K_3, v* = 3: one cycle, two directed traversals.
  DPDigraph dp = make_cycle_dp_digraph(3, 3, {0, 1, 2}, 3);
  int s_arcs = 0, t_arcs = 0;
  for (const auto& arc : dp.arcs) {
    s_arcs += arc.from == DPDigraph::kSource;
    t_arcs += arc.to == DPDigraph::kSink;
  }
  CHECK(s_arcs == 2);
  CHECK(t_arcs == 2);

  ExtendedFormulation block = build_cycle_dp_block(3, 3, {0, 1, 2}, 3);
  CompleteGraphContext ctx(3);
  RatVec triangle = enumerate_cycles(ctx, 3).front().characteristic_vector();
  CHECK(optimize(block, triangle).value == 3);
  CHECK(optimize(block, ones(3)).value == 3);
  CHECK(contains_in_fiber(block, triangle));

  CHECK_THROWS_AS(make_cycle_dp_digraph(3, 3, {0, 1, 2}, 1), std::domain_error);
}

TEST_CASE("cycle DP arc counts for a bijective coloring on K_4") {
  DPDigraph dp = make_cycle_dp_digraph(4, 4, {0, 1, 2, 3}, 4);
  int s_arcs = 0, t_arcs = 0, internal = 0;
  for (const auto& arc : dp.arcs) {
    if (arc.from == DPDigraph::kSource)
      ++s_arcs;
    else if (arc.to == DPDigraph::kSink)
      ++t_arcs;
    else
      ++internal;
  }
  CHECK(s_arcs == 3);
  CHECK(t_arcs == 3);
  CHECK(internal == 12);  // 6 ordered color pairs, 2 masks each
}

TEST_CASE("DP digraph structure: acyclic levels and path projections") {
  for (int n = 4; n <= 5; ++n) {
    for (int ell = 3; ell <= 4; ++ell) {
      HashFamily family = build_family(n, ell);
      CompleteGraphContext ctx(n);
      for (const auto& map : family.maps) {
        std::vector<int> class_size(static_cast<size_t>(ell), 0);
        for (int color : map) ++class_size[static_cast<size_t>(color)];
        if (std::count(class_size.begin(), class_size.end(), 0) > 0) continue;
        for (int v_star = 1; v_star <= n; ++v_star) {
          if (map[static_cast<size_t>(v_star - 1)] != ell - 1) continue;
          DPDigraph dp = make_cycle_dp_digraph(n, ell, map, v_star);

          // Every arc climbs exactly one level of |A|.
          auto level = [&](int node) {
            if (node == DPDigraph::kSource) return 0;
            if (node == DPDigraph::kSink) return ell;
            return __builtin_popcount(
                static_cast<unsigned>(dp.internal_labels[static_cast<size_t>(node - 2)].first));
          };
          for (const auto& arc : dp.arcs) CHECK(level(arc.to) == level(arc.from) + 1);

          // Enumerate all s-t paths; each projects to a cycle through v_star
          // and every such cycle is hit exactly twice.
          std::vector<std::vector<size_t>> out_arcs(static_cast<size_t>(dp.num_nodes));
          for (size_t a = 0; a < dp.arcs.size(); ++a)
            out_arcs[static_cast<size_t>(dp.arcs[a].from)].push_back(a);
          std::map<std::vector<int>, int> projected;
          std::vector<size_t> stack_path;
          std::function<void(int)> walk = [&](int node) {
            if (node == DPDigraph::kSink) {
              CHECK(stack_path.size() == static_cast<size_t>(ell));
              std::vector<int> edges;
              for (size_t a : stack_path) edges.push_back(dp.arcs[a].edge);
              std::sort(edges.begin(), edges.end());
              CHECK(std::adjacent_find(edges.begin(), edges.end()) == edges.end());
              ++projected[edges];
              return;
            }
            for (size_t a : out_arcs[static_cast<size_t>(node)]) {
              stack_path.push_back(a);
              walk(dp.arcs[a].to);
              stack_path.pop_back();
            }
          };
          walk(DPDigraph::kSource);

          for (const auto& [edges, count] : projected) {
            CHECK(count == 2);
            // 2-regular on exactly ell nodes including v_star.
            std::vector<int> degree(static_cast<size_t>(n) + 1, 0);
            for (int e : edges) {
              auto [v, w] = ctx.edge_nodes(e);
              ++degree[static_cast<size_t>(v)];
              ++degree[static_cast<size_t>(w)];
            }
            CHECK(degree[static_cast<size_t>(v_star)] == 2);
            int on_cycle = 0;
            for (int v = 1; v <= n; ++v) {
              CHECK((degree[static_cast<size_t>(v)] == 0 || degree[static_cast<size_t>(v)] == 2));
              on_cycle += degree[static_cast<size_t>(v)] == 2;
            }
            CHECK(on_cycle == ell);
          }
        }
      }
    }
  }
}

TEST_CASE("cycle formulation matches brute force for (3,4)") {
  HashFamily family = build_family(4, 3);
  BlockUnionBuild build = build_cycle_ef(4, 3, family);
  CompleteGraphContext ctx(4);
  std::vector<RatVec> vertices;
  for (const auto& c : enumerate_cycles(ctx, 3)) vertices.push_back(c.characteristic_vector());
  CHECK(vertices.size() == 4);
  auto suite = objective_suite(6, 30, kDefaultSeed);
  CHECK(verify_projection_equals(build.ef, vertices, suite).ok());
}

TEST_CASE("cycle formulation unit weights for (4,5)") {
  HashFamily family = build_family(5, 4);
  BlockUnionBuild build = build_cycle_ef(5, 4, family);
  CHECK(optimize(build.ef, ones(10)).value == 4);
  CHECK_THROWS_AS(build_cycle_ef(5, 2, family), std::domain_error);
}
