#include <doctest.h>

#include "efforge/graph.hpp"
#include "efforge/rational.hpp"

using namespace efforge;

TEST_CASE("edge indexing is lexicographic and involutive") {
  CompleteGraphContext ctx(5);
  CHECK(ctx.edge_count() == 10);
  CHECK(ctx.edge_index(1, 2) == 0);
  CHECK(ctx.edge_index(2, 1) == 0);
  CHECK(ctx.edge_index(1, 5) == 3);
  CHECK(ctx.edge_index(4, 5) == 9);
  for (int e = 0; e < ctx.edge_count(); ++e) {
    auto [v, w] = ctx.edge_nodes(e);
    CHECK(v < w);
    CHECK(ctx.edge_index(v, w) == e);
  }
  CHECK_THROWS_AS(ctx.edge_index(1, 1), std::domain_error);
  CHECK_THROWS_AS(ctx.edge_index(0, 2), std::domain_error);
  CHECK_THROWS_AS(CompleteGraphContext(0), std::domain_error);
}

TEST_CASE("matching enumeration") {
  CompleteGraphContext k4(4);
  CHECK(enumerate_matchings(k4, 2).size() == 3);
  CompleteGraphContext k5(5);
  CHECK(enumerate_matchings(k5, 0).size() == 1);
  CHECK(enumerate_matchings(k5, 0).front().cardinality() == 0);
  CompleteGraphContext k6(6);
  CHECK(enumerate_matchings(k6, 3).size() == 15);
  CHECK_THROWS_AS(enumerate_matchings(k4, 3), std::domain_error);
  CHECK_THROWS_AS(enumerate_matchings(k4, -1), std::domain_error);

  // Closed form n!/(l! 2^l (n-2l)!) against enumeration, n <= 8.
  for (int n = 1; n <= 8; ++n) {
    CompleteGraphContext ctx(n);
    for (int ell = 0; 2 * ell <= n; ++ell) {
      Rational expected = factorial(static_cast<unsigned>(n)) /
                          (factorial(static_cast<unsigned>(ell)) *
                           Rational(1 << ell) *
                           factorial(static_cast<unsigned>(n - 2 * ell)));
      CHECK(Rational(static_cast<long>(enumerate_matchings(ctx, ell).size())) == expected);
    }
  }

  // Every matching of size l has 2l distinct endpoints.
  for (const auto& m : enumerate_matchings(k6, 2)) {
    std::vector<int> degree(7, 0);
    for (int e : m.edges()) {
      auto [v, w] = k6.edge_nodes(e);
      ++degree[static_cast<size_t>(v)];
      ++degree[static_cast<size_t>(w)];
    }
    int touched = 0;
    for (int v = 1; v <= 6; ++v) {
      CHECK(degree[static_cast<size_t>(v)] <= 1);
      touched += degree[static_cast<size_t>(v)];
    }
    CHECK(touched == 4);
  }
}

TEST_CASE("cycle enumeration") {
  CompleteGraphContext k4(4);
  CHECK(enumerate_cycles(k4, 3).size() == 4);
  CHECK(enumerate_cycles(k4, 4).size() == 3);
  CompleteGraphContext k3(3);
  CHECK(enumerate_cycles(k3, 3).size() == 1);
  CHECK_THROWS_AS(enumerate_cycles(k4, 2), std::domain_error);
  CHECK_THROWS_AS(enumerate_cycles(k4, 5), std::domain_error);

  // C(n,l) (l-1)!/2 cycles; every cycle is 2-regular on exactly l nodes.
  CompleteGraphContext k6(6);
  for (int ell = 3; ell <= 6; ++ell) {
    auto cycles = enumerate_cycles(k6, ell);
    Rational expected = binomial(6, static_cast<unsigned>(ell)) *
                        factorial(static_cast<unsigned>(ell - 1)) / 2;
    CHECK(Rational(static_cast<long>(cycles.size())) == expected);
    for (const auto& c : cycles) {
      std::vector<int> degree(7, 0);
      for (int e : c.edges()) {
        auto [v, w] = k6.edge_nodes(e);
        ++degree[static_cast<size_t>(v)];
        ++degree[static_cast<size_t>(w)];
      }
      int on_cycle = 0;
      for (int v = 1; v <= 6; ++v) {
        CHECK((degree[static_cast<size_t>(v)] == 0 || degree[static_cast<size_t>(v)] == 2));
        if (degree[static_cast<size_t>(v)] == 2) ++on_cycle;
      }
      CHECK(on_cycle == ell);
    }
  }
}

TEST_CASE("spanning tree enumeration") {
  CompleteGraphContext k3(3);
  CHECK(enumerate_spanning_trees(k3).size() == 3);
  CompleteGraphContext k4(4);
  CHECK(enumerate_spanning_trees(k4).size() == 16);
  CompleteGraphContext k2(2);
  CHECK(enumerate_spanning_trees(k2).size() == 1);
  // Cayley n^{n-2}
  for (int n = 2; n <= 6; ++n) {
    CompleteGraphContext ctx(n);
    long expected = 1;
    for (int i = 0; i < n - 2; ++i) expected *= n;
    CHECK(static_cast<long>(enumerate_spanning_trees(ctx).size()) == expected);
  }
}

TEST_CASE("size guards") {
  CompleteGraphContext big(17);
  CHECK_THROWS_AS(enumerate_matchings(big, 1), std::length_error);
  CHECK_THROWS_AS(enumerate_cycles(big, 3), std::length_error);
  CompleteGraphContext nine(9);
  CHECK_THROWS_AS(enumerate_spanning_trees(nine), std::length_error);
}

TEST_CASE("brute force optimum") {
  CompleteGraphContext k4(4);
  auto perfect = enumerate_matchings(k4, 2);
  RatVec ones(static_cast<size_t>(k4.edge_count()), Rational(1));
  CHECK(brute_force_optimum(perfect, ones).value == 2);

  auto triangles = enumerate_cycles(k4, 3);
  RatVec target = triangles.front().characteristic_vector();
  auto opt = brute_force_optimum(triangles, target);
  CHECK(opt.value == 3);
  CHECK(opt.argmax == triangles.front());

  auto trees = enumerate_spanning_trees(k4);
  CHECK(brute_force_optimum(trees, ones).value == 3);

  CHECK_THROWS_AS(brute_force_optimum({}, ones), std::domain_error);

  // Value is invariant under permuting the family.
  std::vector<EdgeSubset> reversed(triangles.rbegin(), triangles.rend());
  RatVec weights;
  for (int e = 0; e < k4.edge_count(); ++e) weights.emplace_back(e % 3 - 1);
  CHECK(brute_force_optimum(triangles, weights).value ==
        brute_force_optimum(reversed, weights).value);
}
