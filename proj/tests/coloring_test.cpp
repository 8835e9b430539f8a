#include <doctest.h>

#include <algorithm>
#include <random>

#include "cfc/coloring.hpp"
#include "cfc/decomposition.hpp"
#include "cfc/errors.hpp"
#include "cfc/extremal.hpp"
#include "cfc/generate.hpp"
#include "oracles.hpp"

using namespace cfc;

namespace {

Path path_with_edges(std::vector<EdgeId> edges) {
  Path p;
  p.edges = std::move(edges);
  return p;
}

int bound_of(const Graph& g) { return std::max(2, static_cast<int>(find_bridges(g).size())); }

}  // namespace

TEST_CASE("is_conflict_free_path") {
  const EdgeColoring c({1, 2, 1});
  CHECK(is_conflict_free_path(path_with_edges({0, 1, 2}), c));
  CHECK_FALSE(is_conflict_free_path(path_with_edges({0, 2}), c));  // [1,1]
  CHECK(is_conflict_free_path(path_with_edges({1}), c));
  CHECK_THROWS_AS(is_conflict_free_path(path_with_edges({3}), c), hypothesis_error);
}

TEST_CASE("conflict-freeness ignores color names") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> color(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> colors(8);
    for (auto& c : colors) c = color(rng);
    std::vector<int> rename{0, 1, 2, 3, 4};
    std::shuffle(rename.begin() + 1, rename.end(), rng);
    std::vector<int> renamed(colors.size());
    for (std::size_t i = 0; i < colors.size(); ++i) renamed[i] = rename[static_cast<std::size_t>(colors[i])] + 10;
    const auto p = path_with_edges({0, 2, 3, 5, 7});
    REQUIRE(is_conflict_free_path(p, EdgeColoring(colors)) == is_conflict_free_path(p, EdgeColoring(renamed)));
  }
}

TEST_CASE("EdgeColoring") {
  const EdgeColoring c({3, 3, 7, 1});
  CHECK(c.color_count() == 3);
  CHECK(c.canonical().colors() == std::vector<int>{1, 1, 2, 3});
  CHECK_THROWS_AS(EdgeColoring({1, 0}), hypothesis_error);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> color(1, 9);
  for (int i = 0; i < 100; ++i) {
    std::vector<int> colors(10);
    for (auto& x : colors) x = color(rng);
    const auto once = EdgeColoring(colors).canonical();
    REQUIRE(once.canonical() == once);
    REQUIRE(once.color_count() == EdgeColoring(colors).color_count());
  }
}

TEST_CASE("coloring file format") {
  const EdgeColoring c({1, 2, 1, 3});
  CHECK(format_coloring(c) == "0 1\n1 2\n2 1\n3 3\n");
  CHECK(parse_coloring(format_coloring(c), 4) == c);
  CHECK_THROWS_AS(parse_coloring("0 1\n", 2), parse_error);
  CHECK_THROWS_AS(parse_coloring("0 0\n1 1\n", 2), parse_error);
}

TEST_SUITE("verifier") {
  TEST_CASE("K4 monochromatic is conflict-free connected") {
    const auto k4 = make_complete(4);
    const auto r = is_conflict_free_connected(k4, EdgeColoring(std::vector<int>(6, 1)));
    CHECK(r.ok);
    CHECK(r.witness.size() == 6);
    for (const auto& [pair, path] : r.witness) CHECK(path.length() == 1);
  }

  TEST_CASE("P3 monochromatic fails between the endpoints") {
    const auto r = is_conflict_free_connected(make_path(3), EdgeColoring({1, 1}));
    CHECK_FALSE(r.ok);
    REQUIRE(r.failure_pair);
    CHECK(*r.failure_pair == VertexPair{0, 2});
    CHECK(r.witness.empty());
  }

  TEST_CASE("C4 colored 1,2,2,2") {
    const auto c4 = make_cycle(4);
    const EdgeColoring c({1, 2, 2, 2});
    const auto r = is_conflict_free_connected(c4, c);
    CHECK(r.ok);
    CHECK(oracle::conflict_free_connected(c4, c.colors()));
    for (const auto& [pair, path] : r.witness) {
      CHECK(is_simple_path(c4, path));
      CHECK(is_conflict_free_path(path, c));
    }
  }

  TEST_CASE("agrees with the oracle on random colorings") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
      const auto g = random_connected_graph(6, 0.3, rng);
      std::uniform_int_distribution<int> color(1, 3);
      std::vector<int> colors(static_cast<std::size_t>(g.size()));
      for (auto& x : colors) x = color(rng);
      REQUIRE(is_conflict_free_connected(g, EdgeColoring(colors)).ok ==
              oracle::conflict_free_connected(g, colors));
    }
  }

  TEST_CASE("cap and size mismatch") {
    Graph g = make_complete(7);
    Graph h(8);
    for (const auto& e : g.edges()) h.add_edge(e.u, e.v);
    h.add_edge(6, 7);
    h.add_edge(0, 7);
    std::vector<int> mono(static_cast<std::size_t>(h.size()), 1);
    CHECK_THROWS_AS(is_conflict_free_connected(h, EdgeColoring(mono), 50), path_cap_exceeded);
    CHECK_THROWS_AS(is_conflict_free_connected(make_path(3), EdgeColoring({1})), hypothesis_error);
  }
}

TEST_SUITE("bridge-block coloring") {
  TEST_CASE("C5 uses two colors") {
    const auto g = make_cycle(5);
    const auto c = bridge_block_coloring(g);
    CHECK(c.colors() == std::vector<int>{1, 2, 2, 2, 2});
    CHECK(is_conflict_free_connected(g, c).ok);
  }

  TEST_CASE("star K_{1,4}: bridges get 1..4") {
    const auto g = make_star(4);
    const auto c = bridge_block_coloring(g);
    CHECK(c.colors() == std::vector<int>{1, 2, 3, 4});
    CHECK(is_conflict_free_connected(g, c).ok);
  }

  TEST_CASE("two triangles and a bridge") {
    const std::pair<int, int> e[] = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}};
    const auto g = make_from_edges(6, e);
    const auto c = bridge_block_coloring(g);
    CHECK(c.colors() == std::vector<int>{1, 2, 2, 1, 2, 2, 1});
    CHECK(c.color_count() <= 2);
    CHECK(is_conflict_free_connected(g, c).ok);
    CHECK(oracle::conflict_free_connected(g, c.colors()));
  }

  TEST_CASE("K2 uses one color") {
    const auto c = bridge_block_coloring(make_path(2));
    CHECK(c.colors() == std::vector<int>{1});
  }

  TEST_CASE("pendant-heavy graph: bridges of colors 1 and 2 cross singleton components") {
    // path 3-0 (bridge), triangle 0-1-2, bridge 2-4, bridge 4-5, bridge 4-6
    const std::pair<int, int> e[] = {{0, 3}, {0, 1}, {1, 2}, {0, 2}, {2, 4}, {4, 5}, {4, 6}};
    const auto g = make_from_edges(7, e);
    const auto c = bridge_block_coloring(g);
    CHECK(c.color_count() == 4);
    CHECK(is_conflict_free_connected(g, c).ok);
  }

  TEST_CASE("errors") {
    const std::pair<int, int> e[] = {{0, 1}, {2, 3}};
    CHECK_THROWS_AS(bridge_block_coloring(make_from_edges(4, e)), hypothesis_error);
    CHECK_THROWS_AS(bridge_block_coloring(Graph(1)), hypothesis_error);
  }

  TEST_CASE("every connected graph n <= 6: verified within max{2,|B|}") {
    for (int n = 2; n <= 6; ++n) {
      for_each_connected_graph(n, true, [](const Graph& g) {
        const auto c = bridge_block_coloring(g);
        REQUIRE(c.color_count() <= bound_of(g));
        REQUIRE(is_conflict_free_connected(g, c).ok);
      });
    }
  }

  TEST_CASE("bridgeless graphs with at least two edges use exactly two colors, n <= 6") {
    for (int n = 3; n <= 6; ++n) {
      for_each_connected_graph(n, true, [](const Graph& g) {
        if (!find_bridges(g).empty()) return;
        REQUIRE(bridge_block_coloring(g).color_count() == 2);
      });
    }
  }
}

TEST_SUITE("ruler coloring") {
  TEST_CASE("small cases") {
    CHECK(ruler_path_coloring(2).colors() == std::vector<int>{1});
    CHECK(ruler_path_coloring(4).colors() == std::vector<int>{1, 2, 1});
    CHECK(ruler_path_coloring(5).colors() == std::vector<int>{1, 2, 1, 3});
    CHECK(ruler_path_coloring(9).color_count() == 4);
    CHECK_THROWS_AS(ruler_path_coloring(1), hypothesis_error);
  }

  TEST_CASE("verified and uses ceil(log2 n) colors, n <= 64") {
    for (int n = 2; n <= 64; ++n) {
      const auto c = ruler_path_coloring(n);
      REQUIRE(c.color_count() == ceil_log2(n));
      REQUIRE(is_conflict_free_connected(make_path(n), c, kDefaultPathCap, false).ok);
      REQUIRE(oracle::every_window_conflict_free(c.colors()));
    }
  }
}
