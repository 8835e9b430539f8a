#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cfc/graph.hpp"
#include "cfc/paths.hpp"

namespace cfc {

// One positive color per edge, indexed by EdgeId.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  // Throws hypothesis_error on a non-positive color.
  explicit EdgeColoring(std::vector<int> colors);

  int color(EdgeId e) const;
  int edge_count() const { return static_cast<int>(colors_.size()); }
  int color_count() const { return k_; }  // distinct colors used
  const std::vector<int>& colors() const { return colors_; }

  // Relabelled so colors appear as 1, 2, ..., k in order of first use.
  EdgeColoring canonical() const;

  bool operator==(const EdgeColoring&) const = default;

 private:
  std::vector<int> colors_;
  int k_ = 0;
};

using VertexPair = std::pair<Vertex, Vertex>;  // first < second

struct ConnectivityReport {
  bool ok = false;
  std::map<VertexPair, Path> witness;        // filled iff ok
  std::optional<VertexPair> failure_pair;    // first failing pair iff !ok
};

// Some color occurs on exactly one edge of p. Throws hypothesis_error if an
// edge of p has no color.
bool is_conflict_free_path(const Path& p, const EdgeColoring& c);

// Checks every pair of distinct vertices by enumerating simple paths until a
// conflict-free one turns up. Throws path_cap_exceeded if one pair needs more
// than cap paths, hypothesis_error if c does not cover E(g). With
// keep_witnesses off the report carries ok/failure_pair only.
ConnectivityReport is_conflict_free_connected(const Graph& g, const EdgeColoring& c,
                                              std::uint64_t cap = kDefaultPathCap,
                                              bool keep_witnesses = true);

// Constructive coloring for a connected graph with bridge set B using at most
// max{2, |B|} colors:
//   - inside every block of G - B the lowest-indexed edge gets 1, the rest 2;
//   - bridges, in EdgeId order, get 1, 2, ..., |B|.
// Throws hypothesis_error on a disconnected graph or n < 2.
EdgeColoring bridge_block_coloring(const Graph& g);

// Edge i of P_n (1-based) gets 1 + the 2-adic valuation of i. Uses
// ceil(log2 n) colors and every subpath is conflict-free. Throws for n < 2.
EdgeColoring ruler_path_coloring(int n);

// "edge_index color" lines, one per edge in EdgeId order.
std::string format_coloring(const EdgeColoring& c);
EdgeColoring parse_coloring(std::string_view text, int edge_count);

}  // namespace cfc
