#pragma once

#include <vector>

#include "cfc/graph.hpp"

namespace cfc {

// Cut-edges (the set B), the blocks of G - B and the components of G - B.
struct BlockDecomposition {
  std::vector<EdgeId> bridges;              // ascending
  std::vector<std::vector<EdgeId>> blocks;  // each ascending; ordered by first edge
  std::vector<int> component_of;            // vertex -> component of G - B
  int component_count = 0;

  bool is_bridge(EdgeId e) const;
};

// Edges whose removal disconnects their component, ascending. One DFS with
// low-link values.
std::vector<EdgeId> find_bridges(const Graph& g);

BlockDecomposition block_decomposition(const Graph& g);

// Biconnected components of g as edge sets (a bridge forms its own
// single-edge block). Each block ascending; blocks ordered by first edge.
std::vector<std::vector<EdgeId>> biconnected_blocks(const Graph& g);

std::vector<Vertex> block_vertices(const Graph& g, const std::vector<EdgeId>& block);

}  // namespace cfc
