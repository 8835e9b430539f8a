#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cfc/graph.hpp"

namespace cfc {

inline constexpr std::uint64_t kDefaultPathCap = 1'000'000;

// Called once per simple u-v path, in DFS order with neighbours visited by
// increasing index. Return false to stop the enumeration.
using PathVisitor = std::function<bool(const Path&)>;

// Visits every simple u-v path, restricted to edges with allowed[e] set when
// allowed is non-empty. Throws path_cap_exceeded when asked to visit more than
// cap paths. Returns the number of paths visited.
std::uint64_t for_each_simple_path(const Graph& g, Vertex u, Vertex v, std::uint64_t cap,
                                   const PathVisitor& visit,
                                   const std::vector<bool>& allowed = {});

std::vector<Path> enumerate_simple_paths(const Graph& g, Vertex u, Vertex v,
                                         std::uint64_t cap = kDefaultPathCap);

// A u-v path through e, for u, v and e inside one 2-connected block of g.
// Throws hypothesis_error when no such block exists.
Path path_through_edge(const Graph& g, Vertex u, Vertex v, EdgeId e);

}  // namespace cfc
