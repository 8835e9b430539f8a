#include "cfc/paths.hpp"

#include <algorithm>

#include "cfc/decomposition.hpp"
#include "cfc/errors.hpp"

namespace cfc {

namespace {

struct PathWalker {
  const Graph& g;
  Vertex target;
  std::uint64_t cap;
  const PathVisitor& visit;
  const std::vector<bool>& allowed;
  std::vector<bool> on_path;
  Path current;
  std::uint64_t visited = 0;

  // false once the visitor asked to stop
  bool walk(Vertex x) {
    if (x == target) {
      if (visited == cap) throw path_cap_exceeded(cap);
      ++visited;
      return visit(current);
    }
    for (const auto& inc : g.incident(x)) {
      if (!allowed.empty() && !allowed[static_cast<std::size_t>(inc.edge)]) continue;
      if (on_path[static_cast<std::size_t>(inc.to)]) continue;
      on_path[static_cast<std::size_t>(inc.to)] = true;
      current.vertices.push_back(inc.to);
      current.edges.push_back(inc.edge);
      const bool go_on = walk(inc.to);
      current.vertices.pop_back();
      current.edges.pop_back();
      on_path[static_cast<std::size_t>(inc.to)] = false;
      if (!go_on) return false;
    }
    return true;
  }
};

}  // namespace

std::uint64_t for_each_simple_path(const Graph& g, Vertex u, Vertex v, std::uint64_t cap,
                                   const PathVisitor& visit, const std::vector<bool>& allowed) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
    throw hypothesis_error("path endpoint outside the graph");
  if (u == v) throw hypothesis_error("path endpoints must be distinct");
  PathWalker walker{g, v, cap, visit, allowed, std::vector<bool>(static_cast<std::size_t>(g.order())),
                    Path{{u}, {}}};
  walker.on_path[static_cast<std::size_t>(u)] = true;
  walker.walk(u);
  return walker.visited;
}

std::vector<Path> enumerate_simple_paths(const Graph& g, Vertex u, Vertex v, std::uint64_t cap) {
  std::vector<Path> out;
  for_each_simple_path(g, u, v, cap, [&](const Path& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

Path path_through_edge(const Graph& g, Vertex u, Vertex v, EdgeId e) {
  if (e < 0 || e >= g.size()) throw hypothesis_error("edge id out of range");
  if (u == v) throw hypothesis_error("path endpoints must be distinct");

  for (const auto& block : biconnected_blocks(g)) {
    if (!std::binary_search(block.begin(), block.end(), e)) continue;
    const auto verts = block_vertices(g, block);
    if (verts.size() < 3) {
      throw hypothesis_error("edge " + std::to_string(e) + " is a bridge; its block is not 2-connected");
    }
    if (!std::binary_search(verts.begin(), verts.end(), u) ||
        !std::binary_search(verts.begin(), verts.end(), v)) {
      throw hypothesis_error("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                             " are not both in the block containing edge " + std::to_string(e));
    }
    std::vector<bool> allowed(static_cast<std::size_t>(g.size()), false);
    for (EdgeId b : block) allowed[static_cast<std::size_t>(b)] = true;

    std::optional<Path> found;
    for_each_simple_path(
        g, u, v, kDefaultPathCap,
        [&](const Path& p) {
          if (!p.contains_edge(e)) return true;
          found = p;
          return false;
        },
        allowed);
    // Existence is guaranteed in a 2-connected block.
    if (!found) throw std::logic_error("no path through edge found in a 2-connected block");
    return *found;
  }
  throw std::logic_error("edge not found in any block");
}

}  // namespace cfc
