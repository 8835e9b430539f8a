#include "cfc/decomposition.hpp"

#include <algorithm>

namespace cfc {

namespace {

// Shared DFS state for the low-link traversals below. Recursion depth is
// bounded by n, which is small for every graph this library targets.
struct LowLink {
  const Graph& g;
  std::vector<int> disc;
  std::vector<int> low;
  int clock = 0;

  explicit LowLink(const Graph& graph)
      : g(graph),
        disc(static_cast<std::size_t>(graph.order()), -1),
        low(static_cast<std::size_t>(graph.order()), -1) {}
};

void bridge_dfs(LowLink& st, Vertex x, EdgeId via, std::vector<EdgeId>& out) {
  auto ux = static_cast<std::size_t>(x);
  st.disc[ux] = st.low[ux] = st.clock++;
  for (const auto& inc : st.g.incident(x)) {
    if (inc.edge == via) continue;
    auto uy = static_cast<std::size_t>(inc.to);
    if (st.disc[uy] < 0) {
      bridge_dfs(st, inc.to, inc.edge, out);
      st.low[ux] = std::min(st.low[ux], st.low[uy]);
      if (st.low[uy] > st.disc[ux]) out.push_back(inc.edge);
    } else {
      st.low[ux] = std::min(st.low[ux], st.disc[uy]);
    }
  }
}

void block_dfs(LowLink& st, Vertex x, EdgeId via, std::vector<EdgeId>& stack,
               std::vector<std::vector<EdgeId>>& out) {
  auto ux = static_cast<std::size_t>(x);
  st.disc[ux] = st.low[ux] = st.clock++;
  for (const auto& inc : st.g.incident(x)) {
    if (inc.edge == via) continue;
    auto uy = static_cast<std::size_t>(inc.to);
    if (st.disc[uy] < 0) {
      stack.push_back(inc.edge);
      block_dfs(st, inc.to, inc.edge, stack, out);
      st.low[ux] = std::min(st.low[ux], st.low[uy]);
      if (st.low[uy] >= st.disc[ux]) {
        // x separates the subtree of y: pop its block.
        std::vector<EdgeId> block;
        while (true) {
          EdgeId e = stack.back();
          stack.pop_back();
          block.push_back(e);
          if (e == inc.edge) break;
        }
        std::sort(block.begin(), block.end());
        out.push_back(std::move(block));
      }
    } else if (st.disc[uy] < st.disc[ux]) {
      // back edge to an ancestor, recorded once
      stack.push_back(inc.edge);
      st.low[ux] = std::min(st.low[ux], st.disc[uy]);
    }
  }
}

}  // namespace

bool BlockDecomposition::is_bridge(EdgeId e) const {
  return std::binary_search(bridges.begin(), bridges.end(), e);
}

std::vector<EdgeId> find_bridges(const Graph& g) {
  LowLink st(g);
  std::vector<EdgeId> out;
  for (Vertex s = 0; s < g.order(); ++s)
    if (st.disc[static_cast<std::size_t>(s)] < 0) bridge_dfs(st, s, -1, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<EdgeId>> biconnected_blocks(const Graph& g) {
  LowLink st(g);
  std::vector<EdgeId> stack;
  std::vector<std::vector<EdgeId>> out;
  for (Vertex s = 0; s < g.order(); ++s)
    if (st.disc[static_cast<std::size_t>(s)] < 0) block_dfs(st, s, -1, stack, out);
  std::sort(out.begin(), out.end());
  return out;
}

BlockDecomposition block_decomposition(const Graph& g) {
  BlockDecomposition d;
  d.bridges = find_bridges(g);
  std::vector<bool> is_bridge(static_cast<std::size_t>(g.size()), false);
  for (EdgeId e : d.bridges) is_bridge[static_cast<std::size_t>(e)] = true;

  d.component_of = component_labels(g, is_bridge);
  d.component_count =
      d.component_of.empty() ? 0 : *std::max_element(d.component_of.begin(), d.component_of.end()) + 1;

  // In G - B every biconnected block has at least two edges, so the blocks of
  // G - B are exactly the multi-edge blocks of G.
  for (auto& block : biconnected_blocks(g)) {
    if (block.size() == 1 && is_bridge[static_cast<std::size_t>(block.front())]) continue;
    d.blocks.push_back(std::move(block));
  }
  return d;
}

std::vector<Vertex> block_vertices(const Graph& g, const std::vector<EdgeId>& block) {
  std::vector<Vertex> out;
  for (EdgeId e : block) {
    out.push_back(g.edge(e).u);
    out.push_back(g.edge(e).v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace cfc
