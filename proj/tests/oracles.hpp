#pragma once

// Slow reference implementations used only by tests. None of these call the
// library routine they are compared against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "cfc/graph.hpp"

namespace cfc::oracle {

// Components by repeated relaxation over the edge list; edges in skip ignored.
inline int component_count_without(const Graph& g, int skip) {
  std::vector<int> label(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) label[static_cast<std::size_t>(v)] = v;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int e = 0; e < g.size(); ++e) {
      if (e == skip) continue;
      auto& a = label[static_cast<std::size_t>(g.edge(e).u)];
      auto& b = label[static_cast<std::size_t>(g.edge(e).v)];
      if (a != b) {
        a = b = std::min(a, b);
        changed = true;
      }
    }
  }
  std::sort(label.begin(), label.end());
  return static_cast<int>(std::unique(label.begin(), label.end()) - label.begin());
}

// Delete each edge and recount components.
inline std::vector<EdgeId> naive_bridges(const Graph& g) {
  const int base = component_count_without(g, -1);
  std::vector<EdgeId> out;
  for (int e = 0; e < g.size(); ++e)
    if (component_count_without(g, e) > base) out.push_back(e);
  return out;
}

// Connected labelled graphs on n vertices, from all graphs minus those whose
// vertex 1 component has size j < n.
inline std::uint64_t connected_labelled_count(int n) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
  auto all = [](int k) { return std::uint64_t{1} << (k * (k - 1) / 2); };
  auto choose = [](int a, int b) {
    std::uint64_t r = 1;
    for (int i = 1; i <= b; ++i) r = r * static_cast<std::uint64_t>(a - b + i) / static_cast<std::uint64_t>(i);
    return r;
  };
  for (int k = 1; k <= n; ++k) {
    std::uint64_t disconnected = 0;
    for (int j = 1; j < k; ++j) disconnected += choose(k - 1, j - 1) * c[static_cast<std::size_t>(j)] * all(k - j);
    c[static_cast<std::size_t>(k)] = all(k) - disconnected;
  }
  return c[static_cast<std::size_t>(n)];
}

// Every simple u-v path as an edge list, by recursion over an adjacency
// matrix (no use of the library's path walker).
inline std::vector<std::vector<int>> all_paths(const Graph& g, int u, int v) {
  const int n = g.order();
  std::vector<std::vector<int>> edge_at(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int e = 0; e < g.size(); ++e) {
    edge_at[static_cast<std::size_t>(g.edge(e).u)][static_cast<std::size_t>(g.edge(e).v)] = e;
    edge_at[static_cast<std::size_t>(g.edge(e).v)][static_cast<std::size_t>(g.edge(e).u)] = e;
  }
  std::vector<std::vector<int>> out;
  std::vector<int> edges;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<void(int)> go = [&](int x) {
    if (x == v) {
      out.push_back(edges);
      return;
    }
    used[static_cast<std::size_t>(x)] = true;
    for (int y = 0; y < n; ++y) {
      const int e = edge_at[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      if (e < 0 || used[static_cast<std::size_t>(y)]) continue;
      edges.push_back(e);
      go(y);
      edges.pop_back();
    }
    used[static_cast<std::size_t>(x)] = false;
  };
  go(u);
  return out;
}

inline bool unique_color_on(const std::vector<int>& path_edges, const std::vector<int>& colors) {
  std::map<int, int> count;
  for (int e : path_edges) ++count[colors[static_cast<std::size_t>(e)]];
  for (auto [c, k] : count)
    if (k == 1) return true;
  return false;
}

inline bool conflict_free_connected(const Graph& g, const std::vector<int>& colors) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      bool any = false;
      for (const auto& p : all_paths(g, u, v)) {
        if (unique_color_on(p, colors)) {
          any = true;
          break;
        }
      }
      if (!any) return false;
    }
  }
  return true;
}

// Smallest k for which some k-coloring (all k^m assignments, no symmetry
// breaking, no pruning) is conflict-free connected. Tiny graphs only.
inline int brute_force_cfc(const Graph& g) {
  const int m = g.size();
  for (int k = 1; k <= m; ++k) {
    std::vector<int> colors(static_cast<std::size_t>(m), 1);
    while (true) {
      if (conflict_free_connected(g, colors)) return k;
      int i = 0;
      while (i < m && colors[static_cast<std::size_t>(i)] == k) colors[static_cast<std::size_t>(i++)] = 1;
      if (i == m) break;
      ++colors[static_cast<std::size_t>(i)];
    }
  }
  return m;
}

// Every contiguous window of a path coloring has a color used once.
inline bool every_window_conflict_free(const std::vector<int>& colors) {
  const std::size_t len = colors.size();
  const int max_color = len ? *std::max_element(colors.begin(), colors.end()) : 0;
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<int> count(static_cast<std::size_t>(max_color) + 1, 0);
    int singles = 0;
    for (std::size_t j = i; j < len; ++j) {
      const int c = ++count[static_cast<std::size_t>(colors[j])];
      if (c == 1) ++singles;
      if (c == 2) --singles;
      if (singles == 0) return false;
    }
  }
  return true;
}

}  // namespace cfc::oracle
