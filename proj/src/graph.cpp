#include "cfc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "cfc/errors.hpp"

namespace cfc {

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw hypothesis_error("graph order must be at least 1, got " + std::to_string(n));
  adj_.resize(static_cast<std::size_t>(n));
}

EdgeId Graph::add_edge(Vertex a, Vertex b) {
  if (a < 0 || a >= n_ || b < 0 || b >= n_) {
    throw hypothesis_error("edge {" + std::to_string(a) + "," + std::to_string(b) +
                           "} has an endpoint outside [0," + std::to_string(n_) + ")");
  }
  if (a == b) throw hypothesis_error("self-loop at vertex " + std::to_string(a));
  if (adjacent(a, b)) {
    throw hypothesis_error("duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
  }
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({std::min(a, b), std::max(a, b)});
  auto insert_sorted = [](std::vector<Incidence>& list, Incidence inc) {
    auto pos = std::lower_bound(list.begin(), list.end(), inc.to,
                                [](const Incidence& x, Vertex t) { return x.to < t; });
    list.insert(pos, inc);
  };
  insert_sorted(adj_[static_cast<std::size_t>(a)], {b, id});
  insert_sorted(adj_[static_cast<std::size_t>(b)], {a, id});
  return id;
}

std::optional<EdgeId> Graph::edge_between(Vertex a, Vertex b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_) return std::nullopt;
  const auto& list = adj_[static_cast<std::size_t>(a)];
  auto pos = std::lower_bound(list.begin(), list.end(), b,
                              [](const Incidence& x, Vertex t) { return x.to < t; });
  if (pos != list.end() && pos->to == b) return pos->edge;
  return std::nullopt;
}

Graph make_from_edges(int n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  Graph g(n);
  for (auto [a, b] : pairs) g.add_edge(a, b);
  return g;
}

Graph make_path(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(i - 1, i);
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw hypothesis_error("a cycle needs at least 3 vertices");
  Graph g = make_path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph make_complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph make_star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph make_petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw hypothesis_error("permutation size does not match graph order");
  Graph h(g.order());
  for (const auto& e : g.edges())
    h.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  return h;
}

bool Path::contains_edge(EdgeId e) const {
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

Path Path::concat(const Path& first, const Path& second) {
  if (first.vertices.empty()) return second;
  if (second.vertices.empty()) return first;
  if (first.back() != second.front())
    throw hypothesis_error("paths cannot be concatenated: endpoints differ");
  Path out = first;
  out.vertices.insert(out.vertices.end(), second.vertices.begin() + 1, second.vertices.end());
  out.edges.insert(out.edges.end(), second.edges.begin(), second.edges.end());
  return out;
}

bool is_simple_path(const Graph& g, const Path& p) {
  if (p.vertices.empty() || p.vertices.size() != p.edges.size() + 1) return false;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : p.vertices) {
    if (v < 0 || v >= g.order() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    auto e = g.edge_between(p.vertices[i], p.vertices[i + 1]);
    if (!e || *e != p.edges[i]) return false;
  }
  return true;
}

std::vector<int> component_labels(const Graph& g, const std::vector<bool>& skip) {
  const int n = g.order();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int next = 0;
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    label[static_cast<std::size_t>(s)] = next;
    queue.push(s);
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop();
      for (const auto& inc : g.incident(x)) {
        if (!skip.empty() && skip[static_cast<std::size_t>(inc.edge)]) continue;
        if (label[static_cast<std::size_t>(inc.to)] < 0) {
          label[static_cast<std::size_t>(inc.to)] = next;
          queue.push(inc.to);
        }
      }
    }
    ++next;
  }
  return label;
}

int count_components(const Graph& g) {
  auto label = component_labels(g);
  return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

bool is_connected(const Graph& g) { return count_components(g) == 1; }

}  // namespace cfc
