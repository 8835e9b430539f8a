#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cfc {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u;  // u < v
  Vertex v;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

struct Incidence {
  Vertex to;
  EdgeId edge;
};

// Simple undirected graph on vertices 0..n-1. Edges keep insertion order and
// their position is the EdgeId.
class Graph {
 public:
  explicit Graph(int n);

  // Throws hypothesis_error on a self-loop, a duplicate pair or an endpoint
  // outside [0, n).
  EdgeId add_edge(Vertex a, Vertex b);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }

  // Incidences sorted by neighbour index.
  std::span<const Incidence> incident(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  std::optional<EdgeId> edge_between(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return edge_between(a, b).has_value(); }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
};

Graph make_from_edges(int n, std::span<const std::pair<Vertex, Vertex>> pairs);

// Small named families used throughout tests and the CLI.
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_star(int leaves);  // K_{1,leaves}, centre 0
Graph make_petersen();

// Same graph with vertex v renamed to perm[v]; edge order follows the
// original edge order.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

// A simple path v0..vl together with the l edges joining consecutive vertices.
struct Path {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  int length() const { return static_cast<int>(edges.size()); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool contains_edge(EdgeId e) const;
  bool operator==(const Path&) const = default;

  // P1 (.) P2: P1 must end where P2 starts.
  static Path concat(const Path& first, const Path& second);
};

// True iff p is a simple path in g (distinct vertices, consecutive vertices
// joined by the listed edge).
bool is_simple_path(const Graph& g, const Path& p);

bool is_connected(const Graph& g);
int count_components(const Graph& g);

// Component index per vertex, ignoring edges whose flag is set in skip.
std::vector<int> component_labels(const Graph& g, const std::vector<bool>& skip = {});

// --- text formats ---------------------------------------------------------

// Edge-list document: "n m" then m lines "u v". Blank lines and lines whose
// first non-blank character is '#' are ignored. Throws parse_error.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string format_graph(const Graph& g);

// Undirected DOT. With colors (one per edge) edges get a label and a palette
// color.
std::string to_dot(const Graph& g, std::span<const int> colors = {});

}  // namespace cfc
