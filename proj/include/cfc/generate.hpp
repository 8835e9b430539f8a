#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "cfc/graph.hpp"

namespace cfc {

inline constexpr int kMaxGenerateOrder = 8;

// Upper-triangle pairs in column-major order: (0,1), (0,2), (1,2), (0,3), ...
// Position t of this order is bit t of an adjacency mask.
std::vector<Edge> pair_order(int n);

// Graph whose edges are the set bits of mask, in pair_order.
Graph graph_from_mask(int n, std::uint64_t mask);
std::uint64_t mask_of(const Graph& g);

// Canonical code: the lexicographically smallest pair_order bit string over
// all vertex permutations, packed with position 0 as the most significant
// bit. Two graphs are isomorphic iff their codes match. n <= 11.
std::uint64_t canonical_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);
inline Graph canonical_form(const Graph& g) { return graph_from_code(g.order(), canonical_code(g)); }

using GraphVisitor = std::function<void(const Graph&)>;

// Every connected graph on n labelled vertices (dedup = false, mask order) or
// one canonical representative per isomorphism class (dedup = true, ascending
// code). Throws hypothesis_error unless 1 <= n <= kMaxGenerateOrder.
void for_each_connected_graph(int n, bool dedup, const GraphVisitor& visit);
std::vector<Graph> generate_connected_graphs(int n, bool dedup);

// Canonical codes of all graphs (connected or not) on n vertices.
std::vector<std::uint64_t> all_graph_classes(int n);

// Random connected graph: a random spanning tree plus each remaining pair with
// probability extra_edge_p.
Graph random_connected_graph(int n, double extra_edge_p, std::mt19937_64& rng);

// G(n, p), possibly disconnected.
Graph random_graph(int n, double p, std::mt19937_64& rng);

std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng);

}  // namespace cfc
