#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cfc/coloring.hpp"
#include "cfc/graph.hpp"

namespace cfc {

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

// Which argument produced cfc_lower_bound.
enum class BoundSource { trivial, pendant_edges, tree_path };

std::string to_string(BoundSource s);

struct LowerBound {
  int value = 1;
  BoundSource source = BoundSource::trivial;
};

// max(1, p, t) where p is the largest number of pendant edges sharing a vertex
// and t = ceil(log2 n) when g is a tree (1 otherwise).
//
// Pendant edges at a common vertex x need pairwise distinct colors: for
// leaves a, b hanging off x the only a-b path is a-x-b, which is
// conflict-free only when its two colors differ.
LowerBound cfc_lower_bound_detail(const Graph& g);
inline int cfc_lower_bound(const Graph& g) { return cfc_lower_bound_detail(g).value; }

// One color count that was searched exhaustively without success.
struct ExhaustedLevel {
  int colors = 0;
  std::uint64_t nodes = 0;
};

struct CfcResult {
  int value = 0;
  EdgeColoring certificate;            // canonical, exactly `value` colors
  LowerBound lower_bound;              // where the search started
  std::vector<ExhaustedLevel> exhausted;  // every k in [lower_bound, value)
  std::uint64_t nodes = 0;             // total search nodes
};

// Smallest k admitting a conflict-free connected coloring. Tries k upward from
// cfc_lower_bound; each k is searched exhaustively by backtracking over edges
// in EdgeId order, a new color allowed only as 1 + the largest used so far.
// Throws budget_exhausted after `budget` nodes, hypothesis_error when g is
// disconnected, has n < 2 or more than 64 edges, and path_cap_exceeded when a
// vertex pair has too many simple paths.
CfcResult cfc_exact(const Graph& g, std::uint64_t budget = kDefaultSearchBudget);

}  // namespace cfc
