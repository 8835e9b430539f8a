#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cfc/exact.hpp"
#include "cfc/graph.hpp"

namespace cfc {

// An edge count, or nullopt where the quantity is undefined / does not exist.
using MaybeEdges = std::optional<int>;

inline constexpr int kDefaultExhaustiveOrder = 7;

int binom2(int a);           // C(a, 2), 0 for a < 2
int ceil_log2(int n);        // n >= 1

// Edge threshold forcing cfc <= k: C(n-k-1, 2) + k + 2. Requires
// 2 <= k <= n-1 and throws hypothesis_error otherwise.
int f_formula(int n, int k);

// Edge threshold forcing cfc >= k, as stated in closed form:
//   C(n,2) - 1            for k = 2
//   n - 1                 for 3 <= k < ceil(log2 n)
//   does not exist        for ceil(log2 n) <= k <= n-1
// Throws hypothesis_error unless 2 <= k <= n-1.
MaybeEdges g_formula(int n, int k);

// Largest edge count of a connected order-n graph with exactly k cut-edges:
// C(n-k, 2) + k. Requires 0 <= k <= n-1.
int max_edges_with_k_bridges(int n, int k);

// Clique K_{n-k-1} on 0..n-k-2 with k+1 pendant leaves on vertex 0.
// Has C(n-k-1,2)+k+1 edges and cfc = k+1. Requires n >= k+2, k >= 0.
Graph build_star_clique(int n, int k);

// K_{n-k} with k pendant leaves on vertex 0; exactly k bridges. Throws
// hypothesis_error for k = n-2, which no connected graph realises.
Graph build_max_bridge_graph(int n, int k);

// One census graph with its exact invariants.
struct CensusEntry {
  Graph graph;
  int bridges = 0;
  std::optional<CfcResult> cfc;  // nullopt when the search budget ran out
};

struct Census {
  int n = 0;
  std::vector<CensusEntry> entries;
  bool partial = false;  // some cfc values unknown
};

// Connected graphs of order n (one per isomorphism class when dedup is set,
// every labelled graph otherwise) with cfc computed by cfc_exact. Work is
// split across `workers` threads (0 = hardware concurrency); results do not
// depend on the worker count.
Census build_census(int n, std::uint64_t budget = kDefaultSearchBudget, unsigned workers = 0,
                    bool dedup = true);

struct ExtremalRow {
  int k = 0;
  MaybeEdges s;   // max |E| with cfc >= k
  MaybeEdges t;   // min |E| with cfc <= k
  std::optional<int> s_witness;  // census index
  std::optional<int> t_witness;
  MaybeEdges f;   // s(n,k+1) + 1, rows 2 <= k <= n-1
  MaybeEdges g;   // t(n,k-1) - 1, nullopt if below n-1 ("does not exist")
  MaybeEdges f_scan;  // same quantities straight from their threshold definitions
  MaybeEdges g_scan;
  MaybeEdges max_edges_k_bridges;   // exhaustive, k = bridge count
  std::optional<int> bridge_witness;
};

// Rows k = 0..n (row 0 only carries the bridge maximum; s/t use k >= 1).
struct ExtremalTable {
  int n = 0;
  bool partial = false;
  std::vector<ExtremalRow> rows;

  const ExtremalRow& row(int k) const { return rows.at(static_cast<std::size_t>(k)); }
};

ExtremalTable compute_extremal_table(const Census& census);
inline ExtremalTable compute_s_t_table(int n, std::uint64_t budget = kDefaultSearchBudget) {
  return compute_extremal_table(build_census(n, budget));
}

// One closed-form vs exhaustive comparison.
struct FormulaCheck {
  std::string quantity;   // "f", "g", "bridges", "duality-f", "duality-g"
  int n = 0;
  int k = 0;
  std::string expected;
  std::string actual;
  enum class Outcome { pass, fail, vacuous } outcome = Outcome::pass;
  std::string note;
};

std::string to_string(FormulaCheck::Outcome o);
std::string to_string(const MaybeEdges& e);

// Compares the table against f_formula, g_formula, max_edges_with_k_bridges and
// the duality identities. Rows outside a formula's range are vacuous.
std::vector<FormulaCheck> check_formulas(const ExtremalTable& table);

}  // namespace cfc
