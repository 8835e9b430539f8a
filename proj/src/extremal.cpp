#include "cfc/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "cfc/decomposition.hpp"
#include "cfc/errors.hpp"
#include "cfc/generate.hpp"

namespace cfc {

int binom2(int a) { return a < 2 ? 0 : a * (a - 1) / 2; }

int ceil_log2(int n) {
  if (n < 1) throw hypothesis_error("ceil_log2 needs n >= 1");
  return static_cast<int>(std::bit_width(static_cast<unsigned>(n - 1)));
}

namespace {

void require_k_range(int n, int k) {
  if (k < 2 || k > n - 1) {
    throw hypothesis_error("need 2 <= k <= n-1, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

}  // namespace

int f_formula(int n, int k) {
  require_k_range(n, k);
  return binom2(n - k - 1) + k + 2;
}

MaybeEdges g_formula(int n, int k) {
  require_k_range(n, k);
  if (k == 2) return binom2(n) - 1;
  if (k < ceil_log2(n)) return n - 1;
  return std::nullopt;
}

int max_edges_with_k_bridges(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) {
    throw hypothesis_error("need 0 <= k <= n-1, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  return binom2(n - k) + k;
}

Graph build_star_clique(int n, int k) {
  if (k < 0 || n < k + 2) {
    throw hypothesis_error("star-clique construction needs n >= k+2, got n=" + std::to_string(n) +
                           " k=" + std::to_string(k));
  }
  const int clique = n - k - 1;
  Graph g(n);
  for (int i = 0; i < clique; ++i)
    for (int j = i + 1; j < clique; ++j) g.add_edge(i, j);
  for (int leaf = clique; leaf < n; ++leaf) g.add_edge(0, leaf);
  return g;
}

Graph build_max_bridge_graph(int n, int k) {
  max_edges_with_k_bridges(n, k);  // range check
  if (k == n - 2) {
    // G - B would need a component on exactly two vertices, whose edge is a bridge.
    throw hypothesis_error("no connected graph on " + std::to_string(n) + " vertices has exactly " +
                           std::to_string(k) + " bridges");
  }
  const int clique = n - k;
  Graph g(n);
  for (int i = 0; i < clique; ++i)
    for (int j = i + 1; j < clique; ++j) g.add_edge(i, j);
  for (int leaf = clique; leaf < n; ++leaf) g.add_edge(0, leaf);
  return g;
}

Census build_census(int n, std::uint64_t budget, unsigned workers, bool dedup) {
  if (n < 2) throw hypothesis_error("census needs n >= 2");
  Census census;
  census.n = n;
  for (auto& g : generate_connected_graphs(n, dedup)) census.entries.push_back({std::move(g), 0, std::nullopt});

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(census.entries.size()));

  std::atomic<std::size_t> next{0};
  std::atomic<bool> partial{false};
  auto work = [&] {
    for (std::size_t i = next++; i < census.entries.size(); i = next++) {
      auto& entry = census.entries[i];
      entry.bridges = static_cast<int>(find_bridges(entry.graph).size());
      try {
        entry.cfc = cfc_exact(entry.graph, budget);
      } catch (const budget_exhausted&) {
        partial = true;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  census.partial = partial;
  return census;
}

ExtremalTable compute_extremal_table(const Census& census) {
  const int n = census.n;
  ExtremalTable table;
  table.n = n;
  table.partial = census.partial;
  table.rows.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) table.rows[static_cast<std::size_t>(k)].k = k;

  for (std::size_t i = 0; i < census.entries.size(); ++i) {
    const auto& entry = census.entries[i];
    const int m = entry.graph.size();
    const int id = static_cast<int>(i);

    auto& br = table.rows[static_cast<std::size_t>(entry.bridges)];
    if (!br.max_edges_k_bridges || m > *br.max_edges_k_bridges) {
      br.max_edges_k_bridges = m;
      br.bridge_witness = id;
    }
    if (!entry.cfc) continue;
    const int value = entry.cfc->value;
    for (int k = 1; k <= n; ++k) {
      auto& row = table.rows[static_cast<std::size_t>(k)];
      if (value >= k && (!row.s || m > *row.s)) {
        row.s = m;
        row.s_witness = id;
      }
      if (value <= k && (!row.t || m < *row.t)) {
        row.t = m;
        row.t_witness = id;
      }
    }
  }

  const int max_m = binom2(n);
  auto holds_for_all = [&](auto&& pred) {
    return std::all_of(census.entries.begin(), census.entries.end(),
                       [&](const CensusEntry& e) { return !e.cfc || pred(e.graph.size(), e.cfc->value); });
  };
  for (int k = 2; k <= n - 1; ++k) {
    auto& row = table.rows[static_cast<std::size_t>(k)];
    if (const auto& s_next = table.rows[static_cast<std::size_t>(k) + 1].s) row.f = *s_next + 1;
    if (const auto& t_prev = table.rows[static_cast<std::size_t>(k) - 1].t; t_prev && *t_prev - 1 >= n - 1)
      row.g = *t_prev - 1;

    // Threshold definitions, scanned over every feasible edge count.
    for (int threshold = n - 1; threshold <= max_m + 1; ++threshold) {
      if (holds_for_all([&](int m, int cfc) { return m < threshold || cfc <= k; })) {
        row.f_scan = threshold;
        break;
      }
    }
    for (int threshold = max_m; threshold >= n - 1; --threshold) {
      if (holds_for_all([&](int m, int cfc) { return m > threshold || cfc >= k; })) {
        row.g_scan = threshold;
        break;
      }
    }
  }
  return table;
}

std::string to_string(FormulaCheck::Outcome o) {
  switch (o) {
    case FormulaCheck::Outcome::pass: return "PASS";
    case FormulaCheck::Outcome::fail: return "FAIL";
    case FormulaCheck::Outcome::vacuous: return "VACUOUS";
  }
  return "?";
}

std::string to_string(const MaybeEdges& e) { return e ? std::to_string(*e) : "none"; }

std::vector<FormulaCheck> check_formulas(const ExtremalTable& table) {
  using Outcome = FormulaCheck::Outcome;
  const int n = table.n;
  std::vector<FormulaCheck> out;
  auto compare = [&](std::string quantity, int k, MaybeEdges expected, MaybeEdges actual, std::string note = {}) {
    out.push_back({std::move(quantity), n, k, to_string(expected), to_string(actual),
                   expected == actual ? Outcome::pass : Outcome::fail, std::move(note)});
  };
  auto vacuous = [&](std::string quantity, int k, std::string expected, std::string note) {
    out.push_back({std::move(quantity), n, k, std::move(expected), "-", Outcome::vacuous, std::move(note)});
  };

  for (int k = 2; k <= n - 1; ++k) {
    const auto& row = table.row(k);
    if (k <= n - 2) {
      compare("f", k, f_formula(n, k), row.f);
    } else {
      vacuous("f", k, std::to_string(f_formula(n, k)), "k = n-1: no graph has cfc >= n, s(n,k+1) undefined");
    }
    const auto expected_g = g_formula(n, k);
    compare("g", k, expected_g, row.g, expected_g ? "" : "does not exist");
  }

  for (int k = 0; k <= n - 1; ++k) {
    const auto& row = table.row(k);
    std::string note;
    if (!row.max_edges_k_bridges) note = "no connected graph has exactly " + std::to_string(k) + " bridges";
    compare("bridges", k, max_edges_with_k_bridges(n, k), row.max_edges_k_bridges, note);
  }

  for (int k = 2; k <= n - 1; ++k) {
    const auto& row = table.row(k);
    if (row.f) compare("duality-f", k, row.f, row.f_scan, "s(n,k+1)+1 vs threshold scan");
    compare("duality-g", k, row.g, row.g_scan, "t(n,k-1)-1 vs threshold scan");
  }
  return out;
}

}  // namespace cfc
