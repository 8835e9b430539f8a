#include "cfc/generate.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "cfc/errors.hpp"

namespace cfc {

namespace {

constexpr int kMaxCodeOrder = 11;  // C(11,2) = 55 bits

int pair_count(int n) { return n * (n - 1) / 2; }

using Rows = std::vector<std::uint32_t>;  // adjacency bit rows

Rows rows_of(const Graph& g) {
  Rows rows(static_cast<std::size_t>(g.order()), 0);
  for (const auto& e : g.edges()) {
    rows[static_cast<std::size_t>(e.u)] |= 1u << e.v;
    rows[static_cast<std::size_t>(e.v)] |= 1u << e.u;
  }
  return rows;
}

bool rows_connected(const Rows& rows) {
  const int n = static_cast<int>(rows.size());
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (n == 32 ? ~0u : (1u << n) - 1);
}

// Branch and bound over vertex orderings. Fixing the image of new label j
// determines the bits of column j, which form the next chunk of the code.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Rows& rows)
      : rows_(rows), n_(static_cast<int>(rows.size())), total_(pair_count(n_)), perm_(rows.size()) {}

  std::uint64_t run() {
    best_ = total_ == 0 ? 0 : (total_ == 64 ? ~0ull : (1ull << total_) - 1);
    found_ = false;
    search(0, 0, 0);
    return best_;
  }

 private:
  void search(int depth, std::uint32_t used, std::uint64_t prefix) {
    if (depth == n_) {
      if (!found_ || prefix < best_) best_ = prefix;
      found_ = true;
      return;
    }
    const int bits_after = pair_count(depth + 1);
    const int shift = total_ - bits_after;
    for (int w = 0; w < n_; ++w) {
      if (used & (1u << w)) continue;
      std::uint64_t column = 0;
      for (int i = 0; i < depth; ++i) {
        column = (column << 1) | ((rows_[static_cast<std::size_t>(perm_[static_cast<std::size_t>(i)])] >> w) & 1u);
      }
      const std::uint64_t next = (prefix << depth) | column;
      if (found_ && next > (best_ >> shift)) continue;
      perm_[static_cast<std::size_t>(depth)] = w;
      search(depth + 1, used | (1u << w), next);
    }
  }

  const Rows& rows_;
  int n_;
  int total_;
  std::vector<int> perm_;
  std::uint64_t best_ = 0;
  bool found_ = false;
};

std::uint64_t canonical_rows(const Rows& rows) { return Canonicalizer(rows).run(); }

Rows rows_from_code(int n, std::uint64_t code) {
  Rows rows(static_cast<std::size_t>(n), 0);
  const int total = pair_count(n);
  int t = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++t) {
      if ((code >> (total - 1 - t)) & 1ull) {
        rows[static_cast<std::size_t>(i)] |= 1u << j;
        rows[static_cast<std::size_t>(j)] |= 1u << i;
      }
    }
  }
  return rows;
}

void check_order(int n) {
  if (n < 1 || n > kMaxGenerateOrder) {
    throw hypothesis_error("graph generation supports 1 <= n <= " + std::to_string(kMaxGenerateOrder) +
                           ", got " + std::to_string(n));
  }
}

}  // namespace

std::vector<Edge> pair_order(int n) {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(pair_count(n)));
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) out.push_back({i, j});
  return out;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  const auto pairs = pair_order(n);
  for (std::size_t t = 0; t < pairs.size(); ++t)
    if ((mask >> t) & 1ull) g.add_edge(pairs[t].u, pairs[t].v);
  return g;
}

std::uint64_t mask_of(const Graph& g) {
  if (g.order() > kMaxCodeOrder) throw hypothesis_error("adjacency masks support n <= 11");
  std::uint64_t mask = 0;
  for (const auto& e : g.edges()) mask |= 1ull << (pair_count(e.v) + e.u);
  return mask;
}

std::uint64_t canonical_code(const Graph& g) {
  if (g.order() > kMaxCodeOrder) throw hypothesis_error("canonical codes support n <= 11");
  return canonical_rows(rows_of(g));
}

Graph graph_from_code(int n, std::uint64_t code) {
  Graph g(n);
  const auto pairs = pair_order(n);
  const auto total = pairs.size();
  for (std::size_t t = 0; t < total; ++t)
    if ((code >> (total - 1 - t)) & 1ull) g.add_edge(pairs[t].u, pairs[t].v);
  return g;
}

std::vector<std::uint64_t> all_graph_classes(int n) {
  check_order(n);
  static std::mutex memo_mutex;
  static std::map<int, std::vector<std::uint64_t>> memo;
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }

  std::vector<std::uint64_t> out;
  if (n == 1) {
    out = {0};
  } else {
    // Every graph on n vertices is a graph on n-1 vertices plus a vertex
    // joined to some subset; the new vertex's column is the code's tail.
    std::set<std::uint64_t> codes;
    const int width = n - 1;
    for (std::uint64_t smaller : all_graph_classes(n - 1)) {
      for (std::uint64_t subset = 0; subset < (1ull << width); ++subset) {
        codes.insert(canonical_rows(rows_from_code(n, (smaller << width) | subset)));
      }
    }
    out.assign(codes.begin(), codes.end());
  }
  std::lock_guard lock(memo_mutex);
  memo.emplace(n, out);
  return out;
}

void for_each_connected_graph(int n, bool dedup, const GraphVisitor& visit) {
  check_order(n);
  if (dedup) {
    for (std::uint64_t code : all_graph_classes(n))
      if (rows_connected(rows_from_code(n, code))) visit(graph_from_code(n, code));
    return;
  }
  const auto pairs = pair_order(n);
  const std::uint64_t limit = 1ull << pairs.size();
  Rows rows(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::fill(rows.begin(), rows.end(), 0u);
    for (std::uint64_t m = mask; m; m &= m - 1) {
      const auto& p = pairs[static_cast<std::size_t>(std::countr_zero(m))];
      rows[static_cast<std::size_t>(p.u)] |= 1u << p.v;
      rows[static_cast<std::size_t>(p.v)] |= 1u << p.u;
    }
    if (rows_connected(rows)) visit(graph_from_mask(n, mask));
  }
}

std::vector<Graph> generate_connected_graphs(int n, bool dedup) {
  std::vector<Graph> out;
  for_each_connected_graph(n, dedup, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

Graph random_connected_graph(int n, double extra_edge_p, std::mt19937_64& rng) {
  Graph g(n);
  const auto order = random_permutation(n, rng);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    g.add_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(pick(rng))]);
  }
  std::bernoulli_distribution coin(extra_edge_p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j) && coin(rng)) g.add_edge(i, j);
  return g;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

}  // namespace cfc
