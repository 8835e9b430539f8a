#include "cfc/exact.hpp"

#include <algorithm>
#include <bit>

#include "cfc/errors.hpp"
#include "cfc/paths.hpp"

namespace cfc {

std::string to_string(BoundSource s) {
  switch (s) {
    case BoundSource::trivial: return "trivial";
    case BoundSource::pendant_edges: return "pendant-edges";
    case BoundSource::tree_path: return "tree-path";
  }
  return "unknown";
}

LowerBound cfc_lower_bound_detail(const Graph& g) {
  if (g.order() < 2) throw hypothesis_error("need at least two vertices");
  if (!is_connected(g)) throw hypothesis_error("graph is not connected");
  LowerBound best;
  for (Vertex x = 0; x < g.order(); ++x) {
    int pendant = 0;
    for (const auto& inc : g.incident(x))
      if (g.degree(inc.to) == 1) ++pendant;
    if (pendant > best.value) best = {pendant, BoundSource::pendant_edges};
  }
  if (g.size() == g.order() - 1) {
    const int tree = static_cast<int>(std::bit_width(static_cast<unsigned>(g.order() - 1)));
    if (tree > best.value) best = {tree, BoundSource::tree_path};
  }
  return best;
}

namespace {

using Mask = std::uint64_t;

// Backtracking over edge colorings with k colors. A path stays viable while
// some color occurs once on its colored edges, or not at all while part of
// the path is still uncolored; every completion that makes the path
// conflict-free keeps it viable, so dropping a pair without viable paths
// never loses a solution.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, std::vector<std::vector<Mask>> pair_paths)
      : m_(g.size()), pair_paths_(std::move(pair_paths)), pairs_by_edge_(static_cast<std::size_t>(m_)) {
    for (std::size_t p = 0; p < pair_paths_.size(); ++p) {
      Mask touched = 0;
      for (Mask path : pair_paths_[p]) touched |= path;
      for (Mask t = touched; t; t &= t - 1) pairs_by_edge_[static_cast<std::size_t>(std::countr_zero(t))].push_back(p);
    }
  }

  // true with `assignment` filled when a k-coloring exists.
  bool solve(int k, std::uint64_t& nodes, std::uint64_t budget) {
    k_ = k;
    nodes_ = &nodes;
    budget_ = budget;
    class_mask_.assign(static_cast<std::size_t>(k) + 1, 0);
    colored_ = 0;
    satisfied_.assign(pair_paths_.size(), false);
    assignment_.assign(static_cast<std::size_t>(m_), 0);
    return descend(0, 0);
  }

  const std::vector<int>& assignment() const { return assignment_; }

 private:
  enum class PairState { satisfied, viable, dead };

  PairState inspect(std::size_t pair) const {
    for (Mask path : pair_paths_[pair]) {
      const Mask open = path & ~colored_;
      for (int c = 1; c <= k_; ++c) {
        const int count = std::popcount(path & class_mask_[static_cast<std::size_t>(c)]);
        if (count == 1) return open ? PairState::viable : PairState::satisfied;
        if (count == 0 && open) return PairState::viable;
      }
    }
    return PairState::dead;
  }

  bool descend(int e, int max_used) {
    if (e == m_) return true;
    const Mask bit = Mask{1} << e;
    const int limit = std::min(max_used + 1, k_);
    std::vector<std::size_t> newly_satisfied;
    for (int c = 1; c <= limit; ++c) {
      if (++*nodes_ > budget_) throw budget_exhausted(budget_);
      assignment_[static_cast<std::size_t>(e)] = c;
      class_mask_[static_cast<std::size_t>(c)] |= bit;
      colored_ |= bit;

      bool alive = true;
      newly_satisfied.clear();
      for (std::size_t p : pairs_by_edge_[static_cast<std::size_t>(e)]) {
        if (satisfied_[p]) continue;
        const auto state = inspect(p);
        if (state == PairState::dead) {
          alive = false;
          break;
        }
        if (state == PairState::satisfied) {
          satisfied_[p] = true;
          newly_satisfied.push_back(p);
        }
      }
      if (alive && descend(e + 1, std::max(max_used, c))) return true;

      for (std::size_t p : newly_satisfied) satisfied_[p] = false;
      colored_ &= ~bit;
      class_mask_[static_cast<std::size_t>(c)] &= ~bit;
      assignment_[static_cast<std::size_t>(e)] = 0;
    }
    return false;
  }

  int m_;
  std::vector<std::vector<Mask>> pair_paths_;
  std::vector<std::vector<std::size_t>> pairs_by_edge_;

  int k_ = 0;
  std::uint64_t* nodes_ = nullptr;
  std::uint64_t budget_ = 0;
  std::vector<Mask> class_mask_;
  Mask colored_ = 0;
  std::vector<bool> satisfied_;
  std::vector<int> assignment_;
};

}  // namespace

CfcResult cfc_exact(const Graph& g, std::uint64_t budget) {
  const LowerBound lb = cfc_lower_bound_detail(g);
  if (g.size() > 64) throw hypothesis_error("exact search supports at most 64 edges");

  // Adjacent pairs are satisfied by their edge under every coloring.
  std::vector<std::vector<Mask>> pair_paths;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) continue;
      std::vector<Mask> masks;
      for_each_simple_path(g, u, v, kDefaultPathCap, [&](const Path& p) {
        Mask mask = 0;
        for (EdgeId e : p.edges) mask |= Mask{1} << e;
        masks.push_back(mask);
        return true;
      });
      // Shorter paths first: they are the cheapest to satisfy.
      std::stable_sort(masks.begin(), masks.end(),
                       [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
      pair_paths.push_back(std::move(masks));
    }
  }

  ColoringSearch search(g, std::move(pair_paths));
  CfcResult result;
  result.lower_bound = lb;
  for (int k = lb.value; k <= std::max(1, g.size()); ++k) {
    std::uint64_t level_nodes = 0;
    const std::uint64_t remaining = budget - std::min(budget, result.nodes);
    bool found = false;
    try {
      found = search.solve(k, level_nodes, remaining);
    } catch (const budget_exhausted&) {
      throw budget_exhausted(budget);
    }
    result.nodes += level_nodes;
    if (found) {
      result.value = k;
      result.certificate = EdgeColoring(search.assignment());
      return result;
    }
    result.exhausted.push_back({k, level_nodes});
  }
  // Coloring every edge differently always works, so the loop returns.
  throw std::logic_error("exact search found no coloring");
}

}  // namespace cfc
