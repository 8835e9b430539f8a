#include "cfc/coloring.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "cfc/decomposition.hpp"
#include "cfc/errors.hpp"

namespace cfc {

EdgeColoring::EdgeColoring(std::vector<int> colors) : colors_(std::move(colors)) {
  for (int c : colors_)
    if (c < 1) throw hypothesis_error("colors must be positive, got " + std::to_string(c));
  auto sorted = colors_;
  std::sort(sorted.begin(), sorted.end());
  k_ = static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

int EdgeColoring::color(EdgeId e) const {
  if (e < 0 || e >= edge_count()) throw hypothesis_error("edge " + std::to_string(e) + " has no color");
  return colors_[static_cast<std::size_t>(e)];
}

EdgeColoring EdgeColoring::canonical() const {
  std::unordered_map<int, int> relabel;
  std::vector<int> out;
  out.reserve(colors_.size());
  for (int c : colors_) {
    auto [it, fresh] = relabel.try_emplace(c, static_cast<int>(relabel.size()) + 1);
    out.push_back(it->second);
  }
  return EdgeColoring(std::move(out));
}

bool is_conflict_free_path(const Path& p, const EdgeColoring& c) {
  std::unordered_map<int, int> count;
  for (EdgeId e : p.edges) ++count[c.color(e)];
  return std::any_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 1; });
}

ConnectivityReport is_conflict_free_connected(const Graph& g, const EdgeColoring& c,
                                              std::uint64_t cap, bool keep_witnesses) {
  if (c.edge_count() != g.size()) {
    throw hypothesis_error("coloring covers " + std::to_string(c.edge_count()) + " edges, graph has " +
                           std::to_string(g.size()));
  }
  const auto& colors = c.colors();
  const int max_color = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
  std::vector<int> count(static_cast<std::size_t>(max_color) + 1, 0);
  auto conflict_free = [&](const Path& p) {
    for (EdgeId e : p.edges) ++count[static_cast<std::size_t>(colors[static_cast<std::size_t>(e)])];
    bool unique = false;
    for (EdgeId e : p.edges) {
      auto& slot = count[static_cast<std::size_t>(colors[static_cast<std::size_t>(e)])];
      unique = unique || slot == 1;
      slot = 0;
    }
    return unique;
  };

  ConnectivityReport report;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      std::optional<Path> found;
      for_each_simple_path(g, u, v, cap, [&](const Path& p) {
        if (!conflict_free(p)) return true;
        if (keep_witnesses) found = p;
        else found.emplace();
        return false;
      });
      if (!found) {
        report.witness.clear();
        report.failure_pair = VertexPair{u, v};
        return report;
      }
      if (keep_witnesses) report.witness.emplace(VertexPair{u, v}, *std::move(found));
    }
  }
  report.ok = true;
  return report;
}

EdgeColoring bridge_block_coloring(const Graph& g) {
  if (g.order() < 2) throw hypothesis_error("need at least two vertices");
  if (!is_connected(g)) throw hypothesis_error("graph is not connected");

  const auto d = block_decomposition(g);
  std::vector<int> colors(static_cast<std::size_t>(g.size()), 0);
  for (const auto& block : d.blocks) {
    for (EdgeId e : block) colors[static_cast<std::size_t>(e)] = 2;
    colors[static_cast<std::size_t>(block.front())] = 1;
  }
  int next = 1;
  for (EdgeId e : d.bridges) colors[static_cast<std::size_t>(e)] = next++;
  return EdgeColoring(std::move(colors));
}

EdgeColoring ruler_path_coloring(int n) {
  if (n < 2) throw hypothesis_error("ruler coloring needs n >= 2");
  std::vector<int> colors;
  colors.reserve(static_cast<std::size_t>(n - 1));
  for (unsigned i = 1; i < static_cast<unsigned>(n); ++i) colors.push_back(1 + std::countr_zero(i));
  return EdgeColoring(std::move(colors));
}

std::string format_coloring(const EdgeColoring& c) {
  std::ostringstream out;
  for (EdgeId e = 0; e < c.edge_count(); ++e) out << e << ' ' << c.color(e) << '\n';
  return out.str();
}

EdgeColoring parse_coloring(std::string_view text, int edge_count) {
  std::vector<int> colors(static_cast<std::size_t>(edge_count), 0);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long e = -1, color = 0;
    std::string rest;
    if (!(fields >> e >> color) || (fields >> rest))
      throw parse_error(line_no, "expected 'edge_index color'");
    if (e < 0 || e >= edge_count) throw parse_error(line_no, "edge index out of range");
    if (color < 1) throw parse_error(line_no, "colors are 1-based");
    if (colors[static_cast<std::size_t>(e)] != 0) throw parse_error(line_no, "edge colored twice");
    colors[static_cast<std::size_t>(e)] = static_cast<int>(color);
  }
  for (int e = 0; e < edge_count; ++e)
    if (colors[static_cast<std::size_t>(e)] == 0) throw parse_error(0, "edge " + std::to_string(e) + " has no color");
  return EdgeColoring(std::move(colors));
}

}  // namespace cfc
