#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "cfc/errors.hpp"
#include "cfc/graph.hpp"

namespace cfc {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Exactly two non-negative integers separated by whitespace.
bool parse_pair(std::string_view line, long long& a, long long& b) {
  std::array<long long*, 2> out{&a, &b};
  std::size_t pos = 0;
  for (auto* slot : out) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) return false;
    const char* begin = line.data() + pos;
    const char* end = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(begin, end, *slot);
    if (ec != std::errc() || ptr == begin) return false;
    pos = static_cast<std::size_t>(ptr - line.data());
    if (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') return false;
  }
  return trim(line.substr(pos)).empty();
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<Graph> g;
  long long declared_m = 0;
  int line_no = 0;
  int last_line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = trim(text.substr(start, nl - start));
    start = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    last_line = line_no;

    long long a = 0, b = 0;
    if (!parse_pair(line, a, b))
      throw parse_error(line_no, "expected two non-negative integers, got '" + std::string(line) + "'");
    if (!g) {
      if (a < 1) throw parse_error(line_no, "vertex count must be at least 1");
      if (b < 0 || b > a * (a - 1) / 2)
        throw parse_error(line_no, "edge count " + std::to_string(b) + " impossible for a simple graph");
      g.emplace(static_cast<int>(a));
      declared_m = b;
      continue;
    }
    const int n = g->order();
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw parse_error(line_no, "vertex index out of range [0," + std::to_string(n) + ")");
    if (a == b) throw parse_error(line_no, "self-loop at vertex " + std::to_string(a));
    if (g->adjacent(static_cast<int>(a), static_cast<int>(b)))
      throw parse_error(line_no, "duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    if (g->size() == declared_m)
      throw parse_error(line_no, "more edges than the declared " + std::to_string(declared_m));
    g->add_edge(static_cast<int>(a), static_cast<int>(b));
  }
  if (!g) throw parse_error(0, "empty graph document: missing 'n m' header");
  if (g->size() != declared_m) {
    throw parse_error(last_line, "declared " + std::to_string(declared_m) + " edges, found " +
                                     std::to_string(g->size()));
  }
  return *std::move(g);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(0, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string to_dot(const Graph& g, std::span<const int> colors) {
  static constexpr std::array<const char*, 12> palette{
      "red",    "blue",  "forestgreen", "orange", "purple",    "brown",
      "magenta", "cyan", "gold",        "gray40", "darkgreen", "navy"};
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (EdgeId e = 0; e < g.size(); ++e) {
    const auto& edge = g.edge(e);
    out << "  " << edge.u << " -- " << edge.v;
    if (!colors.empty()) {
      const int c = colors[static_cast<std::size_t>(e)];
      out << " [label=\"" << c << "\", color=\""
          << palette[static_cast<std::size_t>(c - 1) % palette.size()] << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cfc
