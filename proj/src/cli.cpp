#include "cfc/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "cfc/coloring.hpp"
#include "cfc/decomposition.hpp"
#include "cfc/errors.hpp"
#include "cfc/extremal.hpp"
#include "cfc/generate.hpp"

namespace cfc::cli {

using nlohmann::ordered_json;

namespace {

int require_n(const RunConfig& cfg) {
  if (!cfg.n) throw usage_error("--n is required");
  return *cfg.n;
}

int require_k(const RunConfig& cfg) {
  if (!cfg.k) throw usage_error("--k is required");
  return *cfg.k;
}

Graph load_input(const RunConfig& cfg) {
  if (!cfg.input_path) throw usage_error("--input is required");
  return read_graph_file(*cfg.input_path);
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write '" + path.string() + "'");
  f << contents;
}

std::string join(const std::vector<int>& xs, const char* sep = " ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? sep : "") << xs[i];
  return out.str();
}

ordered_json maybe_json(const MaybeEdges& e) { return e ? ordered_json(*e) : ordered_json(nullptr); }

std::string csv_cell(const MaybeEdges& e, const char* missing) { return e ? std::to_string(*e) : missing; }

bool is_complete(const Graph& g) { return g.size() == binom2(g.order()); }

bool is_star(const Graph& g) {
  if (g.size() != g.order() - 1) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == g.order() - 1) return true;
  return false;
}

std::string table_csv(const ExtremalTable& t) {
  std::ostringstream out;
  out << "n,k,s,t,f,g,witness_graph_id\n";
  for (int k = 1; k <= t.n - 1; ++k) {
    const auto& r = t.row(k);
    std::string witness;
    if (r.s_witness) witness += "s:" + std::to_string(*r.s_witness);
    if (r.t_witness) witness += std::string(witness.empty() ? "" : ";") + "t:" + std::to_string(*r.t_witness);
    const bool formula_row = k >= 2;
    out << t.n << ',' << k << ',' << csv_cell(r.s, "undefined") << ',' << csv_cell(r.t, "undefined") << ','
        << (formula_row ? csv_cell(r.f, "undefined") : "") << ','
        << (formula_row ? csv_cell(r.g, "dne") : "") << ',' << witness << '\n';
  }
  return out.str();
}

ordered_json checks_json(const std::vector<FormulaCheck>& checks) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) {
    arr.push_back({{"quantity", c.quantity}, {"n", c.n}, {"k", c.k}, {"expected", c.expected},
                   {"actual", c.actual}, {"outcome", to_string(c.outcome)}, {"note", c.note}});
  }
  return arr;
}

ordered_json table_json(const ExtremalTable& t, const std::vector<FormulaCheck>& checks) {
  ordered_json rows = ordered_json::array();
  for (int k = 1; k <= t.n - 1; ++k) {
    const auto& r = t.row(k);
    ordered_json row{{"k", k}, {"s", maybe_json(r.s)}, {"t", maybe_json(r.t)}};
    row["f"] = k >= 2 ? maybe_json(r.f) : ordered_json(nullptr);
    row["g"] = k >= 2 ? maybe_json(r.g) : ordered_json(nullptr);
    row["s_witness"] = r.s_witness ? ordered_json(*r.s_witness) : ordered_json(nullptr);
    row["t_witness"] = r.t_witness ? ordered_json(*r.t_witness) : ordered_json(nullptr);
    rows.push_back(std::move(row));
  }
  ordered_json bridges = ordered_json::array();
  for (int k = 0; k <= t.n - 1; ++k) {
    const auto& r = t.row(k);
    bridges.push_back({{"bridges", k}, {"max_edges", maybe_json(r.max_edges_k_bridges)},
                       {"witness", r.bridge_witness ? ordered_json(*r.bridge_witness) : ordered_json(nullptr)}});
  }
  return {{"schema_version", kSchemaVersion}, {"n", t.n},   {"partial", t.partial},
          {"rows", rows},                     {"bridge_maxima", bridges}, {"checks", checks_json(checks)}};
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.budget == 0) throw usage_error("--budget must be positive");
  switch (cfg.command) {
    case Command::analyze:
    case Command::exact:
      if (!cfg.input_path) throw usage_error("--input is required");
      break;
    case Command::tables:
    case Command::verify_formulas:
      require_n(cfg);
      break;
    case Command::construct:
      if (cfg.construct_kind != "gk" && cfg.construct_kind != "path-ruler" && cfg.construct_kind != "max-bridges")
        throw usage_error("construct expects one of: gk, path-ruler, max-bridges");
      require_n(cfg);
      if (cfg.construct_kind != "path-ruler") require_k(cfg);
      break;
  }
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_input(cfg);
  if (!is_connected(g)) throw hypothesis_error("input graph is not connected");
  const auto d = block_decomposition(g);
  const auto coloring = bridge_block_coloring(g);
  const auto report = is_conflict_free_connected(g, coloring);
  const int bridges = static_cast<int>(d.bridges.size());
  const int bound = std::max(2, bridges);

  if (cfg.format == Format::json) {
    ordered_json blocks = ordered_json::array();
    for (const auto& b : d.blocks) blocks.push_back(b);
    ordered_json doc{{"schema_version", kSchemaVersion},
                     {"n", g.order()},
                     {"m", g.size()},
                     {"bridges", d.bridges},
                     {"blocks", blocks},
                     {"components", d.component_count},
                     {"coloring", coloring.colors()},
                     {"colors_used", coloring.color_count()},
                     {"bound", bound},
                     {"verified", report.ok}};
    if (report.failure_pair) doc["failure_pair"] = {report.failure_pair->first, report.failure_pair->second};
    out << doc.dump(2) << '\n';
  } else {
    out << "n=" << g.order() << " m=" << g.size() << '\n';
    out << "bridges: " << join(d.bridges) << '\n';
    out << "blocks of G-B: " << d.blocks.size() << '\n';
    for (const auto& b : d.blocks) out << "  {" << join(b, ",") << "}\n";
    out << "components of G-B: " << d.component_count << '\n';
    out << "coloring (edge color):\n" << format_coloring(coloring);
    if (report.failure_pair) {
      out << "no conflict-free path between " << report.failure_pair->first << " and "
          << report.failure_pair->second << '\n';
    }
    out << "|B|=" << bridges << ", bound=" << bound << ", colors used=" << coloring.color_count()
        << ", verified=" << (report.ok ? "true" : "false") << '\n';
  }
  return report.ok ? kOk : kCheckFailed;
}

int cmd_exact(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_input(cfg);
  if (!is_connected(g)) throw hypothesis_error("input graph is not connected");
  CfcResult r;
  try {
    r = cfc_exact(g, cfg.budget);
  } catch (const budget_exhausted&) {
    if (cfg.format == Format::json) {
      out << ordered_json{{"schema_version", kSchemaVersion}, {"cfc", "unknown"}, {"budget", cfg.budget}}.dump(2)
          << '\n';
    } else {
      out << "cfc=unknown (budget of " << cfg.budget << " nodes exhausted)\n";
    }
    return kBudget;
  }
  // The certificate is re-checked by the path-enumerating verifier.
  const bool verified = is_conflict_free_connected(g, r.certificate, kDefaultPathCap, false).ok;
  if (cfg.out_dir) {
    write_file(std::filesystem::path(*cfg.out_dir) / "certificate.txt", format_coloring(r.certificate));
  }

  if (cfg.format == Format::json) {
    ordered_json levels = ordered_json::array();
    for (const auto& l : r.exhausted) levels.push_back({{"colors", l.colors}, {"nodes", l.nodes}});
    out << ordered_json{{"schema_version", kSchemaVersion},
                        {"n", g.order()},
                        {"m", g.size()},
                        {"cfc", r.value},
                        {"certificate", r.certificate.colors()},
                        {"verified", verified},
                        {"lower_bound", {{"value", r.lower_bound.value}, {"source", to_string(r.lower_bound.source)}}},
                        {"exhausted", levels},
                        {"nodes", r.nodes}}
               .dump(2)
        << '\n';
  } else {
    out << "cfc=" << r.value << '\n';
    out << "lower bound " << r.lower_bound.value << " (" << to_string(r.lower_bound.source) << ")\n";
    for (const auto& l : r.exhausted)
      out << "no coloring with " << l.colors << " colors (" << l.nodes << " nodes searched)\n";
    out << "certificate (edge color), verified=" << (verified ? "true" : "false") << ":\n"
        << format_coloring(r.certificate);
  }
  return verified ? kOk : kCheckFailed;
}

int cmd_tables(const RunConfig& cfg, std::ostream& out) {
  const int n = require_n(cfg);
  if (n < 2 || n > kMaxGenerateOrder) throw usage_error("--n must be in [2, 8] for tables");
  if (n == kMaxGenerateOrder) std::cerr << "note: n=8 enumerates ~11k graph classes and runs for a long time\n";

  const auto census = build_census(n, cfg.budget, 0, cfg.dedup);
  const auto table = compute_extremal_table(census);
  const auto checks = check_formulas(table);

  if (cfg.out_dir) {
    const std::filesystem::path dir(*cfg.out_dir);
    const std::string stem = "extremal_n" + std::to_string(n);
    write_file(dir / (stem + ".csv"), table_csv(table));
    write_file(dir / (stem + ".json"), table_json(table, checks).dump(2) + "\n");
    std::vector<int> witnesses;
    for (const auto& r : table.rows)
      for (const auto& w : {r.s_witness, r.t_witness, r.bridge_witness})
        if (w) witnesses.push_back(*w);
    std::sort(witnesses.begin(), witnesses.end());
    witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
    for (int id : witnesses) {
      write_file(dir / ("witness_n" + std::to_string(n) + "_g" + std::to_string(id) + ".txt"),
                 format_graph(census.entries[static_cast<std::size_t>(id)].graph));
    }
  }

  if (cfg.format == Format::json) {
    out << table_json(table, checks).dump(2) << '\n';
  } else if (cfg.format == Format::csv) {
    out << table_csv(table);
  } else {
    out << "n=" << n << " graphs=" << census.entries.size() << (table.partial ? " (PARTIAL)" : "") << '\n';
    out << "k  s(n,k)  t(n,k)  f(n,k)  g(n,k)\n";
    for (int k = 1; k <= n - 1; ++k) {
      const auto& r = table.row(k);
      out << k << "  " << to_string(r.s) << "  " << to_string(r.t) << "  "
          << (k >= 2 ? to_string(r.f) : "-") << "  " << (k >= 2 ? (r.g ? std::to_string(*r.g) : "dne") : "-")
          << '\n';
    }
    for (const auto& c : checks) {
      out << to_string(c.outcome) << ' ' << c.quantity << "(" << c.n << "," << c.k << ") expected=" << c.expected
          << " actual=" << c.actual << (c.note.empty() ? "" : " [" + c.note + "]") << '\n';
    }
  }
  return table.partial ? kBudget : kOk;
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  const int n = require_n(cfg);
  std::optional<Graph> g;
  std::optional<EdgeColoring> coloring;
  std::string summary;

  if (cfg.construct_kind == "gk") {
    const int k = require_k(cfg);
    g = build_star_clique(n, k);
    // Pendant lower bound and bridge upper bound coincide for this shape.
    const int predicted = cfc_lower_bound(*g);
    summary = "star-clique n=" + std::to_string(n) + " k=" + std::to_string(k) + ": m=" + std::to_string(g->size()) +
              ", predicted cfc=" + std::to_string(predicted);
  } else if (cfg.construct_kind == "path-ruler") {
    if (n < 2) throw usage_error("--n must be at least 2");
    g = make_path(n);
    coloring = ruler_path_coloring(n);
    summary = "path n=" + std::to_string(n) + ": colors=" + std::to_string(coloring->color_count()) +
              " (ceil(log2 n)=" + std::to_string(ceil_log2(n)) + ")";
  } else {
    const int k = require_k(cfg);
    g = build_max_bridge_graph(n, k);
    summary = "max-bridges n=" + std::to_string(n) + " k=" + std::to_string(k) + ": m=" + std::to_string(g->size()) +
              ", |B|=" + std::to_string(find_bridges(*g).size());
  }

  if (cfg.out_dir) {
    const std::filesystem::path dir(*cfg.out_dir);
    write_file(dir / (cfg.construct_kind + ".txt"), format_graph(*g));
    write_file(dir / (cfg.construct_kind + ".dot"),
               to_dot(*g, coloring ? std::span<const int>(coloring->colors()) : std::span<const int>{}));
    if (coloring) write_file(dir / (cfg.construct_kind + ".coloring.txt"), format_coloring(*coloring));
  }

  if (cfg.format == Format::json) {
    ordered_json doc{{"schema_version", kSchemaVersion}, {"kind", cfg.construct_kind}, {"n", n},
                     {"m", g->size()}, {"summary", summary}};
    ordered_json edges = ordered_json::array();
    for (const auto& e : g->edges()) edges.push_back({e.u, e.v});
    doc["edges"] = edges;
    if (coloring) doc["coloring"] = coloring->colors();
    out << doc.dump(2) << '\n';
  } else {
    out << summary << '\n';
    if (!cfg.out_dir) {
      out << format_graph(*g);
      if (coloring) out << "# coloring\n" << format_coloring(*coloring);
    }
  }
  return kOk;
}

std::vector<CheckLine> verify_order(int n, std::uint64_t budget, std::uint64_t seed, int samples) {
  std::vector<CheckLine> lines;
  auto add = [&](std::string name, bool pass, std::string detail = {}) {
    lines.push_back({std::move(name), pass, std::move(detail)});
  };

  const auto census = build_census(n, budget);
  if (census.partial) add("census complete", false, "search budget exhausted on some graph");

  int coloring_failures = 0, bound_failures = 0, char_failures = 0, two_edge_failures = 0;
  for (const auto& e : census.entries) {
    const int bound = std::max(2, e.bridges);
    const auto c = bridge_block_coloring(e.graph);
    if (c.color_count() > bound || !is_conflict_free_connected(e.graph, c, kDefaultPathCap, false).ok)
      ++coloring_failures;
    if (!e.cfc) continue;
    const int value = e.cfc->value;
    if (value > bound) ++bound_failures;
    if ((value == 1) != is_complete(e.graph)) ++char_failures;
    if (n >= 3 && (value == n - 1) != is_star(e.graph)) ++char_failures;
    if (e.bridges == 0 && !is_complete(e.graph) && value != 2) ++two_edge_failures;
  }
  const std::string of = " of " + std::to_string(census.entries.size());
  add("bridge-block coloring verifies within max{2,|B|}", coloring_failures == 0,
      std::to_string(coloring_failures) + " failures" + of);
  add("cfc <= max{2,|B|}", bound_failures == 0, std::to_string(bound_failures) + " failures" + of);
  add("cfc=1 iff complete, cfc=n-1 iff star", char_failures == 0, std::to_string(char_failures) + " failures");
  add("bridgeless non-complete => cfc=2", two_edge_failures == 0, std::to_string(two_edge_failures) + " failures");

  std::mt19937_64 rng(seed);
  int sample_failures = 0;
  for (int i = 0; i < samples; ++i) {
    const auto g = random_connected_graph(n, 0.3, rng);
    const auto c = bridge_block_coloring(g);
    const int bound = std::max(2, static_cast<int>(find_bridges(g).size()));
    if (c.color_count() > bound || !is_conflict_free_connected(g, c, kDefaultPathCap, false).ok) ++sample_failures;
  }
  add("sampled bridge-block colorings verify", sample_failures == 0,
      std::to_string(sample_failures) + " failures of " + std::to_string(samples));

  for (int k = 2; k <= n - 2; ++k) {
    const int f = f_formula(n, k);
    int violations = 0;
    for (const auto& e : census.entries)
      if (e.cfc && e.graph.size() >= f && e.cfc->value > k) ++violations;
    add("f(" + std::to_string(n) + "," + std::to_string(k) + ") threshold", violations == 0,
        "f=" + std::to_string(f) + ", " + std::to_string(violations) + " graphs with cfc>k");

    const Graph sharp = build_star_clique(n, k);
    const int value = cfc_exact(sharp, budget).value;
    add("f(" + std::to_string(n) + "," + std::to_string(k) + ") sharpness",
        sharp.size() == f - 1 && value == k + 1,
        "star-clique m=" + std::to_string(sharp.size()) + " cfc=" + std::to_string(value) + ", expected m=" +
            std::to_string(f - 1) + " cfc=" + std::to_string(k + 1));
  }

  const auto table = compute_extremal_table(census);
  const int lg = ceil_log2(n);
  for (int k = 1; k <= n - 1; ++k) {
    const int expected = k == 1 ? binom2(n) : (k < lg ? n : n - 1);
    const auto& t = table.row(k).t;
    add("t(" + std::to_string(n) + "," + std::to_string(k) + ")", t == expected,
        "expected " + std::to_string(expected) + ", got " + to_string(t));
  }
  for (const auto& c : check_formulas(table)) {
    if (c.outcome == FormulaCheck::Outcome::vacuous) continue;
    add(c.quantity + "(" + std::to_string(c.n) + "," + std::to_string(c.k) + ")",
        c.outcome == FormulaCheck::Outcome::pass,
        "expected " + c.expected + ", got " + c.actual + (c.note.empty() ? "" : " [" + c.note + "]"));
  }
  return lines;
}

int cmd_verify_formulas(const RunConfig& cfg, std::ostream& out) {
  const int n = require_n(cfg);
  if (n < 2 || n > kMaxGenerateOrder) throw usage_error("--n must be in [2, 8] for verify-formulas");
  const auto lines = verify_order(n, cfg.budget, cfg.seed);
  const bool all_pass = std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });

  if (cfg.format == Format::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& l : lines) arr.push_back({{"check", l.name}, {"pass", l.pass}, {"detail", l.detail}});
    out << ordered_json{{"schema_version", kSchemaVersion}, {"n", n}, {"all_pass", all_pass}, {"checks", arr}}
               .dump(2)
        << '\n';
  } else if (cfg.format == Format::csv) {
    out << "check,pass,detail\n";
    for (const auto& l : lines) out << '"' << l.name << "\"," << (l.pass ? "PASS" : "FAIL") << ",\"" << l.detail << "\"\n";
  } else {
    if (n < 4) out << "n=" << n << ": no k with 2 <= k <= n-2, f/g rows are vacuous\n";
    for (const auto& l : lines) out << (l.pass ? "PASS " : "FAIL ") << l.name << "  " << l.detail << '\n';
    out << (all_pass ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return all_pass ? kOk : kCheckFailed;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    switch (cfg.command) {
      case Command::analyze: return cmd_analyze(cfg, out);
      case Command::exact: return cmd_exact(cfg, out);
      case Command::tables: return cmd_tables(cfg, out);
      case Command::construct: return cmd_construct(cfg, out);
      case Command::verify_formulas: return cmd_verify_formulas(cfg, out);
    }
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const parse_error& e) {
    err << "invalid input: " << e.what() << '\n';
    return kBadInput;
  } catch (const hypothesis_error& e) {
    err << "invalid input: " << e.what() << '\n';
    return kBadInput;
  } catch (const path_cap_exceeded& e) {
    err << "verifier: " << e.what() << '\n';
    return kPathCap;
  } catch (const budget_exhausted& e) {
    err << "search: " << e.what() << '\n';
    return kBudget;
  }
  return kUsage;
}

}  // namespace cfc::cli
