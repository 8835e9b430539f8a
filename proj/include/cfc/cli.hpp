#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfc/exact.hpp"

namespace cfc::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kBadInput = 2,    // parse error or disconnected graph
  kPathCap = 3,     // verifier path cap exceeded
  kBudget = 4,      // search budget exhausted / partial table
  kCheckFailed = 5  // a verification or formula comparison failed
};

enum class Command { analyze, exact, tables, construct, verify_formulas };
enum class Format { text, json, csv };

struct RunConfig {
  Command command = Command::analyze;
  std::optional<std::string> input_path;
  std::optional<int> n;
  std::optional<int> k;
  Format format = Format::text;
  std::uint64_t budget = kDefaultSearchBudget;
  bool dedup = true;
  std::optional<std::string> out_dir;
  std::uint64_t seed = 1;
  std::string construct_kind;  // gk | path-ruler | max-bridges
};

class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws usage_error when a command's required parameters are missing.
void validate(const RunConfig& cfg);

int cmd_analyze(const RunConfig& cfg, std::ostream& out);
int cmd_exact(const RunConfig& cfg, std::ostream& out);
int cmd_tables(const RunConfig& cfg, std::ostream& out);
int cmd_construct(const RunConfig& cfg, std::ostream& out);
int cmd_verify_formulas(const RunConfig& cfg, std::ostream& out);

// Validates, dispatches and maps library errors to exit codes; diagnostics go
// to err.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// One line of the verify-formulas matrix.
struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Exhaustive checks for order n: coloring bound, characterizations, f
// sharpness, t/g tables, the bridge-count maximum and duality. `samples`
// random connected graphs of order n (from seed) are also colored and
// verified.
std::vector<CheckLine> verify_order(int n, std::uint64_t budget, std::uint64_t seed, int samples = 50);

}  // namespace cfc::cli
