#pragma once

// Command implementations behind the `triplication` executable. Each command
// is callable directly so tests can drive it without a subprocess.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "triplication/io.hpp"

namespace triplication::cli {

enum ExitCode : int {
  kOk = 0,
  kUnsatisfiable = 2,
  kAborted = 3,
  kInvalidInput = 4,
  kInternalFailure = 5,
};

int exit_code_for(ErrorCode code);

/// Parses argv and dispatches. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Directory named by TRIPLICATION_OUT, or "triplication-out".
std::string default_output_dir();

struct TriplicateOptions {
  TemplateSpec spec;
  ScenarioKind scenario = ScenarioKind::Carry;
  /// Overrides spec.key; every admissible key when both are unset.
  std::optional<int> key;
  std::uint64_t budget = 0;
  std::optional<std::uint64_t> seed;
  /// Starter files are written here when nonempty.
  std::string out_dir;
};

struct KeyOutcome {
  int key = 0;
  SolveStatus status = SolveStatus::Unsatisfiable;
  std::optional<Pairing> starter;
  SolveStats stats;
  std::string file;
};

struct TriplicateReport {
  std::vector<KeyOutcome> keys;
  int exit_code = kOk;
};

TriplicateReport triplicate(const TriplicateOptions& options, std::ostream& out);

/// {"m", "keys": [...], "count", "admissible": {"1": bool, ...}}
json key_report(const TemplateSpec& spec);

struct VerifyReport {
  bool ok = false;
  /// "starter", "pairing" or "table".
  std::string kind;
  std::string detail;
};

/// Classifies a starter or pairing file (a starter must be strong) or
/// validates a table file.
VerifyReport verify(const json& document);

struct BatchConfig {
  std::vector<int> orders;
  int samples = 1;
  ScenarioKind scenario = ScenarioKind::Carry;
  std::uint64_t seed = 0;
  /// Solver node budget per table.
  std::uint64_t budget = 10'000'000;
  /// Sampler node budget per table.
  std::uint64_t sample_budget = 1'000'000;
  int threads = 1;
  std::string out_dir;
  /// Extra tables solved as given, recorded under order 0 = "fixed".
  std::vector<TriplicationTable> fixed;
};

struct OrderSummary {
  int m = 0;
  /// Tables attempted.
  int n = 0;
  int solved = 0;
  /// Certified unsatisfiable; budget aborts are not counted.
  int unsatisfiable = 0;
  int aborted = 0;
  /// Sampler ran out of budget before producing a table.
  int sample_failures = 0;
};

struct BatchSummary {
  std::vector<OrderSummary> orders;
  OrderSummary fixed;
  int resumed = 0;
};

/// Seed of sample `index` of order m; independent of thread scheduling.
std::uint64_t sample_seed(std::uint64_t seed, int m, int index);

/// Writes catalog.jsonl (one record per table, appended as jobs finish) and
/// summary.json into config.out_dir. Records already in the catalog are
/// reused, so an interrupted run resumes where it stopped.
BatchSummary run_batch(const BatchConfig& config, std::ostream& log);

json summary_to_json(const BatchSummary& summary, const BatchConfig& config);

}  // namespace triplication::cli
