#pragma once

// The Modular Sudoku Problem for a triplication table: find discriminators
// (U_i, V_i), i = 0..3q, such that
//
//   row:    in every regular row the three U_i (-) V_i differ; U_0 (-) V_0 != 0
//   weak:   over every weak set the U_i (+) V_i differ (and are nonzero for sum 0)
//   colour: over every monochrome set the values differ (and are nonzero for 0)
//
// with every (u, U) inside the scenario's encoding range. The range
// condition is built into the domains: each variable picks a selector
// k in {0, 1, 2} naming one of the three admissible discriminators, so Mod
// and Carry instances are the same kind of 3-valued problem.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "triplication/scenario.hpp"
#include "triplication/table.hpp"

namespace triplication {

/// Variable index of U_i (side 0) or V_i (side 1).
constexpr int variable_index(int pair, int side) { return 2 * pair + side; }

enum class ConstraintKind { Row, Weak, Color };

const char* to_string(ConstraintKind kind);

/// A value computed from one variable (second == -1) or from the two
/// variables of a pair. value[k] or value[3 * k_first + k_second].
struct Term {
  int first = -1;
  int second = -1;
  std::array<std::uint8_t, 9> value{};
};

/// The listed terms take pairwise distinct values (and nonzero ones when
/// `nonzero` is set).
struct AllDifferent {
  ConstraintKind kind = ConstraintKind::Row;
  /// Row index, pair sum or colour.
  int label = 0;
  bool nonzero = false;
  std::vector<int> terms;
};

struct MspInstance {
  Scenario scenario;
  TriplicationTable table;
  /// domains[v][k] is the discriminator chosen by selector k.
  std::vector<std::array<int, 3>> domains;
  std::vector<Term> terms;
  std::vector<AllDifferent> constraints;
  /// constraints_of[v]: constraints with a term reading v.
  std::vector<std::vector<int>> constraints_of;

  int variable_count() const { return static_cast<int>(domains.size()); }
};

/// Throws ScenarioMismatch when the scenario's order differs from the table's.
MspInstance compile(const TriplicationTable& table, const Scenario& scenario);

/// Discriminator table aligned index-by-index with its triplication table.
struct CongruousTable {
  ScenarioKind kind = ScenarioKind::Mod;
  int radix = 3;
  std::vector<Pair> values;

  bool operator==(const CongruousTable&) const = default;
};

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t backtracks = 0;
  double seconds = 0.0;
};

enum class SolveStatus {
  Solution,       // at least one solution was reported
  Unsatisfiable,  // the search space was exhausted without a solution
  Aborted,        // node budget ran out first
};

const char* to_string(SolveStatus status);

struct SolveOptions {
  /// Maximum search nodes; 0 means unlimited.
  std::uint64_t node_budget = 0;
  /// Shuffles the value order at every node when set.
  std::optional<std::uint64_t> shuffle_seed;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::Unsatisfiable;
  std::optional<CongruousTable> solution;
  SolveStats stats;
};

struct Enumeration {
  /// Solution, Unsatisfiable (no solutions, search complete) or Aborted
  /// (budget or max_solutions reached before the search completed).
  SolveStatus status = SolveStatus::Unsatisfiable;
  bool complete = false;
  std::vector<CongruousTable> solutions;
  SolveStats stats;
};

struct CountResult {
  bool complete = false;
  std::uint64_t count = 0;
  SolveStats stats;
};

SolveOutcome solve_first(const MspInstance& instance, const SolveOptions& options = {});

/// Every solution, in search order. Stops (incomplete) after max_solutions.
Enumeration solve_all(const MspInstance& instance, const SolveOptions& options = {},
                      std::size_t max_solutions = 1'000'000);

CountResult count_solutions(const MspInstance& instance, const SolveOptions& options = {});

/// Calls `visit` for every solution until it returns false. Returns the
/// search statistics and whether the search space was exhausted.
struct SearchSummary {
  bool complete = false;
  bool aborted = false;
  SolveStats stats;
};
SearchSummary search(const MspInstance& instance, const SolveOptions& options,
                     const std::function<bool(const CongruousTable&)>& visit);

struct CongruenceReport {
  bool ok = true;
  std::string violation;

  explicit operator bool() const { return ok; }
};

/// Re-checks every constraint directly from the table and the scenario,
/// without the compiled instance.
CongruenceReport check_congruous(const TriplicationTable& table, const CongruousTable& solution,
                                 const Scenario& scenario);

struct RandomTableOptions {
  std::uint64_t seed = 0;
  /// Total search nodes across restarts; 0 means unlimited.
  std::uint64_t node_budget = 1'000'000;
  /// Nodes per attempt before restarting with a fresh permutation.
  std::uint64_t restart_after = 2'000;
};

/// A table sampled by randomized search over the defining clauses, every row
/// sign +1. Returns nullopt when the budget runs out.
std::optional<TriplicationTable> random_tt(int m, const RandomTableOptions& options);

/// Renders a discriminator table in the same grid as its triplication table.
std::string render(const CongruousTable& solution);

}  // namespace triplication
