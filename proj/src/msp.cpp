#include "triplication/msp.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <random>
#include <sstream>

namespace triplication {

const char* to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::Row: return "row";
    case ConstraintKind::Weak: return "weak";
    case ConstraintKind::Color: return "color";
  }
  return "?";
}

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Solution: return "solution";
    case SolveStatus::Unsatisfiable: return "unsatisfiable";
    case SolveStatus::Aborted: return "aborted";
  }
  return "?";
}

MspInstance compile(const TriplicationTable& table, const Scenario& scenario) {
  if (scenario.order() != table.order()) {
    throw Error(ErrorCode::ScenarioMismatch, "scenario order " + std::to_string(scenario.order()) +
                                                 " differs from table order " + std::to_string(table.order()));
  }
  MspInstance inst{scenario, table, {}, {}, {}, {}};
  const int n = static_cast<int>(table.size());
  const auto& pairs = table.pairs();
  const auto& carries = table.carries();

  inst.domains.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    inst.domains[variable_index(i, 0)] = scenario.domain(pairs[i].x);
    inst.domains[variable_index(i, 1)] = scenario.domain(pairs[i].y);
  }

  auto binary_term = [&](int i, bool difference) {
    Term t;
    t.first = variable_index(i, 0);
    t.second = variable_index(i, 1);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        Encoded left{pairs[i].x, inst.domains[t.first][a]};
        Encoded right{pairs[i].y, inst.domains[t.second][b]};
        int value = difference ? scenario.box_sub(left, right, carries.difference[i])
                               : scenario.box_add(left, right, carries.summation[i]);
        t.value[3 * a + b] = static_cast<std::uint8_t>(value);
      }
    }
    inst.terms.push_back(t);
    return static_cast<int>(inst.terms.size()) - 1;
  };
  auto unary_term = [&](int var) {
    Term t;
    t.first = var;
    for (int k = 0; k < 3; ++k) t.value[k] = static_cast<std::uint8_t>(inst.domains[var][k]);
    inst.terms.push_back(t);
    return static_cast<int>(inst.terms.size()) - 1;
  };

  inst.constraints.push_back({ConstraintKind::Row, 0, true, {binary_term(0, true)}});
  for (int d = 1; d <= table.half(); ++d) {
    AllDifferent row{ConstraintKind::Row, d, false, {}};
    for (int i = 3 * d - 2; i <= 3 * d; ++i) row.terms.push_back(binary_term(i, true));
    inst.constraints.push_back(std::move(row));
  }
  for (const WeakSet& w : table.weak().sets) {
    AllDifferent weak{ConstraintKind::Weak, w.sum, w.sum == 0, {}};
    for (int i : w.indices) weak.terms.push_back(binary_term(i, false));
    inst.constraints.push_back(std::move(weak));
  }
  const auto& colors = table.monochrome().by_color;
  for (int c = 0; c < static_cast<int>(colors.size()); ++c) {
    AllDifferent color{ConstraintKind::Color, c, c == 0, {}};
    for (const DoubleIndex& at : colors[c]) color.terms.push_back(unary_term(variable_index(at.pair, at.side)));
    inst.constraints.push_back(std::move(color));
  }

  inst.constraints_of.assign(2 * n, {});
  for (int ci = 0; ci < static_cast<int>(inst.constraints.size()); ++ci) {
    for (int ti : inst.constraints[ci].terms) {
      for (int var : {inst.terms[ti].first, inst.terms[ti].second}) {
        if (var < 0) continue;
        auto& list = inst.constraints_of[var];
        if (list.empty() || list.back() != ci) list.push_back(ci);
      }
    }
  }
  return inst;
}

namespace {

class Search {
 public:
  Search(const MspInstance& inst, const SolveOptions& options,
         const std::function<bool(const CongruousTable&)>& visit)
      : inst_(inst), options_(options), visit_(visit),
        mask_(inst.variable_count(), 0b111), assigned_(inst.variable_count(), -1) {
    if (options.shuffle_seed) rng_.seed(*options.shuffle_seed);
  }

  SearchSummary run() {
    auto start = std::chrono::steady_clock::now();
    bool consistent = true;
    for (int ci = 0; ci < static_cast<int>(inst_.constraints.size()) && consistent; ++ci) {
      consistent = revise(ci);
    }
    if (consistent) descend();
    summary_.complete = !stopped_ && !summary_.aborted;
    summary_.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summary_;
  }

 private:
  int evaluate(const Term& t) const {
    if (t.second < 0) return t.value[assigned_[t.first]];
    return t.value[3 * assigned_[t.first] + assigned_[t.second]];
  }

  // Checks the constraint against the assigned variables and removes
  // selectors of single-open terms that would violate it.
  bool revise(int ci) {
    const AllDifferent& c = inst_.constraints[ci];
    int fixed[3];
    int fixed_count = 0;
    for (int ti : c.terms) {
      const Term& t = inst_.terms[ti];
      if (assigned_[t.first] < 0 || (t.second >= 0 && assigned_[t.second] < 0)) continue;
      int v = evaluate(t);
      if (c.nonzero && v == 0) return false;
      for (int j = 0; j < fixed_count; ++j) {
        if (fixed[j] == v) return false;
      }
      fixed[fixed_count++] = v;
    }
    for (int ti : c.terms) {
      const Term& t = inst_.terms[ti];
      int open = -1;
      int stride = 1;
      int base = 0;
      if (t.second < 0) {
        if (assigned_[t.first] >= 0) continue;
        open = t.first;
      } else if (assigned_[t.first] < 0 && assigned_[t.second] >= 0) {
        open = t.first;
        stride = 3;
        base = assigned_[t.second];
      } else if (assigned_[t.first] >= 0 && assigned_[t.second] < 0) {
        open = t.second;
        base = 3 * assigned_[t.first];
      } else {
        continue;
      }
      std::uint8_t before = mask_[open];
      std::uint8_t after = before;
      for (int k = 0; k < 3; ++k) {
        if (!(after & (1u << k))) continue;
        int v = t.value[base + stride * k];
        bool clash = c.nonzero && v == 0;
        for (int j = 0; j < fixed_count && !clash; ++j) clash = fixed[j] == v;
        if (clash) after &= static_cast<std::uint8_t>(~(1u << k));
      }
      if (after != before) {
        trail_.push_back({open, before});
        mask_[open] = after;
        if (after == 0) return false;
      }
    }
    return true;
  }

  int choose_variable() const {
    int best = -1;
    int best_size = 4;
    for (int v = 0; v < static_cast<int>(mask_.size()); ++v) {
      if (assigned_[v] >= 0) continue;
      int size = std::popcount(mask_[v]);
      if (size < best_size) {
        best = v;
        best_size = size;
      }
    }
    return best;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      mask_[trail_.back().first] = trail_.back().second;
      trail_.pop_back();
    }
  }

  void report() {
    CongruousTable table;
    table.kind = inst_.scenario.kind();
    table.radix = inst_.scenario.radix();
    const int n = inst_.variable_count() / 2;
    table.values.reserve(n);
    for (int i = 0; i < n; ++i) {
      int u = variable_index(i, 0);
      int v = variable_index(i, 1);
      table.values.push_back({inst_.domains[u][assigned_[u]], inst_.domains[v][assigned_[v]]});
    }
    if (!visit_(table)) stopped_ = true;
  }

  void descend() {
    int var = choose_variable();
    if (var < 0) {
      report();
      return;
    }
    std::array<int, 3> order{0, 1, 2};
    if (options_.shuffle_seed) std::shuffle(order.begin(), order.end(), rng_);
    for (int k : order) {
      if (!(mask_[var] & (1u << k))) continue;
      if (options_.node_budget && summary_.stats.nodes >= options_.node_budget) {
        summary_.aborted = true;
        return;
      }
      ++summary_.stats.nodes;
      std::size_t mark = trail_.size();
      trail_.push_back({var, mask_[var]});
      mask_[var] = static_cast<std::uint8_t>(1u << k);
      assigned_[var] = k;
      bool consistent = true;
      for (int ci : inst_.constraints_of[var]) {
        if (!revise(ci)) {
          consistent = false;
          break;
        }
      }
      if (consistent) descend();
      assigned_[var] = -1;
      undo(mark);
      if (stopped_ || summary_.aborted) return;
      ++summary_.stats.backtracks;
    }
  }

  const MspInstance& inst_;
  const SolveOptions& options_;
  const std::function<bool(const CongruousTable&)>& visit_;
  std::vector<std::uint8_t> mask_;
  std::vector<int> assigned_;
  std::vector<std::pair<int, std::uint8_t>> trail_;
  std::mt19937_64 rng_;
  bool stopped_ = false;
  SearchSummary summary_;
};

}  // namespace

SearchSummary search(const MspInstance& instance, const SolveOptions& options,
                     const std::function<bool(const CongruousTable&)>& visit) {
  return Search(instance, options, visit).run();
}

SolveOutcome solve_first(const MspInstance& instance, const SolveOptions& options) {
  SolveOutcome outcome;
  SearchSummary summary = search(instance, options, [&](const CongruousTable& t) {
    outcome.solution = t;
    return false;
  });
  outcome.stats = summary.stats;
  if (outcome.solution) {
    outcome.status = SolveStatus::Solution;
  } else {
    outcome.status = summary.aborted ? SolveStatus::Aborted : SolveStatus::Unsatisfiable;
  }
  return outcome;
}

Enumeration solve_all(const MspInstance& instance, const SolveOptions& options, std::size_t max_solutions) {
  Enumeration result;
  SearchSummary summary = search(instance, options, [&](const CongruousTable& t) {
    result.solutions.push_back(t);
    return result.solutions.size() < max_solutions;
  });
  result.stats = summary.stats;
  result.complete = summary.complete;
  if (!result.complete) {
    result.status = SolveStatus::Aborted;
  } else {
    result.status = result.solutions.empty() ? SolveStatus::Unsatisfiable : SolveStatus::Solution;
  }
  return result;
}

CountResult count_solutions(const MspInstance& instance, const SolveOptions& options) {
  CountResult result;
  SearchSummary summary = search(instance, options, [&](const CongruousTable&) {
    ++result.count;
    return true;
  });
  result.complete = summary.complete;
  result.stats = summary.stats;
  return result;
}

namespace {

std::string position(int i, int side) {
  return std::string(side == 0 ? "U_" : "V_") + std::to_string(i);
}

}  // namespace

CongruenceReport check_congruous(const TriplicationTable& table, const CongruousTable& solution,
                                 const Scenario& sc) {
  auto fail = [](std::string why) { return CongruenceReport{false, std::move(why)}; };
  if (sc.order() != table.order()) return fail("scenario order differs from table order");
  if (solution.kind != sc.kind() || solution.radix != sc.radix()) return fail("solution scenario differs");
  if (solution.values.size() != table.size()) {
    return fail("solution has " + std::to_string(solution.values.size()) + " pairs, table has " +
                std::to_string(table.size()));
  }
  const auto& pairs = table.pairs();
  const auto& values = solution.values;
  const int n = static_cast<int>(pairs.size());
  std::vector<Encoded> left(n), right(n);
  for (int i = 0; i < n; ++i) {
    left[i] = {pairs[i].x, values[i].x};
    right[i] = {pairs[i].y, values[i].y};
    for (int side = 0; side < 2; ++side) {
      Encoded e = side == 0 ? left[i] : right[i];
      if (e.U < 0 || e.U >= sc.radix()) return fail("range: " + position(i, side) + " out of range");
      if (!sc.in_range(e)) {
        return fail("compatibility: " + position(i, side) + " = " + std::to_string(e.U) + " incompatible with " +
                    std::to_string(e.u));
      }
    }
  }
  const auto& carries = table.carries();
  auto difference = [&](int i) { return sc.box_sub(left[i], right[i], carries.difference[i]); };
  auto sum = [&](int i) { return sc.box_add(left[i], right[i], carries.summation[i]); };

  if (difference(0) == 0) return fail("row: D_0 is zero");
  for (int d = 1; d <= table.half(); ++d) {
    int a = difference(3 * d - 2), b = difference(3 * d - 1), c = difference(3 * d);
    if (a == b || a == c || b == c) return fail("row: row " + std::to_string(d) + " repeats a difference");
  }
  for (const WeakSet& w : table.weak().sets) {
    std::vector<int> seen;
    for (int i : w.indices) {
      int s = sum(i);
      if (w.sum == 0 && s == 0) return fail("weak: weak set W_0 has zero sum at pair " + std::to_string(i));
      if (std::find(seen.begin(), seen.end(), s) != seen.end()) {
        return fail("weak: weak set W_" + std::to_string(w.sum) + " repeats a sum");
      }
      seen.push_back(s);
    }
  }
  const auto& colors = table.monochrome().by_color;
  for (int c = 0; c < static_cast<int>(colors.size()); ++c) {
    std::vector<int> seen;
    for (const DoubleIndex& at : colors[c]) {
      int v = at.side == 0 ? values[at.pair].x : values[at.pair].y;
      if (c == 0 && v == 0) return fail("colour: " + position(at.pair, at.side) + " of colour 0 is zero");
      if (std::find(seen.begin(), seen.end(), v) != seen.end()) {
        return fail("colour: colour " + std::to_string(c) + " repeats a value");
      }
      seen.push_back(v);
    }
  }
  return {};
}

std::string render(const CongruousTable& solution) { return render_grid(solution.values); }

}  // namespace triplication
