#include "triplication/recovery.hpp"

namespace triplication {

Pairing recover_starter(const TriplicationTable& table, const CongruousTable& solution, const Scenario& scenario) {
  CongruenceReport report = check_congruous(table, solution, scenario);
  if (!report) throw Error(ErrorCode::NotCongruous, report.violation);
  const int n = 3 * table.order();
  std::vector<Pair> pairs;
  pairs.reserve(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    pairs.push_back({scenario.decode({table[i].x, solution.values[i].x}),
                     scenario.decode({table[i].y, solution.values[i].y})});
  }
  Pairing starter(n, std::move(pairs));
  StarterClass c = classify(starter);
  if (c.kind != StarterKind::StrongStarter) {
    throw Error(ErrorCode::InternalVerificationFailure,
                "decoded pairing " + format_pairs(starter.pairs()) + " is not a strong starter: " + c.witness);
  }
  return starter;
}

RoundTrip round_trip(const Pairing& starter, const Scenario& scenario) {
  InducedTable induced = induce_from_starter(starter);
  if (scenario.order() != induced.table.order()) {
    throw Error(ErrorCode::ScenarioMismatch, "scenario order " + std::to_string(scenario.order()) +
                                                 " does not match starter order " + std::to_string(starter.modulus()));
  }
  CongruousTable solution{scenario.kind(), scenario.radix(), {}};
  for (const Pair& p : induced.aligned) {
    solution.values.push_back({scenario.encode(p.x).U, scenario.encode(p.y).U});
  }
  return {std::move(induced.table), std::move(solution), std::move(induced.aligned)};
}

}  // namespace triplication
