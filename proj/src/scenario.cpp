#include "triplication/scenario.hpp"

#include "triplication/crt.hpp"
#include "triplication/modular.hpp"

namespace triplication {

const char* to_string(ScenarioKind kind) { return kind == ScenarioKind::Mod ? "mod" : "carry"; }

ScenarioKind parse_scenario_kind(const std::string& text) {
  if (text == "mod" || text == "Mod") return ScenarioKind::Mod;
  if (text == "carry" || text == "Carry") return ScenarioKind::Carry;
  throw Error(ErrorCode::InvalidInput, "unknown scenario '" + text + "' (expected mod or carry)");
}

Scenario::Scenario(ScenarioKind kind, int m) : kind_(kind), m_(m) {
  if (m < 3 || m % 2 == 0) throw Error(ErrorCode::InvalidInput, "order must be odd and >= 3");
  for (int rest = m; rest % 3 == 0; rest /= 3) {
    ++nu_;
    step_ *= 3;
  }
  radix_ = kind == ScenarioKind::Mod ? 3 * step_ : 3;
}

int Scenario::discriminate(int x) const {
  return kind_ == ScenarioKind::Mod ? mod(x, radix_) : mod(x, 3 * m_) / m_;
}

Encoded Scenario::encode(int x) const {
  int reduced = mod(x, 3 * m_);
  return {reduced % m_, discriminate(reduced)};
}

bool Scenario::in_range(Encoded e) const {
  if (e.u < 0 || e.u >= m_ || e.U < 0 || e.U >= radix_) return false;
  return kind_ == ScenarioKind::Carry || e.u % step_ == e.U % step_;
}

int Scenario::decode(Encoded e) const {
  if (e.u < 0 || e.u >= m_ || e.U < 0 || e.U >= radix_) {
    throw Error(ErrorCode::InvalidInput, "encoded element (" + std::to_string(e.u) + ", " + std::to_string(e.U) +
                                             ") is out of range");
  }
  if (kind_ == ScenarioKind::Carry) return mod(static_cast<long long>(m_) * e.U + e.u, 3 * m_);
  return static_cast<int>(crt_general({e.u, m_, e.U, radix_}));
}

int Scenario::box_sub(Encoded a, Encoded b, int borrow) const {
  if (kind_ == ScenarioKind::Mod) return mod(a.U - b.U, radix_);
  return mod(a.U - b.U - borrow, 3);
}

int Scenario::box_add(Encoded a, Encoded b, int carry) const {
  if (kind_ == ScenarioKind::Mod) return mod(a.U + b.U, radix_);
  return mod(a.U + b.U + carry, 3);
}

std::array<int, 3> Scenario::domain(int u) const {
  if (kind_ == ScenarioKind::Carry) return {0, 1, 2};
  return {mod(u, radix_), mod(u + step_, radix_), mod(u + 2 * step_, radix_)};
}

}  // namespace triplication
