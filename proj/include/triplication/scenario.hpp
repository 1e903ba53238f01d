#pragma once

// Discrimination scenarios: x in Z_3m is encoded as (u, U) with u = x mod m
// and U = f(x) in Z_r, where
//
//   Mod:   f(x) = x mod 3^(nu+1), r = 3^(nu+1), m = 3^nu * p, 3 does not divide p
//   Carry: f(x) = floor(x / m),    r = 3
//
// Box operations stand for f(F(a) - F(b)) and f(F(a) + F(b)). In Mod they
// reduce to arithmetic modulo r; in Carry they need the difference or
// summation carry of the u-parts, which callers pass explicitly.

#include <array>
#include <string>

namespace triplication {

enum class ScenarioKind { Mod, Carry };

const char* to_string(ScenarioKind kind);
ScenarioKind parse_scenario_kind(const std::string& text);

struct Encoded {
  int u = 0;
  int U = 0;

  bool operator==(const Encoded&) const = default;
};

class Scenario {
 public:
  /// Throws InvalidInput unless m is odd and >= 3.
  Scenario(ScenarioKind kind, int m);

  ScenarioKind kind() const noexcept { return kind_; }
  int order() const noexcept { return m_; }
  /// Exponent of 3 in m.
  int nu() const noexcept { return nu_; }
  /// Size of the discriminator range.
  int radix() const noexcept { return radix_; }
  /// 3^nu; candidate discriminators of one u differ by multiples of it (Mod).
  int step() const noexcept { return step_; }

  /// Discriminating function f on Z_3m.
  int discriminate(int x) const;
  Encoded encode(int x) const;
  /// Inverse of encode. Throws IncompatibleResidues outside the range of
  /// encode (Mod: U != u mod 3^nu) and InvalidInput for out-of-range parts.
  int decode(Encoded e) const;
  bool in_range(Encoded e) const;

  /// U (-) V with difference carry `borrow` = [a.u < b.u]; ignored in Mod.
  int box_sub(Encoded a, Encoded b, int borrow) const;
  /// U (+) V with summation carry `carry` = [a.u + b.u >= m]; ignored in Mod.
  int box_add(Encoded a, Encoded b, int carry) const;

  /// The three discriminators U with (u, U) in range, indexed by selector
  /// k = 0, 1, 2. Mod: (u + k * 3^nu) mod r. Carry: k.
  std::array<int, 3> domain(int u) const;

  bool operator==(const Scenario&) const = default;

 private:
  ScenarioKind kind_;
  int m_;
  int nu_ = 0;
  int step_ = 1;
  int radix_ = 3;
};

}  // namespace triplication
