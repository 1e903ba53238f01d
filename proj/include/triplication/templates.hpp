#pragma once

// Explicit table constructions from a base triple (T0, T1, T2): T0 an ordered
// starter, (T1, T2) a special pair of ordered pseudostarters, all of order m.
// For key t the template has (t, t) in the special row and, in row i,
//
//   (x0_i, y0_i),  (t + x1_i, t + y1_i),  (t + x2_i, t + y2_i)   (mod m).

#include <vector>

#include "triplication/modular.hpp"
#include "triplication/table.hpp"

namespace triplication {

/// A validated base triple. Construct through make_base (or the helpers
/// below), which puts every pairing into difference order and flips pairs of
/// T1 and T2 whose directed difference disagrees in sign with T0's.
class TemplateBase {
 public:
  const Pairing& t0() const noexcept { return t0_; }
  const Pairing& t1() const noexcept { return t1_; }
  const Pairing& t2() const noexcept { return t2_; }
  int order() const noexcept { return t0_.modulus(); }

 private:
  friend TemplateBase make_base(const Pairing&, const Pairing&, const Pairing&);
  TemplateBase(Pairing t0, Pairing t1, Pairing t2)
      : t0_(std::move(t0)), t1_(std::move(t1)), t2_(std::move(t2)) {}

  Pairing t0_;
  Pairing t1_;
  Pairing t2_;
};

/// Throws InvalidInput when T0 is not a starter or the orders differ, and
/// SpecialPairViolation when (T1, T2) is not a special pair.
TemplateBase make_base(const Pairing& t0, const Pairing& t1, const Pairing& t2);

/// (T, T, T').
TemplateBase one_starter_base(const Pairing& t);

/// (T0, E(mu), E(mu)').
TemplateBase epicycloidal_base(const Pairing& t0, int mu);

/// The 3q+1 template pairs for key t (1 <= t < m). The result satisfies
/// clauses (i) and (ii) but may repeat pairs.
Pairing build_template(const TemplateBase& base, int key);

/// Keys t in 1..m-1 whose template has no two identical pairs, ascending.
std::vector<int> admissible_keys(const TemplateBase& base);

/// Validated table for an admissible key; KeyNotAdmissible otherwise.
TriplicationTable template_table(const TemplateBase& base, int key);

TriplicationTable one_starter_table(const Pairing& t, int key);
TriplicationTable three_starter_table(const Pairing& t0, const Pairing& t1, const Pairing& t2, int key);

/// [(x_i, mu * x_i)] with (mu - 1) x_i = i, i = 1..q. Throws
/// MultiplierNotInvertible when gcd(mu - 1, m) != 1 and InvalidInput when mu
/// lies outside 2..m-2.
Pairing epicycloidal(int m, int mu);

/// [(x, m - x)] in canonical difference order.
Pairing patterned_starter(int m);

}  // namespace triplication
