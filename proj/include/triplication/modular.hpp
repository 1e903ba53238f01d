#pragma once

// Arithmetic in Z_n and pairings of residues.
//
// A Pairing is an immutable tuple of ordered pairs over a single modulus. It
// carries starters, pseudostarters, table columns and recovered starters
// alike; the `ordered` flag records that pair i (1-based) has directed
// difference y - x = +i or -i.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "triplication/error.hpp"

namespace triplication {

/// Canonical representative of a in [0, n).
constexpr int mod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

long long gcd(long long a, long long b);

/// Inverse of a modulo n, or nullopt when gcd(a, n) != 1.
std::optional<int> inverse_mod(long long a, int n);

struct Pair {
  int x = 0;
  int y = 0;

  auto operator<=>(const Pair&) const = default;
};

class Pairing {
 public:
  Pairing() = default;

  /// Throws InvalidInput when a component falls outside [0, modulus), or when
  /// `ordered` is set and pair i does not have directed difference +-i.
  Pairing(int modulus, std::vector<Pair> pairs, bool ordered = false);

  int modulus() const noexcept { return modulus_; }
  bool ordered() const noexcept { return ordered_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  const Pair& operator[](std::size_t i) const { return pairs_[i]; }
  auto begin() const noexcept { return pairs_.begin(); }
  auto end() const noexcept { return pairs_.end(); }

  bool operator==(const Pairing&) const = default;

 private:
  int modulus_ = 0;
  std::vector<Pair> pairs_;
  bool ordered_ = false;
};

/// Index d in 1..(m-1)/2 with v - u = +-d (mod m); 0 when u == v.
int difference_class(const Pair& p, int m);

/// +1 when v - u = +d, -1 when v - u = -d, 0 when u == v.
int difference_sign(const Pair& p, int m);

/// Places the pair with difference class i at position i, keeping each pair's
/// orientation. Throws InvalidInput unless the pairing has one pair per class.
Pairing order_by_difference(const Pairing& p);

/// order_by_difference followed by swapping every pair to y - x = +i.
Pairing canonical_order(const Pairing& p);

/// Pairs sorted internally, then sorted lexicographically.
Pairing canonical_unordered(const Pairing& p);

enum class StarterKind { NotAny, Pseudostarter, Starter, StrongStarter };

const char* to_string(StarterKind kind);

struct StarterClass {
  StarterKind kind = StarterKind::NotAny;
  /// First property that failed above `kind`; empty for strong starters.
  std::string witness;
};

/// Strongest of pseudostarter / starter / strong starter that `p` satisfies.
/// Throws InvalidInput for an empty pairing.
StarterClass classify(const Pairing& p);

/// Multiset {x + y mod m}, in pair order.
std::vector<int> sums(const Pairing& p);

/// [(-y, -x)] in the same index order; directed differences are preserved.
Pairing conjugate(const Pairing& p);

/// Multiset union of the components of a and b contains every nonzero
/// residue exactly twice.
bool is_special_pair(const Pairing& a, const Pairing& b);

/// No ordered pair of `a` occurs in `b`.
bool are_disjoint(const Pairing& a, const Pairing& b);

struct EnumerationLimits {
  std::optional<std::size_t> max_count;
  /// Lifts the m <= 15 guard.
  bool allow_large = false;
};

/// Every strong starter of order m by exhaustive backtracking, each in
/// canonical order, sorted lexicographically. Test oracle only.
std::vector<Pairing> enumerate_strong_starters(int m, const EnumerationLimits& limits = {});

/// Parses "x,y;x,y;..." into pairs (no modulus checks).
std::vector<Pair> parse_pair_list(const std::string& text);

std::string format_pairs(std::span<const Pair> pairs, bool braces = false);

}  // namespace triplication
