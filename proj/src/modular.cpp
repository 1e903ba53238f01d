#include "triplication/modular.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace triplication {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::NotATable: return "NotATable";
    case ErrorCode::InputNotStrongStarter: return "InputNotStrongStarter";
    case ErrorCode::SpecialPairViolation: return "SpecialPairViolation";
    case ErrorCode::InconsistentOrdering: return "InconsistentOrdering";
    case ErrorCode::KeyNotAdmissible: return "KeyNotAdmissible";
    case ErrorCode::MultiplierNotInvertible: return "MultiplierNotInvertible";
    case ErrorCode::IncompatibleResidues: return "IncompatibleResidues";
    case ErrorCode::ScenarioMismatch: return "ScenarioMismatch";
    case ErrorCode::NotCongruous: return "NotCongruous";
    case ErrorCode::InternalVerificationFailure: return "InternalVerificationFailure";
  }
  return "Unknown";
}

long long gcd(long long a, long long b) { return std::gcd(a, b); }

std::optional<int> inverse_mod(long long a, int n) {
  // Extended Euclid on (a mod n, n).
  long long old_r = mod(a, n), r = n;
  long long old_s = 1, s = 0;
  while (r != 0) {
    long long quotient = old_r / r;
    old_r -= quotient * r;
    std::swap(old_r, r);
    old_s -= quotient * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) return std::nullopt;
  return mod(old_s, n);
}

Pairing::Pairing(int modulus, std::vector<Pair> pairs, bool ordered)
    : modulus_(modulus), pairs_(std::move(pairs)), ordered_(ordered) {
  if (modulus_ < 1) throw Error(ErrorCode::InvalidInput, "modulus must be positive");
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const Pair& p = pairs_[i];
    if (p.x < 0 || p.x >= modulus_ || p.y < 0 || p.y >= modulus_) {
      std::ostringstream os;
      os << "pair " << i << " (" << p.x << "," << p.y << ") is not reduced modulo " << modulus_;
      throw Error(ErrorCode::InvalidInput, os.str());
    }
  }
  if (ordered_) {
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (difference_class(pairs_[i], modulus_) != static_cast<int>(i + 1)) {
        std::ostringstream os;
        os << "ordered pairing: pair " << i + 1 << " does not have directed difference +-" << i + 1;
        throw Error(ErrorCode::InvalidInput, os.str());
      }
    }
  }
}

int difference_class(const Pair& p, int m) {
  int d = mod(p.y - p.x, m);
  return std::min(d, m - d) % m;
}

int difference_sign(const Pair& p, int m) {
  int d = mod(p.y - p.x, m);
  if (d == 0) return 0;
  return 2 * d < m ? 1 : -1;
}

Pairing order_by_difference(const Pairing& p) {
  const int m = p.modulus();
  const int q = (m - 1) / 2;
  if (m % 2 == 0 || static_cast<int>(p.size()) != q) {
    throw Error(ErrorCode::InvalidInput,
                "an ordered pseudostarter of order " + std::to_string(m) + " needs " +
                    std::to_string(q) + " pairs and an odd modulus");
  }
  std::vector<Pair> slots(q);
  std::vector<bool> filled(q, false);
  for (const Pair& pair : p) {
    int d = difference_class(pair, m);
    if (d == 0 || filled[d - 1]) {
      throw Error(ErrorCode::InvalidInput,
                  "pairing " + format_pairs(p.pairs()) + " does not cover every difference class once");
    }
    filled[d - 1] = true;
    slots[d - 1] = pair;
  }
  return Pairing(m, std::move(slots), true);
}

Pairing canonical_order(const Pairing& p) {
  Pairing ordered = order_by_difference(p);
  std::vector<Pair> pairs = ordered.pairs();
  for (Pair& pair : pairs) {
    if (difference_sign(pair, p.modulus()) < 0) std::swap(pair.x, pair.y);
  }
  return Pairing(p.modulus(), std::move(pairs), true);
}

Pairing canonical_unordered(const Pairing& p) {
  std::vector<Pair> pairs = p.pairs();
  for (Pair& pair : pairs) {
    if (pair.y < pair.x) std::swap(pair.x, pair.y);
  }
  std::sort(pairs.begin(), pairs.end());
  return Pairing(p.modulus(), std::move(pairs), false);
}

const char* to_string(StarterKind kind) {
  switch (kind) {
    case StarterKind::NotAny: return "NotAny";
    case StarterKind::Pseudostarter: return "Pseudostarter";
    case StarterKind::Starter: return "Starter";
    case StarterKind::StrongStarter: return "StrongStarter";
  }
  return "Unknown";
}

namespace {

std::string pair_text(std::size_t index, const Pair& p) {
  std::ostringstream os;
  os << "pair " << index << " (" << p.x << "," << p.y << ")";
  return os.str();
}

// Difference coverage: the 2q values +-(y - x) are exactly Z_m^*.
std::optional<std::string> difference_failure(const Pairing& p) {
  const int m = p.modulus();
  const int q = (m - 1) / 2;
  if (m < 3 || m % 2 == 0) return "modulus " + std::to_string(m) + " is not an odd number >= 3";
  if (static_cast<int>(p.size()) != q) {
    return "pairing has " + std::to_string(p.size()) + " pairs, expected (m-1)/2 = " + std::to_string(q);
  }
  std::vector<int> seen(q + 1, -1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    int d = difference_class(p[i], m);
    if (d == 0) return pair_text(i, p[i]) + " has zero difference";
    if (seen[d] >= 0) {
      return "difference +-" + std::to_string(d) + " repeats at pairs " + std::to_string(seen[d]) +
             " and " + std::to_string(i);
    }
    seen[d] = static_cast<int>(i);
  }
  return std::nullopt;
}

std::optional<std::string> partition_failure(const Pairing& p) {
  const int m = p.modulus();
  std::vector<int> seen(m, -1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (int value : {p[i].x, p[i].y}) {
      if (value == 0) return pair_text(i, p[i]) + " contains 0";
      if (seen[value] >= 0) {
        return "element " + std::to_string(value) + " repeats (pairs " + std::to_string(seen[value]) +
               " and " + std::to_string(i) + ")";
      }
      seen[value] = static_cast<int>(i);
    }
  }
  return std::nullopt;
}

std::optional<std::string> strength_failure(const Pairing& p) {
  const int m = p.modulus();
  std::vector<int> seen(m, -1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    int s = mod(p[i].x + p[i].y, m);
    if (s == 0) return pair_text(i, p[i]) + " has sum 0";
    if (seen[s] >= 0) {
      return "sum " + std::to_string(s) + " repeats at pairs " + std::to_string(seen[s]) + " and " +
             std::to_string(i);
    }
    seen[s] = static_cast<int>(i);
  }
  return std::nullopt;
}

}  // namespace

StarterClass classify(const Pairing& p) {
  if (p.empty()) throw Error(ErrorCode::InvalidInput, "cannot classify an empty pairing");
  if (auto failure = difference_failure(p)) return {StarterKind::NotAny, *failure};
  if (auto failure = partition_failure(p)) return {StarterKind::Pseudostarter, *failure};
  if (auto failure = strength_failure(p)) return {StarterKind::Starter, *failure};
  return {StarterKind::StrongStarter, {}};
}

std::vector<int> sums(const Pairing& p) {
  std::vector<int> out;
  out.reserve(p.size());
  for (const Pair& pair : p) out.push_back(mod(pair.x + pair.y, p.modulus()));
  return out;
}

Pairing conjugate(const Pairing& p) {
  const int m = p.modulus();
  std::vector<Pair> out;
  out.reserve(p.size());
  for (const Pair& pair : p) out.push_back({mod(-pair.y, m), mod(-pair.x, m)});
  return Pairing(m, std::move(out), p.ordered());
}

bool is_special_pair(const Pairing& a, const Pairing& b) {
  if (a.modulus() != b.modulus()) return false;
  const int m = a.modulus();
  std::vector<int> count(m, 0);
  for (const Pairing* p : {&a, &b}) {
    for (const Pair& pair : *p) {
      ++count[pair.x];
      ++count[pair.y];
    }
  }
  if (count[0] != 0) return false;
  return std::all_of(count.begin() + 1, count.end(), [](int c) { return c == 2; });
}

bool are_disjoint(const Pairing& a, const Pairing& b) {
  std::vector<Pair> left = a.pairs();
  std::vector<Pair> right = b.pairs();
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  std::vector<Pair> common;
  std::set_intersection(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(common));
  return common.empty();
}

namespace {

class StrongStarterSearch {
 public:
  StrongStarterSearch(int m, std::optional<std::size_t> max_count)
      : m_(m), q_((m - 1) / 2), max_count_(max_count), used_(m, false), diff_used_(q_ + 1, false),
        sum_used_(m, false), slots_(q_) {
    used_[0] = true;
    sum_used_[0] = true;
  }

  std::vector<Pairing> run() {
    extend(0);
    std::sort(found_.begin(), found_.end(),
              [](const Pairing& a, const Pairing& b) { return a.pairs() < b.pairs(); });
    return std::move(found_);
  }

 private:
  bool full() const { return max_count_ && found_.size() >= *max_count_; }

  void extend(int placed) {
    if (full()) return;
    if (placed == q_) {
      found_.emplace_back(m_, slots_, true);
      return;
    }
    int a = 1;
    while (used_[a]) ++a;
    used_[a] = true;
    for (int b = a + 1; b < m_ && !full(); ++b) {
      if (used_[b]) continue;
      int d = difference_class({a, b}, m_);
      int s = mod(a + b, m_);
      if (diff_used_[d] || sum_used_[s]) continue;
      used_[b] = diff_used_[d] = sum_used_[s] = true;
      slots_[d - 1] = difference_sign({a, b}, m_) > 0 ? Pair{a, b} : Pair{b, a};
      extend(placed + 1);
      used_[b] = diff_used_[d] = sum_used_[s] = false;
    }
    used_[a] = false;
  }

  int m_;
  int q_;
  std::optional<std::size_t> max_count_;
  std::vector<bool> used_;
  std::vector<bool> diff_used_;
  std::vector<bool> sum_used_;
  std::vector<Pair> slots_;
  std::vector<Pairing> found_;
};

}  // namespace

std::vector<Pairing> enumerate_strong_starters(int m, const EnumerationLimits& limits) {
  if (m < 3 || m % 2 == 0) throw Error(ErrorCode::InvalidInput, "order must be odd and >= 3");
  if (m > 15 && !limits.allow_large) {
    throw Error(ErrorCode::OrderTooLarge,
                "exhaustive enumeration of order " + std::to_string(m) + " needs allow_large");
  }
  return StrongStarterSearch(m, limits.max_count).run();
}

std::vector<Pair> parse_pair_list(const std::string& text) {
  std::vector<Pair> pairs;
  std::stringstream outer(text);
  std::string item;
  while (std::getline(outer, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    Pair p;
    char comma = 0;
    std::istringstream inner(item);
    if (!(inner >> p.x >> comma >> p.y) || comma != ',') {
      throw Error(ErrorCode::InvalidInput, "cannot parse pair '" + item + "', expected x,y");
    }
    std::string rest;
    if (inner >> rest) throw Error(ErrorCode::InvalidInput, "trailing text in pair '" + item + "'");
    pairs.push_back(p);
  }
  return pairs;
}

std::string format_pairs(std::span<const Pair> pairs, bool braces) {
  std::ostringstream os;
  os << (braces ? "{" : "[");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) os << ", ";
    if (braces) {
      os << "{" << pairs[i].x << ", " << pairs[i].y << "}";
    } else {
      os << "(" << pairs[i].x << ", " << pairs[i].y << ")";
    }
  }
  os << (braces ? "}" : "]");
  return os.str();
}

}  // namespace triplication
