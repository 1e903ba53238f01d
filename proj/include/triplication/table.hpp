#pragma once

// Triplication tables: 3q+1 ordered pairs over Z_m (m = 2q+1) laid out as a
// special row holding (t, t) followed by q regular rows of three pairs, where
// every pair of row d has directed difference +d or -d (one sign per row).
//
// Pair index i maps to row (i + 2) / 3; row d holds indices 3d-2, 3d-1, 3d.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "triplication/modular.hpp"

namespace triplication {

/// The defining clauses, in the order validation checks them.
enum class TableClause {
  Shape,         // length 3q+1 over an odd modulus m = 2q+1
  Multiplicity,  // (i)   every nonzero residue three times, zero twice
  Difference,    // (ii)  single (t,t) pair at index 0, row differences
  SumBound,      // (iii) at most 3 pairs per nonzero sum, 2 per zero sum
  Duplicate,     // (iv)  no two identical ordered pairs
};

const char* to_string(TableClause clause);

class NotATable : public Error {
 public:
  NotATable(TableClause clause, const std::string& detail)
      : Error(ErrorCode::NotATable, std::string("clause ") + to_string(clause) + ": " + detail),
        clause_(clause), detail_(detail) {}

  TableClause clause() const noexcept { return clause_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  TableClause clause_;
  std::string detail_;
};

/// Position of an entry: pair index and side (0 for u, 1 for v).
struct DoubleIndex {
  int pair = 0;
  int side = 0;

  auto operator<=>(const DoubleIndex&) const = default;
};

struct MonochromeSets {
  /// by_color[c] lists the positions holding value c, in index order.
  std::vector<std::vector<DoubleIndex>> by_color;
};

struct WeakSet {
  int sum = 0;
  std::vector<int> indices;
};

struct WeakSets {
  /// Sets with sum 0 (when nonempty) or more than one member, ordered by sum.
  std::vector<WeakSet> sets;
  /// Pairs with a unique nonzero sum.
  std::vector<int> strong;
};

struct CarryTables {
  /// difference[i] = 1 iff u_i < v_i as integers.
  std::vector<std::uint8_t> difference;
  /// summation[i] = 1 iff u_i + v_i >= m as integers.
  std::vector<std::uint8_t> summation;
};

class TriplicationTable {
 public:
  /// Checks every clause and throws NotATable naming the first that fails.
  static TriplicationTable validate(const Pairing& raw);
  static TriplicationTable validate(int m, std::vector<Pair> pairs);

  int order() const noexcept { return m_; }
  int half() const noexcept { return (m_ - 1) / 2; }
  int key() const noexcept { return pairs_.front().x; }
  std::size_t size() const noexcept { return pairs_.size(); }
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  const Pair& operator[](std::size_t i) const { return pairs_[i]; }

  /// Sign of row d (1..q): +1 or -1.
  int sign(int d) const { return signs_.at(d - 1); }
  const std::vector<int>& signs() const noexcept { return signs_; }

  /// Row 0 is the special row; rows 1..q hold three pairs.
  std::span<const Pair> row(int d) const;

  /// Column c (0..2) of the regular part as an ordered pseudostarter.
  Pairing column(int c) const;

  Pairing as_pairing() const { return Pairing(m_, pairs_); }

  const MonochromeSets& monochrome() const noexcept { return monochrome_; }
  const WeakSets& weak() const noexcept { return weak_; }
  const CarryTables& carries() const noexcept { return carries_; }

  bool operator==(const TriplicationTable& other) const {
    return m_ == other.m_ && pairs_ == other.pairs_;
  }

 private:
  TriplicationTable() = default;
  void derive();

  int m_ = 0;
  std::vector<Pair> pairs_;
  std::vector<int> signs_;
  MonochromeSets monochrome_;
  WeakSets weak_;
  CarryTables carries_;
};

/// A table induced by a strong starter, with the starter's pairs oriented and
/// permuted into table order: aligned[i] reduces to table[i] modulo m.
struct InducedTable {
  TriplicationTable table;
  Pairing aligned;
};

/// Reduces a strong starter of order 3m modulo m and arranges the result as a
/// table with every row sign +1. Pairs keep their starter order within a row.
InducedTable induce_from_starter(const Pairing& starter);

/// Member of the equivalence class with every row sign +1 and the pairs of
/// each row sorted lexicographically.
TriplicationTable canonicalize(const TriplicationTable& table);

bool equivalent(const TriplicationTable& a, const TriplicationTable& b);

/// Text grid of 3q+1 pairs: the first pair centred on its own row, then rows
/// of three.
std::string render_grid(std::span<const Pair> pairs);

inline std::string render(const TriplicationTable& table) { return render_grid(table.pairs()); }

}  // namespace triplication
