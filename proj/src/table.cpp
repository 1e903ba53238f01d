#include "triplication/table.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace triplication {

const char* to_string(TableClause clause) {
  switch (clause) {
    case TableClause::Shape: return "shape";
    case TableClause::Multiplicity: return "(i)";
    case TableClause::Difference: return "(ii)";
    case TableClause::SumBound: return "(iii)";
    case TableClause::Duplicate: return "(iv)";
  }
  return "?";
}

namespace {

std::string at(int index, const Pair& p) {
  std::ostringstream os;
  os << "pair " << index << " (" << p.x << "," << p.y << ")";
  return os.str();
}

}  // namespace

TriplicationTable TriplicationTable::validate(const Pairing& raw) {
  return validate(raw.modulus(), raw.pairs());
}

TriplicationTable TriplicationTable::validate(int m, std::vector<Pair> pairs) {
  if (m < 3 || m % 2 == 0) {
    throw NotATable(TableClause::Shape, "order " + std::to_string(m) + " is not an odd number >= 3");
  }
  const int q = (m - 1) / 2;
  const int n = static_cast<int>(pairs.size());
  if (n != 3 * q + 1) {
    throw NotATable(TableClause::Shape, std::to_string(n) + " pairs given, order " + std::to_string(m) +
                                            " needs " + std::to_string(3 * q + 1));
  }
  for (int i = 0; i < n; ++i) {
    const Pair& p = pairs[i];
    if (p.x < 0 || p.x >= m || p.y < 0 || p.y >= m) {
      throw NotATable(TableClause::Shape, at(i, p) + " is not reduced modulo " + std::to_string(m));
    }
  }

  std::vector<int> count(m, 0);
  for (const Pair& p : pairs) {
    ++count[p.x];
    ++count[p.y];
  }
  for (int c = 0; c < m; ++c) {
    int expected = c == 0 ? 2 : 3;
    if (count[c] != expected) {
      throw NotATable(TableClause::Multiplicity, "value " + std::to_string(c) + " occurs " +
                                                     std::to_string(count[c]) + " times, expected " +
                                                     std::to_string(expected));
    }
  }

  if (pairs[0].x != pairs[0].y || pairs[0].x == 0) {
    throw NotATable(TableClause::Difference, at(0, pairs[0]) + " is not of the form (t,t) with t != 0");
  }
  std::vector<int> signs(q);
  for (int d = 1; d <= q; ++d) {
    for (int i = 3 * d - 2; i <= 3 * d; ++i) {
      int cls = difference_class(pairs[i], m);
      int sgn = difference_sign(pairs[i], m);
      if (cls != d) {
        throw NotATable(TableClause::Difference,
                        at(i, pairs[i]) + " in row " + std::to_string(d) + " has difference class " +
                            std::to_string(cls) + ", expected " + std::to_string(d));
      }
      if (i == 3 * d - 2) {
        signs[d - 1] = sgn;
      } else if (sgn != signs[d - 1]) {
        throw NotATable(TableClause::Difference,
                        "row " + std::to_string(d) + " mixes directed differences " + std::to_string(d) +
                            " and " + std::to_string(-d));
      }
    }
  }

  std::vector<int> sum_count(m, 0);
  for (int i = 0; i < n; ++i) {
    int s = mod(pairs[i].x + pairs[i].y, m);
    int bound = s == 0 ? 2 : 3;
    if (++sum_count[s] > bound) {
      throw NotATable(TableClause::SumBound, "more than " + std::to_string(bound) + " pairs have sum " +
                                                 std::to_string(s) + " (exceeded at " + at(i, pairs[i]) + ")");
    }
  }

  std::map<Pair, int> first_seen;
  for (int i = 0; i < n; ++i) {
    auto [it, inserted] = first_seen.emplace(pairs[i], i);
    if (!inserted) {
      throw NotATable(TableClause::Duplicate, at(i, pairs[i]) + " repeats pair " + std::to_string(it->second));
    }
  }

  TriplicationTable table;
  table.m_ = m;
  table.pairs_ = std::move(pairs);
  table.signs_ = std::move(signs);
  table.derive();
  return table;
}

void TriplicationTable::derive() {
  const int n = static_cast<int>(pairs_.size());
  monochrome_.by_color.assign(m_, {});
  carries_.difference.resize(n);
  carries_.summation.resize(n);
  std::vector<std::vector<int>> by_sum(m_);
  for (int i = 0; i < n; ++i) {
    const Pair& p = pairs_[i];
    monochrome_.by_color[p.x].push_back({i, 0});
    monochrome_.by_color[p.y].push_back({i, 1});
    by_sum[mod(p.x + p.y, m_)].push_back(i);
    carries_.difference[i] = p.x < p.y ? 1 : 0;
    carries_.summation[i] = p.x + p.y >= m_ ? 1 : 0;
  }
  weak_ = {};
  for (int s = 0; s < m_; ++s) {
    const auto& members = by_sum[s];
    if (members.empty()) continue;
    if (s == 0 || members.size() > 1) {
      weak_.sets.push_back({s, members});
    } else {
      weak_.strong.push_back(members.front());
    }
  }
  std::sort(weak_.strong.begin(), weak_.strong.end());
}

std::span<const Pair> TriplicationTable::row(int d) const {
  if (d == 0) return std::span<const Pair>(pairs_).subspan(0, 1);
  return std::span<const Pair>(pairs_).subspan(3 * d - 2, 3);
}

Pairing TriplicationTable::column(int c) const {
  std::vector<Pair> out;
  for (int d = 1; d <= half(); ++d) out.push_back(pairs_[3 * d - 2 + c]);
  return Pairing(m_, std::move(out), true);
}

InducedTable induce_from_starter(const Pairing& starter) {
  if (classify(starter).kind != StarterKind::StrongStarter) {
    throw Error(ErrorCode::InputNotStrongStarter, "pairing " + format_pairs(starter.pairs()) +
                                                      " is not a strong starter");
  }
  const int n = starter.modulus();
  if (n % 3 != 0) {
    throw Error(ErrorCode::InputNotStrongStarter, "order " + std::to_string(n) + " is not divisible by 3");
  }
  const int m = n / 3;
  const int q = (m - 1) / 2;
  if (q < 1) throw Error(ErrorCode::InvalidInput, "order 3 has no triplication table");

  std::vector<Pair> special;
  std::vector<std::vector<Pair>> rows(q + 1);
  for (const Pair& p : starter) {
    Pair reduced{p.x % m, p.y % m};
    if (reduced.x == reduced.y) {
      special.push_back(p);
      continue;
    }
    Pair oriented = difference_sign(reduced, m) > 0 ? p : Pair{p.y, p.x};
    rows[difference_class(reduced, m)].push_back(oriented);
  }
  std::vector<Pair> aligned;
  if (special.size() != 1) {
    throw NotATable(TableClause::Difference, "reduction has " + std::to_string(special.size()) +
                                                 " pairs of the form (t,t)");
  }
  aligned.push_back(special.front());
  for (int d = 1; d <= q; ++d) {
    if (rows[d].size() != 3) {
      throw NotATable(TableClause::Difference,
                      "reduction has " + std::to_string(rows[d].size()) + " pairs with difference +-" +
                          std::to_string(d));
    }
    aligned.insert(aligned.end(), rows[d].begin(), rows[d].end());
  }
  std::vector<Pair> reduced;
  reduced.reserve(aligned.size());
  for (const Pair& p : aligned) reduced.push_back({p.x % m, p.y % m});
  return {TriplicationTable::validate(m, std::move(reduced)), Pairing(n, std::move(aligned))};
}

TriplicationTable canonicalize(const TriplicationTable& table) {
  std::vector<Pair> pairs = table.pairs();
  for (int d = 1; d <= table.half(); ++d) {
    auto first = pairs.begin() + (3 * d - 2);
    if (table.sign(d) < 0) {
      for (auto it = first; it != first + 3; ++it) std::swap(it->x, it->y);
    }
    std::sort(first, first + 3);
  }
  return TriplicationTable::validate(table.order(), std::move(pairs));
}

bool equivalent(const TriplicationTable& a, const TriplicationTable& b) {
  return a.order() == b.order() && canonicalize(a) == canonicalize(b);
}

std::string render_grid(std::span<const Pair> pairs) {
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (const Pair& p : pairs) {
    cells.push_back("(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")");
    width = std::max(width, cells.back().size());
  }
  width += 2;
  auto pad = [width](const std::string& s) {
    std::size_t left = (width - s.size()) / 2;
    return std::string(left, ' ') + s + std::string(width - s.size() - left, ' ');
  };
  std::string rule = "+";
  for (int c = 0; c < 3; ++c) rule += std::string(width, '-') + "+";

  std::ostringstream os;
  os << rule << "\n";
  if (!cells.empty()) os << "|" << pad("") << "|" << pad(cells[0]) << "|" << pad("") << "|\n" << rule << "\n";
  for (std::size_t i = 1; i < cells.size(); i += 3) {
    os << "|";
    for (std::size_t j = i; j < i + 3; ++j) os << pad(j < cells.size() ? cells[j] : "") << "|";
    os << "\n" << rule << "\n";
  }
  return os.str();
}

}  // namespace triplication
