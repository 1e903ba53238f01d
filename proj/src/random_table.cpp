#include <algorithm>
#include <numeric>
#include <random>

#include "triplication/msp.hpp"

namespace triplication {

namespace {

// Randomized backtracking over the left components u of the regular pairs
// (u, u + d). Within a row the u are increasing, which rules out repeated
// pairs; element and sum counters enforce clauses (i) and (iii).
class TableSampler {
 public:
  TableSampler(int m, std::mt19937_64& rng) : m_(m), q_((m - 1) / 2), rng_(rng) {}

  // One attempt with a fresh key and fresh value orders. Returns true on
  // success; `nodes` is charged for every tried placement.
  bool attempt(std::uint64_t cap, std::uint64_t& nodes) {
    count_.assign(m_, 0);
    sums_.assign(m_, 0);
    pairs_.assign(3 * q_ + 1, {});
    key_ = std::uniform_int_distribution<int>(1, m_ - 1)(rng_);
    pairs_[0] = {key_, key_};
    count_[key_] = 2;
    sums_[mod(2 * key_, m_)] = 1;
    orders_.assign(3 * q_ + 1, std::vector<int>(m_));
    for (auto& order : orders_) {
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng_);
    }
    cap_ = nodes + cap;
    nodes_ = &nodes;
    return place(1);
  }

  const std::vector<Pair>& pairs() const { return pairs_; }

 private:
  int capacity(int c) const { return c == 0 ? 2 : 3; }

  bool place(int i) {
    if (i > 3 * q_) return true;
    const int d = (i + 2) / 3;
    const bool row_start = (i - 1) % 3 == 0;
    for (int u : orders_[i]) {
      if (!row_start && u <= pairs_[i - 1].x) continue;
      int v = mod(u + d, m_);
      int s = mod(u + v, m_);
      if (count_[u] >= capacity(u) || count_[v] >= capacity(v) || sums_[s] >= capacity(s)) continue;
      if (*nodes_ >= cap_) return false;
      ++*nodes_;
      ++count_[u];
      ++count_[v];
      ++sums_[s];
      pairs_[i] = {u, v};
      if (place(i + 1)) return true;
      --count_[u];
      --count_[v];
      --sums_[s];
      if (*nodes_ >= cap_) return false;
    }
    return false;
  }

  int m_;
  int q_;
  std::mt19937_64& rng_;
  int key_ = 0;
  std::vector<int> count_;
  std::vector<int> sums_;
  std::vector<Pair> pairs_;
  std::vector<std::vector<int>> orders_;
  std::uint64_t cap_ = 0;
  std::uint64_t* nodes_ = nullptr;
};

}  // namespace

std::optional<TriplicationTable> random_tt(int m, const RandomTableOptions& options) {
  if (m < 5 || m % 2 == 0) throw Error(ErrorCode::InvalidInput, "random tables need an odd order >= 5");
  std::mt19937_64 rng(options.seed);
  TableSampler sampler(m, rng);
  std::uint64_t nodes = 0;
  const std::uint64_t per_attempt = options.restart_after ? options.restart_after : UINT64_MAX;
  while (options.node_budget == 0 || nodes < options.node_budget) {
    std::uint64_t cap = per_attempt;
    if (options.node_budget) cap = std::min(cap, options.node_budget - nodes);
    std::uint64_t before = nodes;
    if (sampler.attempt(cap, nodes)) return TriplicationTable::validate(m, sampler.pairs());
    // A dead end with no nodes spent means the key itself is hopeless.
    if (nodes == before) ++nodes;
  }
  return std::nullopt;
}

}  // namespace triplication
