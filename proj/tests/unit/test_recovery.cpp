#include <gtest/gtest.h>

#include "oracles.hpp"
#include "golden.hpp"
#include "triplication/recovery.hpp"
#include "triplication/templates.hpp"

using namespace triplication;

namespace {

TriplicationTable T(int m, const char* text) { return TriplicationTable::validate(m, oracle::pairs(text)); }

CongruousTable C(ScenarioKind kind, int r, const char* text) { return {kind, r, oracle::pairs(text)}; }

}  // namespace

TEST(Recover, Table1) {
  Pairing s = recover_starter(T(15, golden::kSigma15), C(ScenarioKind::Mod, 9, golden::kTable1Left),
                              Scenario(ScenarioKind::Mod, 15));
  EXPECT_EQ(s.modulus(), 45);
  EXPECT_EQ(s.pairs(), oracle::pairs(golden::kTable1Right));
  EXPECT_TRUE(oracle::is_strong_starter(45, s.pairs()));
}

TEST(Recover, Example62) {
  Pairing s = recover_starter(T(7, golden::kSigma62), C(ScenarioKind::Carry, 3, golden::kSolution62),
                              Scenario(ScenarioKind::Carry, 7));
  EXPECT_EQ(s.pairs(), oracle::pairs(golden::kStarter62));
}

TEST(Recover, Tables5And6) {
  Scenario sc(ScenarioKind::Mod, 7);
  EXPECT_EQ(recover_starter(T(7, golden::kTable5Left), C(ScenarioKind::Mod, 3, golden::kTable5Middle), sc).pairs(),
            oracle::pairs(golden::kTable5Right));
  EXPECT_EQ(recover_starter(T(7, golden::kTable5Left), C(ScenarioKind::Mod, 3, golden::kTable6Middle), sc).pairs(),
            oracle::pairs(golden::kTable6Right));
}

TEST(Recover, RejectsNonCongruousInput) {
  try {
    recover_starter(T(7, golden::kSigma62), C(ScenarioKind::Carry, 3, golden::kTable6Middle),
                    Scenario(ScenarioKind::Carry, 7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCongruous);
  }
}

TEST(RoundTrip, Example74) {
  Pairing s(21, oracle::pairs(golden::kStarter74));
  for (ScenarioKind kind : {ScenarioKind::Mod, ScenarioKind::Carry}) {
    Scenario sc(kind, 7);
    RoundTrip rt = round_trip(s, sc);
    EXPECT_TRUE(equivalent(rt.table, T(7, golden::kTable5Left)));
    EXPECT_TRUE(check_congruous(rt.table, rt.solution, sc));
    Pairing back = recover_starter(rt.table, rt.solution, sc);
    EXPECT_EQ(back.pairs(), rt.aligned.pairs());
    EXPECT_EQ(oracle::sorted_unordered(back.pairs()), oracle::sorted_unordered(s.pairs()));
  }
  // Row 1 keeps the starter's order, so its discriminators are the printed ones.
  RoundTrip rt = round_trip(s, Scenario(ScenarioKind::Mod, 7));
  auto middle = oracle::pairs(golden::kTable5Middle);
  for (int i = 0; i <= 3; ++i) EXPECT_EQ(rt.solution.values[i], middle[i]) << i;
}

TEST(RoundTrip, Table2Starters) {
  for (const auto& row : golden::kTable2) {
    Pairing s(27, oracle::pairs(row.pairs));
    for (ScenarioKind kind : {ScenarioKind::Mod, ScenarioKind::Carry}) {
      Scenario sc(kind, 9);
      RoundTrip rt = round_trip(s, sc);
      EXPECT_EQ(rt.table.key(), row.key);
      EXPECT_EQ(recover_starter(rt.table, rt.solution, sc).pairs(), rt.aligned.pairs());
      EXPECT_EQ(oracle::sorted_unordered(rt.aligned.pairs()), oracle::sorted_unordered(s.pairs()));
    }
  }
}

TEST(RoundTrip, RejectsWeakInput) {
  try {
    round_trip(Pairing(21, oracle::pairs("1,20;2,19;3,18;4,17;5,16;6,15;7,14;8,13;9,12;10,11")),
               Scenario(ScenarioKind::Carry, 7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InputNotStrongStarter);
  }
  EXPECT_THROW(round_trip(Pairing(21, oracle::pairs(golden::kStarter74)), Scenario(ScenarioKind::Carry, 9)), Error);
}

TEST(Recover, RandomTablesGiveStrongStarters) {
  int checked = 0;
  for (int m : {5, 7, 9, 11}) {
    for (std::uint64_t seed = 100; seed < 125; ++seed) {
      auto t = random_tt(m, {seed});
      ASSERT_TRUE(t);
      for (ScenarioKind kind : {ScenarioKind::Mod, ScenarioKind::Carry}) {
        Scenario sc(kind, m);
        SolveOutcome out = solve_first(compile(*t, sc), {0, seed});
        if (!out.solution) continue;
        Pairing s = recover_starter(*t, *out.solution, sc);
        EXPECT_TRUE(oracle::is_strong_starter(3 * m, s.pairs()));
        for (std::size_t i = 0; i < s.size(); ++i) {
          EXPECT_EQ(s[i].x % m, (*t)[i].x);
          EXPECT_EQ(s[i].y % m, (*t)[i].y);
        }
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 150);
}

// Every strong starter of order 15 and 21: its own encoding is congruous with
// its induced table.
TEST(RoundTrip, NecessityOverAllStarters) {
  EnumerationLimits limits;
  limits.allow_large = true;
  for (int n : {15, 21}) {
    std::vector<Pairing> all = enumerate_strong_starters(n, limits);
    ASSERT_FALSE(all.empty());
    for (const Pairing& s : all) {
      for (ScenarioKind kind : {ScenarioKind::Mod, ScenarioKind::Carry}) {
        Scenario sc(kind, n / 3);
        RoundTrip rt = round_trip(s, sc);
        ASSERT_TRUE(check_congruous(rt.table, rt.solution, sc)) << format_pairs(s.pairs());
        ASSERT_EQ(recover_starter(rt.table, rt.solution, sc).pairs(), rt.aligned.pairs());
      }
    }
  }
}

// Lifts of sampled tables go the same way round.
TEST(RoundTrip, NecessityOverSmallOrders) {
  // Order 5 has only a few tables up to row signs.
  for (auto [m, want] : {std::pair{5, 2}, std::pair{7, 5}}) {
    std::set<std::vector<Pair>> seen;
    int tables = 0;
    int lifts = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      auto t = random_tt(m, {seed});
      if (!seen.insert(t->pairs()).second) continue;
      ++tables;
      for (const auto& lift : oracle::strong_lifts(m, t->pairs())) {
        Pairing s(3 * m, lift);
        ++lifts;
        for (ScenarioKind kind : {ScenarioKind::Mod, ScenarioKind::Carry}) {
          Scenario sc(kind, m);
          RoundTrip rt = round_trip(s, sc);
          ASSERT_TRUE(check_congruous(rt.table, rt.solution, sc));
          ASSERT_EQ(recover_starter(rt.table, rt.solution, sc).pairs(), rt.aligned.pairs());
        }
      }
    }
    EXPECT_GT(tables, want) << m;
    EXPECT_GT(lifts, 0) << m;
  }
}
