#include <gtest/gtest.h>

#include "oracles.hpp"
#include "golden.hpp"
#include "triplication/modular.hpp"

using namespace triplication;

namespace {

Pairing P(int m, const char* text) { return Pairing(m, oracle::pairs(text)); }

}  // namespace

TEST(Arithmetic, ModIsTotal) {
  EXPECT_EQ(mod(-1, 7), 6);
  EXPECT_EQ(mod(14, 7), 0);
  EXPECT_EQ(mod(-15, 7), 6);
}

TEST(Arithmetic, InverseAgreesWithScan) {
  for (int n = 2; n <= 60; ++n) {
    for (int a = 0; a < n; ++a) {
      int found = -1;
      for (int b = 0; b < n; ++b) {
        if ((a * b) % n == 1 % n) found = b;
      }
      auto inv = inverse_mod(a, n);
      if (found < 0) {
        EXPECT_FALSE(inv) << a << " mod " << n;
      } else {
        ASSERT_TRUE(inv) << a << " mod " << n;
        EXPECT_EQ((static_cast<long long>(*inv) * a) % n, 1 % n);
      }
    }
  }
}

TEST(Pairing, RejectsOutOfRangeComponents) {
  EXPECT_THROW(Pairing(7, {{1, 7}}), Error);
  EXPECT_THROW(Pairing(7, {{-1, 2}}), Error);
}

TEST(Pairing, OrderedFlagChecksDifferences) {
  EXPECT_NO_THROW(Pairing(7, oracle::pairs("2,3;4,6;5,1"), true));
  EXPECT_THROW(Pairing(7, oracle::pairs("4,6;2,3;5,1"), true), Error);
}

TEST(Classify, PrintedExamples) {
  EXPECT_EQ(classify(P(7, golden::kT7)).kind, StarterKind::StrongStarter);
  EXPECT_EQ(classify(P(7, "1,6;2,5;3,4")).kind, StarterKind::Starter);
  StarterClass epic = classify(P(7, golden::kEpic7_2));
  EXPECT_EQ(epic.kind, StarterKind::Pseudostarter);
  EXPECT_FALSE(epic.witness.empty());
}

TEST(Classify, NotAnyHasWitness) {
  StarterClass c = classify(P(7, "0,3;4,6;5,1"));
  EXPECT_EQ(c.kind, StarterKind::NotAny);
  EXPECT_FALSE(c.witness.empty());
  EXPECT_THROW(classify(Pairing(7, {})), Error);
}

TEST(Classify, AgreesWithOracleOnAllMatchings) {
  for (int n : {5, 7, 9, 11}) {
    oracle::matchings(n, [&](const std::vector<Pair>& ps) {
      Pairing p(n, ps);
      StarterKind k = classify(p).kind;
      EXPECT_EQ(k == StarterKind::StrongStarter, oracle::is_strong_starter(n, ps));
      EXPECT_EQ(k >= StarterKind::Starter, oracle::is_starter(n, ps));
    });
  }
}

TEST(Sums, Examples) {
  EXPECT_EQ(sums(P(7, golden::kT7)), (std::vector<int>{5, 3, 6}));
  EXPECT_EQ(sums(P(7, "1,6;2,5;3,4")), (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(sums(P(15, golden::kT15)), (std::vector<int>{7, 11, 2, 8, 6, 1, 10}));
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate(P(7, golden::kT7)).pairs(), oracle::pairs("4,5;1,3;6,2"));
  EXPECT_EQ(conjugate(P(7, golden::kEpic7_2)).pairs(), oracle::pairs(golden::kEpic7_2Conjugate));
}

TEST(Conjugate, InvolutionPreservingClass) {
  for (int m : {5, 7, 9, 11}) {
    for (const Pairing& s : enumerate_strong_starters(m)) {
      Pairing c = conjugate(s);
      EXPECT_EQ(conjugate(c), s);
      EXPECT_EQ(classify(c).kind, StarterKind::StrongStarter);
      EXPECT_TRUE(c.ordered());
    }
  }
}

TEST(SpecialPair, Basic) {
  Pairing t = P(7, golden::kT7);
  EXPECT_TRUE(is_special_pair(t, conjugate(t)));
  EXPECT_TRUE(is_special_pair(P(7, golden::kEpic7_2), P(7, golden::kEpic7_2Conjugate)));
  EXPECT_FALSE(is_special_pair(P(7, golden::kEpic7_2), P(7, golden::kEpic7_2)));
}

TEST(Enumerate, SmallOrders) {
  EXPECT_TRUE(enumerate_strong_starters(3).empty());
  // Orders 5 and 9 have none either.
  EXPECT_TRUE(enumerate_strong_starters(5).empty());
  EXPECT_TRUE(enumerate_strong_starters(9).empty());
  for (const Pairing& p : enumerate_strong_starters(11)) EXPECT_TRUE(oracle::is_strong_starter(11, p.pairs()));
  auto seven = enumerate_strong_starters(7);
  Pairing t = canonical_order(P(7, golden::kT7));
  EXPECT_NE(std::find(seven.begin(), seven.end(), t), seven.end());
}

TEST(Enumerate, CountMatchesMatchingOracle) {
  for (int m : {5, 7, 9, 11, 13}) {
    std::set<std::vector<Pair>> expected;
    oracle::matchings(m, [&](const std::vector<Pair>& ps) {
      if (oracle::is_strong_starter(m, ps)) expected.insert(oracle::sorted_unordered(ps));
    });
    auto found = enumerate_strong_starters(m);
    std::set<std::vector<Pair>> got;
    for (const Pairing& p : found) {
      EXPECT_TRUE(p.ordered());
      got.insert(oracle::sorted_unordered(p.pairs()));
    }
    EXPECT_EQ(got.size(), found.size()) << "duplicates at m = " << m;
    EXPECT_EQ(got, expected) << "m = " << m;
  }
}

TEST(Enumerate, GuardAndLimit) {
  try {
    enumerate_strong_starters(17);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderTooLarge);
  }
  EXPECT_EQ(enumerate_strong_starters(11, {3, false}).size(), 3u);
}

TEST(Ordering, CanonicalForms) {
  Pairing t = P(7, "5,1;2,3;4,6");
  EXPECT_EQ(order_by_difference(t).pairs(), oracle::pairs("2,3;4,6;5,1"));
  EXPECT_EQ(canonical_order(P(7, golden::kT62)).pairs(), oracle::pairs("2,3;4,6;5,1"));
  EXPECT_EQ(canonical_unordered(t).pairs(), oracle::pairs("1,5;2,3;4,6"));
}

TEST(Literals, ParseAndFormat) {
  auto ps = parse_pair_list(" 2,3; 4,6 ;5,1 ");
  EXPECT_EQ(ps, oracle::pairs("2,3;4,6;5,1"));
  EXPECT_EQ(format_pairs(ps), "[(2, 3), (4, 6), (5, 1)]");
  EXPECT_EQ(format_pairs(ps, true), "{{2, 3}, {4, 6}, {5, 1}}");
  EXPECT_THROW(parse_pair_list("2,3;4"), Error);
}
