#include "rtm/engine.hpp"

#include "oracles.hpp"
#include "reference_tables.hpp"

#include <gtest/gtest.h>

#include <random>

namespace rtm {
namespace {

Ratio frac(long long n, long long d) { return Ratio(BigInt(n), BigInt(d)); }

LedgerState three_members() {
  return LedgerState(RtmParams{}, {{"P1", Amount(1000)}, {"P2", Amount(2000)}, {"P3", Amount(3000)}}, Amount(200));
}

std::vector<std::string> balances_of(const LedgerState& s) {
  std::vector<std::string> out;
  for (const auto& [id, b] : s.balances()) out.push_back(b.str());
  return out;
}

TEST(ComputeUdTest, Examples) {
  EXPECT_EQ(compute_ud(Amount(6000), 3, frac(1, 10)), Amount(200));
  EXPECT_EQ(compute_ud(Amount(7260), 3, frac(1, 10)), Amount(242));
  EXPECT_EQ(compute_ud(Amount(0), 7, frac(1, 10)), Amount(0));
  try {
    compute_ud(Amount(10), 0, frac(1, 10));
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::population_zero);
  }
}

TEST(LedgerStateTest, DefaultUdIsMassProportional) {
  const LedgerState s(RtmParams{}, {{"a", Amount(600)}, {"b", Amount(0)}});
  EXPECT_EQ(s.ud(), Amount(30));
  EXPECT_EQ(s.mass(), Amount(600));
  EXPECT_EQ(s.mass_per_capita(), Amount(300));
}

TEST(LedgerStateTest, RejectsInvalidParameters) {
  RtmParams zero_c;
  zero_c.c = Ratio(0);
  EXPECT_THROW(LedgerState(zero_c, {{"a", Amount(1)}}), ModelError);
  EXPECT_THROW(LedgerState(RtmParams{}, {{"a", Amount(-1)}}), ModelError);
  EXPECT_THROW(LedgerState(RtmParams{}, {}), ModelError);  // c*M/N with N = 0
}

TEST(AdvancePeriodTest, Examples) {
  const auto s2 = advance_period(three_members());
  EXPECT_EQ(balances_of(s2), (std::vector<std::string>{"1200", "2200", "3200"}));
  EXPECT_EQ(s2.mass(), Amount(6600));
  EXPECT_EQ(s2.ud(), Amount(220));
  EXPECT_EQ(s2.t(), 2U);

  const auto s3 = advance_period(s2);
  EXPECT_EQ(balances_of(s3), (std::vector<std::string>{"1420", "2420", "3420"}));
  EXPECT_EQ(s3.mass(), Amount(7260));
  EXPECT_EQ(s3.ud(), Amount(242));

  const LedgerState single(RtmParams{}, {{"x", Amount(0)}}, frac(7, 3));
  const auto next = advance_period(single);
  EXPECT_EQ(next.balance("x"), frac(7, 3));
  EXPECT_EQ(next.mass(), frac(7, 3));
}

TEST(AdvancePeriodTest, RulesCoincideAtFixedPopulation) {
  RtmParams geo;
  geo.ud_rule = UdRule::geometric;
  LedgerState a = three_members();
  LedgerState b(geo, a.balances(), a.ud());
  for (int i = 0; i < 15; ++i) {
    a = advance_period(a);
    b = advance_period(b);
    ASSERT_EQ(a.ud(), b.ud());
    ASSERT_EQ(a.balances(), b.balances());
  }
}

TEST(AdvancePeriodTest, RulesDivergeUnderPopulationChange) {
  RtmParams geo;
  geo.ud_rule = UdRule::geometric;
  const auto mass = adjust_membership(three_members(), {"P4"}, {});
  const auto geometric = adjust_membership(LedgerState(geo, three_members().balances(), Amount(200)), {"P4"}, {});
  EXPECT_EQ(mass.ud(), Amount(150));
  EXPECT_EQ(geometric.ud(), Amount(200));
  EXPECT_EQ(advance_period(geometric).ud(), Amount(220));
}

TEST(AdvancePeriodTest, EmptyLedgerIsPopulationZero) {
  const auto empty = adjust_membership(LedgerState(RtmParams{}, {{"a", Amount(1)}}), {}, {"a"});
  try {
    advance_period(empty);
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::population_zero);
  }
}

TEST(TransferTest, Examples) {
  const auto s = transfer(three_members(), "P3", "P1", Amount(500));
  EXPECT_EQ(balances_of(s), (std::vector<std::string>{"1500", "2000", "2500"}));
  EXPECT_EQ(s.mass(), Amount(6000));

  const auto same = transfer(three_members(), "P1", "P2", Amount(0));
  EXPECT_EQ(same.balances(), three_members().balances());

  try {
    transfer(three_members(), "P1", "P2", Amount(1001));
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::insufficient_balance);
  }
  try {
    transfer(three_members(), "P1", "nobody", Amount(1));
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unknown_member);
  }
  EXPECT_THROW(transfer(three_members(), "P1", "P2", Amount(-1)), ModelError);
}

TEST(AdjustMembershipTest, Examples) {
  const auto s2 = advance_period(three_members());  // M = 6600
  const auto joined = adjust_membership(s2, {"P4"}, {});
  EXPECT_EQ(joined.population(), 4U);
  EXPECT_EQ(joined.balance("P4"), Amount(0));
  EXPECT_EQ(joined.ud(), Amount(165));
  EXPECT_EQ(joined.ud(), frac(1, 10) * Amount(6600) / Amount(4));

  EXPECT_EQ(adjust_membership(s2, {}, {}).balances(), s2.balances());

  const auto left = adjust_membership(s2, {}, {"P2"});
  EXPECT_EQ(left.mass(), s2.mass() - Amount(2200));
  EXPECT_FALSE(left.contains("P2"));

  try {
    adjust_membership(s2, {"P1"}, {});
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::duplicate_join);
  }
  try {
    adjust_membership(s2, {}, {"ghost"});
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unknown_leaver);
  }
}

TEST(ToRelativeTest, Examples) {
  auto rel = to_relative(three_members());
  EXPECT_EQ(rel.at("P1"), Ratio(5));
  EXPECT_EQ(rel.at("P2"), Ratio(10));
  EXPECT_EQ(rel.at("P3"), Ratio(15));

  rel = to_relative(advance_period(three_members()));
  EXPECT_EQ(rel.at("P1"), frac(60, 11));
  EXPECT_EQ(rel.at("P3"), frac(160, 11));
  EXPECT_EQ(round_display(rel.at("P1"), 2), "5.45");
  EXPECT_EQ(round_display(rel.at("P2"), 2), "10.00");
  EXPECT_EQ(round_display(rel.at("P3"), 2), "14.55");

  const LedgerState ones(RtmParams{}, {{"a", Amount(7)}, {"b", Amount(7)}}, Amount(7));
  for (const auto& [id, x] : to_relative(ones)) EXPECT_EQ(x, Ratio(1));

  const LedgerState broke(RtmParams{}, {{"a", Amount(0)}});
  try {
    to_relative(broke);
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::zero_ud);
  }
}

TEST(RelativeStepTest, Examples) {
  const Rate c = frac(1, 10);
  EXPECT_EQ(relative_step(Ratio(15), c), frac(160, 11));
  EXPECT_EQ(round_display(relative_step(Ratio(15), c), 2), "14.55");
  EXPECT_EQ(relative_step(Ratio(10), c), Ratio(10));
  EXPECT_EQ(relative_step(Ratio(4), frac(1, 4)), Ratio(4));

  Ratio x{5};
  for (int i = 0; i < 19; ++i) x = relative_step(x, c);
  EXPECT_EQ(x, Ratio(10) - Ratio(5) / oracle::power_by_repeated_multiplication(frac(11, 10), 19));
  EXPECT_EQ(round_display(x, 2), "9.18");
}

TEST(FixedPointRelativeTest, Examples) {
  EXPECT_EQ(fixed_point_relative(frac(1, 10)), Ratio(10));
  EXPECT_EQ(fixed_point_relative(frac(1, 4)), Ratio(4));
  EXPECT_EQ(fixed_point_relative(Ratio(1)), Ratio(1));
  EXPECT_THROW(fixed_point_relative(Ratio(0)), ModelError);
}

TEST(DeviationAtTest, Examples) {
  const Rate c = frac(1, 10);
  const Ratio d19 = deviation_at(Ratio(15), c, 19);
  EXPECT_EQ(round_display(Ratio(10) + d19, 2), "10.82");
  EXPECT_EQ(round_display(d19, 4), "0.8175");
  EXPECT_EQ(deviation_at(Ratio(10), c, 37), Ratio(0));
  EXPECT_EQ(deviation_at(Ratio(5), c, 1), frac(50, 11));
  EXPECT_EQ(deviation_at(Ratio(5), c, 1), abs(relative_step(Ratio(5), c) - Ratio(10)));
}

TEST(GiniTest, Examples) {
  const std::vector<Amount> equal{Amount(4), Amount(4), Amount(4)};
  EXPECT_EQ(gini(equal), Ratio(0));
  const std::vector<Amount> one_rich{Amount(0), Amount(0), Amount(9)};
  EXPECT_EQ(gini(one_rich), frac(2, 3));
  EXPECT_EQ(oracle::gini_double_sum(one_rich), frac(2, 3));
  const std::vector<Amount> tiers{Amount(1000), Amount(2000), Amount(3000)};
  EXPECT_EQ(gini(tiers), frac(2, 9));
  const std::vector<Amount> zeros{Amount(0), Amount(0)};
  EXPECT_EQ(gini(zeros), Ratio(0));
  try {
    gini(std::span<const Amount>{});
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::empty_population);
  }
}

TEST(GiniProperty, MatchesDoubleSum) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    std::vector<Amount> b(1 + rng() % 12);
    for (auto& x : b) x = oracle::random_ratio(rng, 5000, 7);
    ASSERT_EQ(gini(b), oracle::gini_double_sum(b));
  }
}

TEST(SimulateTest, ReproducesReferenceTables) {
  const auto result = simulate(three_members(), 20);
  ASSERT_EQ(result.rows.size(), 20U);
  for (std::size_t i = 0; i < 20; ++i) {
    const auto& row = result.rows[i];
    EXPECT_EQ(row.t, i + 1);
    const auto& q = testdata::kQuotativeTable[i];
    EXPECT_EQ(round_display(row.balances.at("P1"), 0), q[0]) << "period " << i + 1;
    EXPECT_EQ(round_display(row.balances.at("P2"), 0), q[1]) << "period " << i + 1;
    EXPECT_EQ(round_display(row.balances.at("P3"), 0), q[2]) << "period " << i + 1;
    EXPECT_EQ(round_display(row.mass, 0), q[3]) << "period " << i + 1;
    EXPECT_EQ(round_display(row.mass_per_capita, 0), q[4]) << "period " << i + 1;
    EXPECT_EQ(round_display(row.ud, 0), q[5]) << "period " << i + 1;
    const auto& r = testdata::kRelativeTable[i];
    EXPECT_EQ(round_display(row.relative_balances.at("P1"), 2), r[0]) << "period " << i + 1;
    EXPECT_EQ(round_display(row.relative_balances.at("P2"), 2), r[1]) << "period " << i + 1;
    EXPECT_EQ(round_display(row.relative_balances.at("P3"), 2), r[2]) << "period " << i + 1;
    EXPECT_EQ(round_display(row.relative_mass, 2), r[3]) << "period " << i + 1;
  }
  EXPECT_EQ(result.rows[4].balances.at("P1"), frac(9641, 5));
}

TEST(SimulateTest, HorizonOneIsInitialState) {
  const auto result = simulate(three_members(), 1);
  ASSERT_EQ(result.rows.size(), 1U);
  EXPECT_EQ(result.rows[0].balances, three_members().balances());
  EXPECT_EQ(result.rows[0].ud, Amount(200));
  EXPECT_EQ(result.rows[0].gini, frac(2, 9));
}

TEST(SimulateTest, TransferLeavesMassColumnUnchanged) {
  const std::vector<ScheduledTransfer> moves{{1, {"P3", "P1", Amount(3000)}}};
  const auto plain = simulate(three_members(), 20);
  const auto moved = simulate(three_members(), 20, moves);
  for (std::size_t i = 0; i < 20; ++i) {
    EXPECT_EQ(moved.rows[i].mass, plain.rows[i].mass);
    EXPECT_EQ(moved.rows[i].ud, plain.rows[i].ud);
  }
  EXPECT_EQ(moved.rows[1].balances.at("P3"), Amount(200));
  EXPECT_EQ(moved.rows[1].balances.at("P1"), Amount(4200));
}

TEST(SimulateTest, RejectsSchedulesOutsideHorizon) {
  const std::vector<ScheduledTransfer> late{{21, {"P3", "P1", Amount(1)}}};
  EXPECT_THROW(simulate(three_members(), 20, late), ModelError);
  EXPECT_THROW(simulate(three_members(), 0), ModelError);
}

TEST(SimulateProperty, QuotientIdentityAndOrderPreservation) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    Balances b;
    const auto n = 2 + rng() % 6;
    for (std::size_t i = 0; i < n; ++i) b.emplace("m" + std::to_string(i), oracle::random_ratio(rng, 10'000, 3));
    RtmParams p;
    p.c = frac(1 + static_cast<long long>(rng() % 30), 100);
    if (total_mass(b).is_zero()) continue;
    const auto result = simulate(LedgerState(p, b), 25);
    for (const auto& row : result.rows) {
      for (const auto& [id, x] : row.relative_balances) ASSERT_EQ(x * row.ud, row.balances.at(id));
      for (const auto& [i, bi] : row.balances)
        for (const auto& [j, bj] : row.balances)
          if (b.at(i) < b.at(j)) ASSERT_LT(bi, bj);
    }
  }
}

}  // namespace
}  // namespace rtm
