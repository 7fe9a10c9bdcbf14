#include "rtm/wot.hpp"
#include "rtm/wot_io.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

namespace rtm {
namespace {

WotParams params_k(std::uint32_t k, std::uint64_t validity = 10) {
  WotParams p;
  p.min_certs = k;
  p.cert_validity = validity;
  return p;
}

WotGraph seeds_abc() { return WotGraph({"a", "b", "c"}); }

template <typename F>
ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const ModelError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected ModelError";
  return ErrorKind::invalid_argument;
}

TEST(RegisterIdentityTest, Examples) {
  const auto g = register_identity(seeds_abc(), "x");
  EXPECT_TRUE(g.contains("x"));
  EXPECT_FALSE(is_member(g, params_k(3), "x", 0));
  EXPECT_EQ(error_of([&] { register_identity(g, "x"); }), ErrorKind::duplicate_identity);

  auto h = issue_certification(g, params_k(3), "a", "x", 0);
  h = issue_certification(h, params_k(3), "b", "x", 0);
  EXPECT_FALSE(is_member(h, params_k(3), "x", 0));
  EXPECT_EQ(oracle::membership_fixed_point(h, 3, 0).count("x"), 0U);
}

TEST(IssueCertificationTest, ValidityWindow) {
  const auto g = issue_certification(register_identity(seeds_abc(), "x"), params_k(1, 2), "a", "x", 0);
  ASSERT_EQ(g.certifications().size(), 1U);
  const auto& c = g.certifications().front();
  EXPECT_TRUE(c.active_at(0));
  EXPECT_TRUE(c.active_at(1));
  EXPECT_FALSE(c.active_at(2));
  EXPECT_TRUE(is_member(g, params_k(1, 2), "x", 1));
  EXPECT_FALSE(is_member(g, params_k(1, 2), "x", 2));
}

TEST(IssueCertificationTest, Errors) {
  const auto g = register_identity(register_identity(seeds_abc(), "x"), "y");
  const auto p = params_k(2);
  EXPECT_EQ(error_of([&] { issue_certification(g, p, "a", "a", 0); }), ErrorKind::self_certification);
  EXPECT_EQ(error_of([&] { issue_certification(g, p, "x", "y", 0); }), ErrorKind::non_member_issuer);
  EXPECT_EQ(error_of([&] { issue_certification(g, p, "a", "nobody", 0); }), ErrorKind::unknown_identity);

  const auto once = issue_certification(g, p, "a", "x", 0);
  EXPECT_EQ(error_of([&] { issue_certification(once, p, "a", "x", 5); }), ErrorKind::duplicate_active_cert);
  EXPECT_NO_THROW(issue_certification(once, p, "a", "x", 10));  // first one expired

  WotParams tight = p;
  tight.max_certs_per_issuer = 1;
  EXPECT_EQ(error_of([&] { issue_certification(once, tight, "a", "y", 0); }), ErrorKind::quota_exceeded);
  EXPECT_NO_THROW(issue_certification(once, tight, "b", "y", 0));
}

TEST(EvaluateMembershipTest, Examples) {
  auto g = register_identity(seeds_abc(), "x");
  EXPECT_EQ(evaluate_membership(g, params_k(3), 0), (std::set<IdentityId>{"a", "b", "c"}));

  for (const char* s : {"a", "b", "c"}) g = issue_certification(g, params_k(3), s, "x", 0);
  EXPECT_EQ(evaluate_membership(g, params_k(3), 0), (std::set<IdentityId>{"a", "b", "c", "x"}));
  EXPECT_EQ(evaluate_membership(g, params_k(3), 0), oracle::membership_fixed_point(g, 3, 0));

  WotGraph short_lived = register_identity(WotGraph({"a"}), "y").with_certification({"a", "y", 0, 2});
  EXPECT_TRUE(is_member(short_lived, params_k(1), "y", 1));
  EXPECT_FALSE(is_member(short_lived, params_k(1), "y", 3));
}

TEST(EvaluateMembershipTest, ChainsAcrossRounds) {
  // a certifies x; x then certifies y. With k = 1 both join, x in round 1, y in round 2.
  WotGraph g = WotGraph({"a"}).with_identity("x").with_identity("y");
  g = g.with_certifications({{"a", "x", 0, 5}, {"x", "y", 0, 5}});
  EXPECT_EQ(evaluate_membership(g, params_k(1), 0), (std::set<IdentityId>{"a", "x", "y"}));
}

TEST(EvaluateMembershipTest, DistanceRule) {
  // Seeds s0..s3 and s0 certifies x. With k = 1 and a distance rule
  // requiring reach from half the members within 2 hops, x is reachable
  // only from s0 (1 of 4) and stays out.
  WotGraph g({"s0", "s1", "s2", "s3"});
  g = g.with_identity("x").with_certification({"s0", "x", 0, 5});
  WotParams p = params_k(1);
  EXPECT_TRUE(is_member(g, p, "x", 0));
  p.distance_rule = DistanceRule{2, Ratio(BigInt(1), BigInt(2))};
  EXPECT_FALSE(is_member(g, p, "x", 0));
  g = g.with_certification({"s1", "x", 0, 5});
  EXPECT_TRUE(is_member(g, p, "x", 0));  // 2 of 4 members reach x directly
}

TEST(ActiveMembersTest, Examples) {
  EXPECT_EQ(active_members(seeds_abc(), params_k(3), 0), (std::set<MemberId>{"a", "b", "c"}));
  auto g = register_identity(seeds_abc(), "x");
  for (const char* s : {"a", "b", "c"}) g = issue_certification(g, params_k(3, 4), s, "x", 0);
  EXPECT_EQ(active_members(g, params_k(3), 0), (std::set<MemberId>{"a", "b", "c", "x"}));
  EXPECT_EQ(active_members(g, params_k(3), 4), (std::set<MemberId>{"a", "b", "c"}));
}

TEST(ActiveMembersTest, DrivesLedgerMembership) {
  auto g = register_identity(seeds_abc(), "x");
  for (const char* s : {"a", "b", "c"}) g = issue_certification(g, params_k(3, 2), s, "x", 0);
  LedgerState ledger(RtmParams{}, {{"a", Amount(300)}, {"b", Amount(300)}, {"c", Amount(300)}});
  ledger = sync_membership(ledger, active_members(g, params_k(3), 0));
  EXPECT_EQ(ledger.population(), 4U);
  ledger = advance_period(ledger);
  const Amount received = ledger.balance("x");
  EXPECT_GT(received, Amount(0));
  ledger = sync_membership(ledger, active_members(g, params_k(3), 2));
  EXPECT_EQ(ledger.population(), 3U);
  EXPECT_FALSE(ledger.contains("x"));
}

TEST(SybilScenarioTest, Examples) {
  WotGraph g({"s0", "s1", "s2", "s3"});
  const auto p = params_k(3);
  EXPECT_EQ(sybil_scenario(g, p, {"s0", "s1"}, 10, 0), 0U);
  EXPECT_EQ(sybil_scenario(g, p, {"s0", "s1", "s2"}, 10, 0), 10U);
  EXPECT_EQ(sybil_scenario(g, p, {"s0", "s1", "s2"}, 0, 0), 0U);
  EXPECT_EQ(error_of([&] { sybil_scenario(g.with_identity("z"), p, {"z"}, 2, 0); }), ErrorKind::non_member_issuer);
}

TEST(WotProperty, MatchesNaiveFixedPoint) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 3 + rng() % 40;
    const auto g = oracle::random_honest_web(rng, n, 1 + rng() % 5, 1 + rng() % 4);
    const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 4);
    const PeriodIndex t = rng() % 8;
    ASSERT_EQ(evaluate_membership(g, params_k(k), t), oracle::membership_fixed_point(g, k, t));
  }
}

TEST(WotProperty, AddingCertificationNeverRemovesMembers) {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 4 + rng() % 30;
    auto g = oracle::random_honest_web(rng, n, 2, 2);
    const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 3);
    const PeriodIndex t = rng() % 5;
    const auto before = evaluate_membership(g, params_k(k), t);
    std::vector<IdentityId> ids(g.identities().begin(), g.identities().end());
    const auto& a = ids[rng() % ids.size()];
    const auto& b = ids[rng() % ids.size()];
    if (a == b) continue;
    g = g.with_certification({a, b, t, 1 + rng() % 4});
    const auto after = evaluate_membership(g, params_k(k), t);
    for (const auto& m : before) ASSERT_TRUE(after.count(m)) << m.value;
  }
}

TEST(WotProperty, ExpiredSupportDropsMember) {
  WotGraph g({"a", "b"});
  g = g.with_identity("x").with_certifications({{"a", "x", 0, 3}, {"b", "x", 1, 2}});
  EXPECT_TRUE(is_member(g, params_k(2), "x", 2));
  EXPECT_FALSE(is_member(g, params_k(2), "x", 3));
}

TEST(WotIoTest, ReadsAndWritesEdgeList) {
  std::istringstream ids("# comment\nalice *\nbob\n\ncarol *\n");
  std::istringstream edges("issuer,subject,issued_at,validity\nalice,bob,0,24\ncarol,bob,1,24\n");
  const auto identities = read_identities(ids, "ids");
  ASSERT_EQ(identities.size(), 3U);
  EXPECT_TRUE(identities[0].seed);
  EXPECT_FALSE(identities[1].seed);
  const auto g = build_graph(identities, read_edges(edges, "edges"));
  EXPECT_EQ(g.seed_members(), (std::set<IdentityId>{"alice", "carol"}));
  EXPECT_EQ(evaluate_membership(g, params_k(2), 1).count("bob"), 1U);

  std::ostringstream out_edges;
  std::ostringstream out_ids;
  write_edges(out_edges, g);
  write_identities(out_ids, g);
  std::istringstream back_edges(out_edges.str());
  std::istringstream back_ids(out_ids.str());
  const auto g2 = build_graph(read_identities(back_ids, "ids"), read_edges(back_edges, "edges"));
  EXPECT_EQ(g2.identities(), g.identities());
  EXPECT_EQ(g2.seed_members(), g.seed_members());
  EXPECT_EQ(g2.certifications().size(), g.certifications().size());
}

TEST(WotIoTest, ReportsLineOfBadInput) {
  std::istringstream edges("issuer,subject,issued_at,validity\nalice,bob,0,24\nalice,bob,x,24\n");
  try {
    read_edges(edges, "e.csv");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.line(), 3U);
    EXPECT_NE(std::string(e.what()).find("e.csv:3:"), std::string::npos);
  }
  std::istringstream no_header("alice,bob,0,24\n");
  EXPECT_THROW(read_edges(no_header, "e.csv"), InputError);
  std::istringstream zero_validity("issuer,subject,issued_at,validity\na,b,0,0\n");
  EXPECT_THROW(read_edges(zero_validity, "e.csv"), InputError);
  std::istringstream dup_ids("a\na\n");
  EXPECT_THROW(read_identities(dup_ids, "ids"), InputError);
  std::istringstream unknown("issuer,subject,issued_at,validity\na,zz,0,3\n");
  std::istringstream one("a *\n");
  EXPECT_THROW(build_graph(read_identities(one, "ids"), read_edges(unknown, "e")), InputError);
}

}  // namespace
}  // namespace rtm
