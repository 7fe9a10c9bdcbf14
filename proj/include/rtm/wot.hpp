#pragma once

// Web of trust: identities, timed certifications and the membership rule that
// decides who receives the dividend.

#include "rtm/engine.hpp"
#include "rtm/error.hpp"
#include "rtm/money.hpp"

#include <cstdint>
#include <deque>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rtm {

using IdentityId = MemberId;

struct Certification {
  IdentityId issuer;
  IdentityId subject;
  PeriodIndex issued_at = 0;
  std::uint64_t validity = 1;

  bool active_at(PeriodIndex t) const { return issued_at <= t && t < issued_at + validity; }
};

/// A candidate must be reachable within max_distance certification hops from
/// at least `coverage` of the current members.
struct DistanceRule {
  std::uint32_t max_distance = 5;
  Ratio coverage{Ratio(4, 5)};
};

struct WotParams {
  std::uint32_t min_certs = 5;
  std::uint64_t cert_validity = 24;  // two years of monthly periods
  std::uint32_t max_certs_per_issuer = 100;
  std::optional<DistanceRule> distance_rule;
};

inline void validate(const WotParams& p) {
  if (p.min_certs < 1) throw ModelError(ErrorKind::invalid_argument, "min_certs must be >= 1");
  if (p.cert_validity < 1) throw ModelError(ErrorKind::invalid_argument, "cert_validity must be >= 1");
  if (p.max_certs_per_issuer < 1)
    throw ModelError(ErrorKind::invalid_argument, "max_certs_per_issuer must be >= 1");
  if (p.distance_rule) {
    const auto& x = p.distance_rule->coverage;
    if (x.sign() <= 0 || x > Ratio(1))
      throw ModelError(ErrorKind::invalid_argument, "distance coverage must lie in (0, 1]");
  }
}

class WotGraph {
 public:
  WotGraph() = default;
  explicit WotGraph(const std::set<IdentityId>& seeds) : identities_(seeds), seeds_(seeds) {}

  const std::set<IdentityId>& identities() const noexcept { return identities_; }
  const std::set<IdentityId>& seed_members() const noexcept { return seeds_; }
  const std::vector<Certification>& certifications() const noexcept { return certs_; }
  bool contains(const IdentityId& id) const { return identities_.count(id) != 0; }

  /// Registers `id`; when `seed` is set it is a member from the outset.
  WotGraph with_identity(const IdentityId& id, bool seed = false) const {
    if (contains(id)) throw ModelError(ErrorKind::duplicate_identity, id.value);
    WotGraph g = *this;
    g.identities_.insert(id);
    if (seed) g.seeds_.insert(id);
    return g;
  }

  /// Appends certifications checking only graph integrity (endpoints exist,
  /// no self-edge). Membership and quota rules are enforced by
  /// issue_certification.
  WotGraph with_certifications(std::vector<Certification> certs) const {
    for (const auto& cert : certs) {
      if (!contains(cert.issuer)) throw ModelError(ErrorKind::unknown_identity, cert.issuer.value);
      if (!contains(cert.subject)) throw ModelError(ErrorKind::unknown_identity, cert.subject.value);
      if (cert.issuer == cert.subject) throw ModelError(ErrorKind::self_certification, cert.issuer.value);
      if (cert.validity < 1) throw ModelError(ErrorKind::invalid_argument, "validity must be >= 1");
    }
    WotGraph g = *this;
    g.certs_.insert(g.certs_.end(), std::make_move_iterator(certs.begin()), std::make_move_iterator(certs.end()));
    return g;
  }

  WotGraph with_certification(Certification cert) const {
    return with_certifications(std::vector<Certification>{std::move(cert)});
  }

 private:
  std::set<IdentityId> identities_;
  std::set<IdentityId> seeds_;
  std::vector<Certification> certs_;
};

inline WotGraph register_identity(const WotGraph& g, const IdentityId& id) { return g.with_identity(id); }

namespace detail {

// Number of current members from which `target` is reachable within
// `max_distance` hops over active member-issued edges.
inline std::size_t members_within_reach(const std::map<IdentityId, std::vector<IdentityId>>& adjacency,
                                        const std::set<IdentityId>& members, const IdentityId& target,
                                        std::uint32_t max_distance) {
  std::size_t reached = 0;
  for (const auto& origin : members) {
    std::map<IdentityId, std::uint32_t> dist{{origin, 0}};
    std::deque<IdentityId> queue{origin};
    bool found = false;
    while (!queue.empty() && !found) {
      IdentityId node = queue.front();
      queue.pop_front();
      const std::uint32_t d = dist[node];
      if (d == max_distance) continue;
      auto it = adjacency.find(node);
      if (it == adjacency.end()) continue;
      for (const auto& next : it->second) {
        if (dist.count(next) != 0) continue;
        if (next == target) {
          found = true;
          break;
        }
        dist.emplace(next, d + 1);
        queue.push_back(next);
      }
    }
    if (found) ++reached;
  }
  return reached;
}

}  // namespace detail

/// Least fixed point of the admission rule, starting from the seed members.
/// Each round admits, all at once, every identity holding at least
/// `min_certs` active certifications from distinct current members (and
/// meeting the distance rule when configured). Rounds repeat until nothing
/// changes.
inline std::set<IdentityId> evaluate_membership(const WotGraph& g, const WotParams& params, PeriodIndex t) {
  validate(params);
  std::set<IdentityId> members = g.seed_members();
  std::vector<const Certification*> active;
  for (const auto& c : g.certifications())
    if (c.active_at(t)) active.push_back(&c);

  for (;;) {
    std::map<IdentityId, std::set<IdentityId>> issuers_of;
    std::map<IdentityId, std::vector<IdentityId>> adjacency;
    for (const auto* c : active) {
      if (members.count(c->issuer) == 0) continue;
      issuers_of[c->subject].insert(c->issuer);
      adjacency[c->issuer].push_back(c->subject);
    }
    std::vector<IdentityId> admitted;
    for (const auto& [subject, issuers] : issuers_of) {
      if (members.count(subject) != 0) continue;
      if (issuers.size() < params.min_certs) continue;
      if (params.distance_rule) {
        const auto& rule = *params.distance_rule;
        const auto reached = detail::members_within_reach(adjacency, members, subject, rule.max_distance);
        if (Ratio(static_cast<long long>(reached)) < rule.coverage * Ratio(static_cast<long long>(members.size())))
          continue;
      }
      admitted.push_back(subject);
    }
    if (admitted.empty()) return members;
    members.insert(admitted.begin(), admitted.end());
  }
}

inline bool is_member(const WotGraph& g, const WotParams& params, const IdentityId& id, PeriodIndex t) {
  return evaluate_membership(g, params, t).count(id) != 0;
}

/// A current member certifies `subject` at period t with the configured validity.
inline WotGraph issue_certification(const WotGraph& g, const WotParams& params, const IdentityId& issuer,
                                    const IdentityId& subject, PeriodIndex t) {
  if (!g.contains(issuer)) throw ModelError(ErrorKind::unknown_identity, issuer.value);
  if (!g.contains(subject)) throw ModelError(ErrorKind::unknown_identity, subject.value);
  if (issuer == subject) throw ModelError(ErrorKind::self_certification, issuer.value);
  if (!is_member(g, params, issuer, t)) throw ModelError(ErrorKind::non_member_issuer, issuer.value);
  std::uint32_t issued_active = 0;
  for (const auto& c : g.certifications()) {
    if (c.issuer != issuer || !c.active_at(t)) continue;
    if (c.subject == subject)
      throw ModelError(ErrorKind::duplicate_active_cert, issuer.value + " -> " + subject.value);
    ++issued_active;
  }
  if (issued_active >= params.max_certs_per_issuer) throw ModelError(ErrorKind::quota_exceeded, issuer.value);
  return g.with_certification({issuer, subject, t, params.cert_validity});
}

/// Membership at t as ledger member ids.
inline std::set<MemberId> active_members(const WotGraph& g, const WotParams& params, PeriodIndex t) {
  return evaluate_membership(g, params, t);
}

/// Joins and leaves that bring the ledger in line with a membership set.
/// Distributed dividends are never clawed back: leavers simply stop receiving.
inline LedgerState sync_membership(const LedgerState& state, const std::set<MemberId>& members) {
  std::set<MemberId> joins;
  std::set<MemberId> leaves;
  for (const auto& id : members)
    if (!state.contains(id)) joins.insert(id);
  for (const auto& [id, b] : state.balances())
    if (members.count(id) == 0) leaves.insert(id);
  return adjust_membership(state, joins, leaves);
}

/// Colluding members create `fake_count` fresh identities, each certified by
/// every colluder at t, and all fakes cross-certify one another. Returns how
/// many fakes the membership rule admits at t.
inline std::size_t sybil_scenario(const WotGraph& g, const WotParams& params,
                                  const std::set<IdentityId>& colluders, std::size_t fake_count, PeriodIndex t) {
  const auto members = evaluate_membership(g, params, t);
  for (const auto& id : colluders)
    if (members.count(id) == 0) throw ModelError(ErrorKind::non_member_issuer, "colluder " + id.value);
  if (fake_count == 0) return 0;

  std::string prefix = "sybil#";
  auto clashes = [&] {
    for (const auto& id : g.identities())
      if (id.value.rfind(prefix, 0) == 0) return true;
    return false;
  };
  while (clashes()) prefix.insert(0, "~");

  WotGraph attacked = g;
  std::vector<IdentityId> fakes;
  fakes.reserve(fake_count);
  for (std::size_t i = 0; i < fake_count; ++i) {
    fakes.emplace_back(prefix + std::to_string(i));
    attacked = attacked.with_identity(fakes.back());
  }
  std::vector<Certification> certs;
  for (const auto& fake : fakes) {
    for (const auto& colluder : colluders) certs.push_back({colluder, fake, t, params.cert_validity});
    for (const auto& other : fakes)
      if (other != fake) certs.push_back({other, fake, t, params.cert_validity});
  }
  attacked = attacked.with_certifications(std::move(certs));
  const auto admitted = evaluate_membership(attacked, params, t);
  std::size_t count = 0;
  for (const auto& fake : fakes) count += admitted.count(fake);
  return count;
}

}  // namespace rtm
