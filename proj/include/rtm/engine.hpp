#pragma once

// Universal Dividend ledger: issuance, dual quotative/relative accounting,
// transfers, population change and inequality.

#include "rtm/error.hpp"
#include "rtm/money.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rtm {

using PeriodIndex = std::uint64_t;

struct MemberId {
  std::string value;

  MemberId() = default;
  MemberId(std::string v) : value(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  MemberId(const char* v) : value(v) {}              // NOLINT(google-explicit-constructor)

  friend auto operator<=>(const MemberId&, const MemberId&) = default;
  friend bool operator==(const MemberId&, const MemberId&) = default;
};

enum class UdRule { mass_proportional, geometric };

struct RtmParams {
  Rate c{Ratio(1, 10)};
  UdRule ud_rule = UdRule::mass_proportional;
  std::uint32_t periods_per_year = 1;
};

inline void validate(const RtmParams& p) {
  if (p.c.sign() <= 0) throw ModelError(ErrorKind::invalid_argument, "growth rate c must be > 0");
  if (p.periods_per_year < 1)
    throw ModelError(ErrorKind::invalid_argument, "periods_per_year must be >= 1");
}

using Balances = std::map<MemberId, Amount>;

/// c * M / N.
inline Amount compute_ud(const Amount& mass, std::size_t population, const Rate& c) {
  if (population == 0) throw ModelError(ErrorKind::population_zero, "cannot compute UD over zero members");
  return c * mass / Ratio(static_cast<long long>(population));
}

inline Amount total_mass(const Balances& balances) {
  Amount m;
  for (const auto& [id, b] : balances) m += b;
  return m;
}

/// Snapshot of the monetary zone at the start of period t. Immutable; every
/// operation below returns a new state.
///
/// Under mass_proportional the dividend always satisfies ud = c * M / N
/// whenever N > 0. M is never stored, it is the sum of balances.
class LedgerState {
 public:
  /// If initial_ud is omitted it is c * M / N.
  LedgerState(RtmParams params, Balances balances, std::optional<Amount> initial_ud = std::nullopt,
              PeriodIndex start = 1)
      : t_(start), balances_(std::move(balances)), params_(params) {
    validate(params_);
    for (const auto& [id, b] : balances_)
      if (b.sign() < 0) throw ModelError(ErrorKind::invalid_argument, "negative balance for " + id.value);
    if (initial_ud) {
      if (initial_ud->sign() < 0) throw ModelError(ErrorKind::invalid_argument, "negative initial UD");
      ud_ = *initial_ud;
    } else {
      ud_ = compute_ud(mass(), population(), params_.c);
    }
  }

  PeriodIndex t() const noexcept { return t_; }
  const Balances& balances() const noexcept { return balances_; }
  const Amount& ud() const noexcept { return ud_; }
  const RtmParams& params() const noexcept { return params_; }
  std::size_t population() const noexcept { return balances_.size(); }
  Amount mass() const { return total_mass(balances_); }
  bool contains(const MemberId& id) const { return balances_.count(id) != 0; }

  const Amount& balance(const MemberId& id) const {
    auto it = balances_.find(id);
    if (it == balances_.end()) throw ModelError(ErrorKind::unknown_member, id.value);
    return it->second;
  }

  /// M / N; population-zero when empty.
  Amount mass_per_capita() const {
    if (balances_.empty()) throw ModelError(ErrorKind::population_zero, "empty ledger");
    return mass() / Ratio(static_cast<long long>(population()));
  }

  friend LedgerState advance_period(const LedgerState& state);
  friend LedgerState adjust_membership(const LedgerState& state, const std::set<MemberId>& joins,
                                       const std::set<MemberId>& leaves);
  friend struct TransferBatch;

 private:
  PeriodIndex t_;
  Balances balances_;
  Amount ud_;
  RtmParams params_;
};

/// Credits ud(t) to every member, increments t and recomputes the dividend
/// according to the configured rule.
inline LedgerState advance_period(const LedgerState& state) {
  if (state.population() == 0)
    throw ModelError(ErrorKind::population_zero, "no members to receive the UD");
  LedgerState next = state;
  for (auto& [id, b] : next.balances_) b += state.ud_;
  next.t_ = state.t_ + 1;
  switch (state.params_.ud_rule) {
    case UdRule::mass_proportional:
      next.ud_ = compute_ud(next.mass(), next.population(), next.params_.c);
      break;
    case UdRule::geometric:
      next.ud_ = state.ud_ * (Ratio(1) + state.params_.c);
      break;
  }
  return next;
}

struct Transfer {
  MemberId from;
  MemberId to;
  Amount amount;
};

// Applies transfers in order to one copy of the state.
struct TransferBatch {
  static LedgerState apply(const LedgerState& state, std::span<const Transfer> transfers) {
    LedgerState next = state;
    for (const auto& tr : transfers) {
      if (tr.amount.sign() < 0) throw ModelError(ErrorKind::invalid_argument, "negative transfer amount");
      auto from = next.balances_.find(tr.from);
      if (from == next.balances_.end()) throw ModelError(ErrorKind::unknown_member, tr.from.value);
      auto to = next.balances_.find(tr.to);
      if (to == next.balances_.end()) throw ModelError(ErrorKind::unknown_member, tr.to.value);
      if (from->second < tr.amount)
        throw ModelError(ErrorKind::insufficient_balance,
                         tr.from.value + " holds " + from->second.str() + ", needs " + tr.amount.str());
      from->second -= tr.amount;
      to->second += tr.amount;
    }
    return next;
  }
};

inline LedgerState transfer(const LedgerState& state, const MemberId& from, const MemberId& to,
                            const Amount& amount) {
  const Transfer tr{from, to, amount};
  return TransferBatch::apply(state, std::span<const Transfer>(&tr, 1));
}

inline LedgerState apply_transfers(const LedgerState& state, std::span<const Transfer> transfers) {
  return TransferBatch::apply(state, transfers);
}

/// Joiners enter at balance 0; leavers take their balance out of the zone.
/// Under mass_proportional the dividend is recomputed over the new N at once,
/// so the next distribution already uses it.
inline LedgerState adjust_membership(const LedgerState& state, const std::set<MemberId>& joins,
                                     const std::set<MemberId>& leaves) {
  for (const auto& id : leaves)
    if (!state.contains(id)) throw ModelError(ErrorKind::unknown_leaver, id.value);
  for (const auto& id : joins)
    if (state.contains(id)) throw ModelError(ErrorKind::duplicate_join, id.value);
  if (joins.empty() && leaves.empty()) return state;

  LedgerState next = state;
  for (const auto& id : leaves) next.balances_.erase(id);
  for (const auto& id : joins) next.balances_.emplace(id, Amount{});
  if (next.params_.ud_rule == UdRule::mass_proportional && next.population() > 0)
    next.ud_ = compute_ud(next.mass(), next.population(), next.params_.c);
  return next;
}

/// Balances in units of the current dividend.
inline std::map<MemberId, Ratio> to_relative(const LedgerState& state) {
  if (state.ud().sign() <= 0) throw ModelError(ErrorKind::zero_ud, "relative view needs ud > 0");
  std::map<MemberId, Ratio> out;
  for (const auto& [id, b] : state.balances()) out.emplace(id, b / state.ud());
  return out;
}

/// One period of the relative-balance recurrence without exchanges.
inline Ratio relative_step(const Ratio& x, const Rate& c) { return (x + Ratio(1)) / (Ratio(1) + c); }

inline Ratio fixed_point_relative(const Rate& c) {
  if (c.sign() <= 0) throw ModelError(ErrorKind::invalid_argument, "c must be > 0");
  return Ratio(1) / c;
}

/// |x0 - 1/c| / (1+c)^t
inline Ratio deviation_at(const Ratio& x0_relative, const Rate& c, std::uint64_t t) {
  return abs(x0_relative - fixed_point_relative(c)) / pow_ratio(Ratio(1) + c, t);
}

/// Sum_ij |b_i - b_j| / (2 n^2 mu); 0 when every balance is zero.
inline Ratio gini(std::span<const Amount> balances) {
  if (balances.empty()) throw ModelError(ErrorKind::empty_population, "gini of no balances");
  std::vector<Amount> sorted(balances.begin(), balances.end());
  Amount sum;
  for (const auto& b : sorted) {
    if (b.sign() < 0) throw ModelError(ErrorKind::invalid_argument, "gini needs non-negative balances");
    sum += b;
  }
  if (sum.is_zero()) return Ratio{};
  std::sort(sorted.begin(), sorted.end());
  // With ascending order, sum_ij |b_i - b_j| = 2 * sum_i (2i - n + 1) b_i.
  const auto n = static_cast<long long>(sorted.size());
  Ratio weighted;
  for (long long i = 0; i < n; ++i) weighted += Ratio(2 * i - n + 1) * sorted[static_cast<std::size_t>(i)];
  // 2 * weighted / (2 n^2 * sum/n) = weighted / (n * sum)
  return weighted / (Ratio(n) * sum);
}

inline Ratio gini(const Balances& balances) {
  std::vector<Amount> values;
  values.reserve(balances.size());
  for (const auto& [id, b] : balances) values.push_back(b);
  return gini(std::span<const Amount>(values));
}

// ---------------------------------------------------------------------------
// Rollout

struct ScheduledTransfer {
  PeriodIndex period = 0;
  Transfer transfer;
};

struct MembershipChange {
  PeriodIndex period = 0;
  std::set<MemberId> joins;
  std::set<MemberId> leaves;
};

struct PeriodRow {
  PeriodIndex t = 0;
  Balances balances;
  Amount mass;
  Amount mass_per_capita;
  Amount ud;
  std::map<MemberId, Ratio> relative_balances;
  Ratio relative_mass;
  Ratio gini;
};

struct SimulationResult {
  std::vector<PeriodRow> rows;
  LedgerState final_state;
};

inline PeriodRow snapshot(const LedgerState& state) {
  PeriodRow row;
  row.t = state.t();
  row.balances = state.balances();
  row.mass = state.mass();
  row.mass_per_capita = state.mass_per_capita();
  row.ud = state.ud();
  row.relative_balances = to_relative(state);
  row.relative_mass = row.mass / row.ud;
  row.gini = gini(row.balances);
  return row;
}

/// Each period p records the period-start row, then applies membership
/// changes and transfers scheduled for p, then distributes the UD.
/// Schedules must reference periods in [start, start + horizon).
inline SimulationResult simulate(const LedgerState& initial, std::uint64_t horizon,
                                 std::span<const ScheduledTransfer> transfers = {},
                                 std::span<const MembershipChange> membership_changes = {}) {
  if (horizon == 0) throw ModelError(ErrorKind::invalid_argument, "horizon must be >= 1");
  const PeriodIndex first = initial.t();
  const PeriodIndex last = first + horizon - 1;
  auto in_range = [&](PeriodIndex p) { return p >= first && p <= last; };
  for (const auto& s : transfers)
    if (!in_range(s.period))
      throw ModelError(ErrorKind::invalid_argument, "transfer scheduled outside horizon: " + std::to_string(s.period));
  for (const auto& m : membership_changes)
    if (!in_range(m.period))
      throw ModelError(ErrorKind::invalid_argument,
                       "membership change scheduled outside horizon: " + std::to_string(m.period));

  SimulationResult result{{}, initial};
  result.rows.reserve(horizon);
  LedgerState state = initial;
  for (std::uint64_t step = 0; step < horizon; ++step) {
    const PeriodIndex p = state.t();
    result.rows.push_back(snapshot(state));
    for (const auto& m : membership_changes)
      if (m.period == p) state = adjust_membership(state, m.joins, m.leaves);
    std::vector<Transfer> due;
    for (const auto& s : transfers)
      if (s.period == p) due.push_back(s.transfer);
    if (!due.empty()) state = apply_transfers(state, due);
    state = advance_period(state);
  }
  result.final_state = state;
  return result;
}

}  // namespace rtm
