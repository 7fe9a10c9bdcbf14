#pragma once

// Seeded agent economy comparing inequality trajectories under dividend
// issuance and under debt-based issuance.

#include "rtm/engine.hpp"
#include "rtm/scenarios.hpp"

#include <cstdint>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace rtm {

enum class Regime { rtm, debt };

/// Documented so runs can be reproduced outside this library.
inline constexpr const char* kAgentGenerator =
    "std::mt19937_64(seed); counterparty of agent i = k + (k >= i) with k = draw mod (n-1)";

struct AgentEconomyConfig {
  std::size_t n_agents = 10;
  Regime regime = Regime::rtm;
  Ratio spend_propensity{0};
  std::uint64_t horizon = 50;
  std::uint64_t seed = 0;
  Rate c{Ratio(1, 10)};
  DebtParams debt;
  /// Defaults to 1000, 2000, ..., 1000 * n.
  std::optional<std::vector<Amount>> initial_balances;
};

struct AgentRow {
  PeriodIndex t = 0;
  Ratio gini;
  Amount mass;
};

inline std::string agent_id(std::size_t i, std::size_t n) {
  std::ostringstream os;
  os << 'a' << std::setw(static_cast<int>(std::to_string(n > 0 ? n - 1 : 0).size())) << std::setfill('0') << i;
  return os.str();
}

inline void validate(const AgentEconomyConfig& cfg) {
  if (cfg.n_agents < 2) throw ModelError(ErrorKind::invalid_argument, "n_agents must be >= 2");
  if (cfg.horizon < 1) throw ModelError(ErrorKind::invalid_argument, "horizon must be >= 1");
  detail::require_unit_interval(cfg.spend_propensity, "spend_propensity");
  if (cfg.c.sign() <= 0) throw ModelError(ErrorKind::invalid_argument, "c must be > 0");
  validate(cfg.debt);
  if (cfg.initial_balances) {
    if (cfg.initial_balances->size() != cfg.n_agents)
      throw ModelError(ErrorKind::invalid_argument, "initial_balances must list n_agents values");
    for (const auto& b : *cfg.initial_balances) detail::require_non_negative(b, "initial balance");
  }
}

namespace detail {

// One draw per agent, in agent order.
inline std::vector<std::size_t> draw_counterparties(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(rng() % (n - 1));
    out[i] = k + (k >= i ? 1 : 0);
  }
  return out;
}

}  // namespace detail

/// Each period: record (t, Gini, M); every agent sends spend_propensity of its
/// period-start balance to a uniformly drawn other agent; then the regime
/// issues money. Under rtm that is one dividend via advance_period. Under
/// debt, each agent starts owing its initial balance, borrows g times its debt,
/// pays interest r on it (unpaid interest is added to the debt) and the bank
/// recirculates a fraction of the interest in proportion to balances.
inline std::vector<AgentRow> agent_economy_run(const AgentEconomyConfig& cfg) {
  validate(cfg);
  const std::size_t n = cfg.n_agents;
  std::vector<Amount> start;
  if (cfg.initial_balances) {
    start = *cfg.initial_balances;
  } else {
    for (std::size_t i = 0; i < n; ++i) start.emplace_back(static_cast<long long>(1000 * (i + 1)));
  }
  std::vector<MemberId> ids;
  Balances balances;
  for (std::size_t i = 0; i < n; ++i) {
    ids.emplace_back(agent_id(i, n));
    balances.emplace(ids.back(), start[i]);
  }

  std::mt19937_64 rng(cfg.seed);
  std::vector<AgentRow> rows;
  rows.reserve(cfg.horizon);

  auto spending = [&](const Balances& current) {
    std::vector<Transfer> out;
    if (cfg.spend_propensity.is_zero()) return out;
    const auto partners = detail::draw_counterparties(rng, n);
    for (std::size_t i = 0; i < n; ++i) {
      Amount amount = cfg.spend_propensity * current.at(ids[i]);
      if (!amount.is_zero()) out.push_back({ids[i], ids[partners[i]], std::move(amount)});
    }
    return out;
  };

  if (cfg.regime == Regime::rtm) {
    RtmParams params;
    params.c = cfg.c;
    const Amount m0 = total_mass(balances);
    LedgerState state(params, balances, m0.is_zero() ? std::optional<Amount>(Amount{}) : std::nullopt);
    for (std::uint64_t step = 0; step < cfg.horizon; ++step) {
      rows.push_back({state.t(), gini(state.balances()), state.mass()});
      const auto transfers = spending(state.balances());
      if (!transfers.empty()) state = apply_transfers(state, transfers);
      state = advance_period(state);
    }
    return rows;
  }

  // Debt regime: plain per-agent bookkeeping.
  std::vector<Amount> debt = start;
  const DebtParams& dp = cfg.debt;
  for (std::uint64_t step = 0; step < cfg.horizon; ++step) {
    rows.push_back({step + 1, gini(balances), total_mass(balances)});
    for (const auto& tr : spending(balances)) {
      balances[tr.from] -= tr.amount;
      balances[tr.to] += tr.amount;
    }
    Amount collected;
    for (std::size_t i = 0; i < n; ++i) {
      Amount& b = balances[ids[i]];
      if (dp.new_lending_growth.sign() > 0) {
        const Amount lent = dp.new_lending_growth * debt[i];
        debt[i] += lent;
        b += lent;
      }
      const Amount owed = dp.r * debt[i];
      const Amount paid = std::min(owed, b);
      b -= paid;
      debt[i] += owed - paid;
      collected += paid;
    }
    const Amount recirculated = dp.interest_recirculation * collected;
    const Amount mass = total_mass(balances);
    if (!recirculated.is_zero() && !mass.is_zero())
      for (auto& [id, b] : balances) b += recirculated * b / mass;
  }
  return rows;
}

}  // namespace rtm
