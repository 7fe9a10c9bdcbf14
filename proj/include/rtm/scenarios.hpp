#pragma once

// Comparative monetary models around the dividend ledger: debt-based money,
// double circulation of crypto-assets, dividend sizing, debt-to-dividend
// transition and a reserve-asset bridge.

#include "rtm/engine.hpp"
#include "rtm/error.hpp"
#include "rtm/money.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rtm {

// ---------------------------------------------------------------------------
// Double circulation

struct CryptoPosition {
  Amount market_value;
  Ratio acceptance;  // fraction of the position that circulates as money
};

struct Stablecoin {
  Amount float_amount;
  Ratio reserve_reinvested;  // fraction of the backing reserve spent back into the economy
};

struct DoubleCirculationInputs {
  Amount fiat_mass;
  std::vector<CryptoPosition> crypto_positions;
  std::vector<Stablecoin> stablecoins;
};

namespace detail {
inline void require_unit_interval(const Ratio& x, const char* what) {
  if (x.sign() < 0 || x > Ratio(1)) throw ModelError(ErrorKind::invalid_argument, std::string(what) + " must lie in [0, 1]");
}
inline void require_non_negative(const Ratio& x, const char* what) {
  if (x.sign() < 0) throw ModelError(ErrorKind::invalid_argument, std::string(what) + " must be >= 0");
}
}  // namespace detail

struct EffectiveSupply {
  Amount fiat;
  Amount crypto;
  Amount stablecoin;
  Amount total;
};

inline EffectiveSupply effective_money_supply_breakdown(const DoubleCirculationInputs& in) {
  detail::require_non_negative(in.fiat_mass, "fiat_mass");
  EffectiveSupply out{in.fiat_mass, {}, {}, {}};
  for (const auto& p : in.crypto_positions) {
    detail::require_non_negative(p.market_value, "market_value");
    detail::require_unit_interval(p.acceptance, "acceptance");
    out.crypto += p.acceptance * p.market_value;
  }
  for (const auto& s : in.stablecoins) {
    detail::require_non_negative(s.float_amount, "float");
    detail::require_unit_interval(s.reserve_reinvested, "reserve_reinvested");
    out.stablecoin += s.reserve_reinvested * s.float_amount;
  }
  out.total = out.fiat + out.crypto + out.stablecoin;
  return out;
}

/// fiat + sum(acceptance * value) + sum(reinvested * float)
inline Amount effective_money_supply(const DoubleCirculationInputs& in) {
  return effective_money_supply_breakdown(in).total;
}

// ---------------------------------------------------------------------------
// Debt-based money

struct DebtParams {
  Rate r{Ratio(1, 20)};
  std::uint64_t loan_term = 1;
  Ratio new_lending_growth{Ratio(1, 10)};
  Ratio interest_recirculation{Ratio(1, 2)};
};

inline void validate(const DebtParams& p) {
  detail::require_non_negative(p.r, "r");
  if (p.loan_term < 1) throw ModelError(ErrorKind::invalid_argument, "loan_term must be >= 1");
  if (p.new_lending_growth < Ratio(-1))
    throw ModelError(ErrorKind::invalid_argument, "new_lending_growth must be >= -1");
  detail::require_unit_interval(p.interest_recirculation, "interest_recirculation");
}

struct Loan {
  Amount principal;
  PeriodIndex due_at = 1;
};

struct DebtState {
  Amount money;
  std::vector<Loan> loans;
  Amount cumulative_defaults;

  Amount outstanding() const {
    Amount d;
    for (const auto& l : loans) d += l.principal;
    return d;
  }
};

struct DebtRow {
  PeriodIndex t = 0;
  Amount money;             // M after settlement
  Amount outstanding_debt;  // principal still owed after settlement
  Amount due;               // principal plus interest falling due this period
  Amount shortfall;
  Amount new_principal;
  Amount principal_repaid;
  Amount interest_paid;
};

struct DebtRun {
  std::vector<DebtRow> rows;
  DebtState final_state;
};

/// Bullet loans settled in aggregate. Per period t:
///   1. new loans of g * outstanding principal are issued (money created),
///      due at t + loan_term; negative g issues nothing;
///   2. interest on loans due at t is paid from M, and the fraction
///      interest_recirculation flows straight back into M;
///   3. principal due at t is repaid from what remains, destroying money.
/// Whatever M cannot cover is recorded as shortfall and written off.
inline DebtRun simulate_debt(const DebtState& initial, const DebtParams& params, std::uint64_t horizon) {
  validate(params);
  if (horizon == 0) throw ModelError(ErrorKind::invalid_argument, "horizon must be >= 1");
  detail::require_non_negative(initial.money, "M");
  for (const auto& l : initial.loans) {
    if (l.principal.sign() <= 0) throw ModelError(ErrorKind::invalid_argument, "loan principal must be > 0");
    if (l.due_at < 1) throw ModelError(ErrorKind::invalid_argument, "loan due_at must be >= 1");
  }

  const Ratio gross = pow_ratio(Ratio(1) + params.r, params.loan_term);
  DebtRun run{{}, initial};
  DebtState& s = run.final_state;
  run.rows.reserve(horizon);
  for (PeriodIndex t = 1; t <= horizon; ++t) {
    DebtRow row;
    row.t = t;
    if (params.new_lending_growth.sign() > 0) {
      row.new_principal = params.new_lending_growth * s.outstanding();
      if (row.new_principal.sign() > 0) {
        s.loans.push_back({row.new_principal, t + params.loan_term});
        s.money += row.new_principal;
      }
    }

    Amount principal_due;
    std::vector<Loan> remaining;
    for (auto& l : s.loans) {
      if (l.due_at == t)
        principal_due += l.principal;
      else
        remaining.push_back(std::move(l));
    }
    s.loans = std::move(remaining);
    const Amount interest_due = principal_due * (gross - Ratio(1));
    row.due = principal_due + interest_due;

    row.interest_paid = std::min(interest_due, s.money);
    s.money -= row.interest_paid;
    s.money += params.interest_recirculation * row.interest_paid;
    row.principal_repaid = std::min(principal_due, s.money);
    s.money -= row.principal_repaid;

    row.shortfall = (interest_due - row.interest_paid) + (principal_due - row.principal_repaid);
    s.cumulative_defaults += row.shortfall;
    row.money = s.money;
    row.outstanding_debt = s.outstanding();
    run.rows.push_back(std::move(row));
  }
  return run;
}

inline Amount total_shortfall(const DebtRun& run) {
  Amount total;
  for (const auto& r : run.rows) total += r.shortfall;
  return total;
}

constexpr long long kLendingGrowthResolution = 1'000'000;  // g is searched on multiples of 1e-6
constexpr long long kLendingGrowthCapUnits = 1000LL * kLendingGrowthResolution;

/// Smallest g on the 1e-6 grid in [0, 1000] for which simulate_debt reports
/// no shortfall, or nullopt if none was found. When a value is returned, the
/// grid point just below it is infeasible.
inline std::optional<Ratio> required_lending_growth(const DebtParams& params, const DebtState& initial,
                                                    std::uint64_t horizon) {
  auto feasible = [&](long long units) {
    DebtParams p = params;
    p.new_lending_growth = Ratio(units, kLendingGrowthResolution);
    return total_shortfall(simulate_debt(initial, p, horizon)).is_zero();
  };
  if (feasible(0)) return Ratio{};
  long long lo = 0;
  long long hi = kLendingGrowthResolution;
  while (!feasible(hi)) {
    if (hi >= kLendingGrowthCapUnits) return std::nullopt;
    lo = hi;
    hi = std::min(hi * 2, kLendingGrowthCapUnits);
  }
  while (hi - lo > 1) {
    const long long mid = lo + (hi - lo) / 2;
    if (feasible(mid))
      hi = mid;
    else
      lo = mid;
  }
  return Ratio(hi, kLendingGrowthResolution);
}

// ---------------------------------------------------------------------------
// Debt to dividend transition

struct TransitionConfig {
  Amount per_capita_debt;
  RtmParams rtm;
  Amount initial_ud{200};
  Ratio repayment_fraction{1};
};

inline void validate(const TransitionConfig& cfg) {
  detail::require_non_negative(cfg.per_capita_debt, "per_capita_debt");
  validate(cfg.rtm);
  if (cfg.initial_ud.sign() <= 0) throw ModelError(ErrorKind::invalid_argument, "initial_ud must be > 0");
  if (cfg.repayment_fraction.sign() <= 0 || cfg.repayment_fraction > Ratio(1))
    throw ModelError(ErrorKind::invalid_argument, "repayment_fraction must lie in (0, 1]");
}

struct TransitionRow {
  PeriodIndex t = 0;
  Amount ud;
  Amount payment;
  Amount remaining_debt;
  Amount balance;
};

struct TransitionRun {
  std::optional<PeriodIndex> extinction_period;
  std::vector<TransitionRow> series;
};

/// A representative debtor receives ud_t = initial_ud * (1+c)^(t-1) in period
/// t and repays repayment_fraction of it, capped by the remaining debt; the
/// rest stays in the balance. Extinction is the first period with no debt
/// left (0 when there was none).
inline TransitionRun simulate_transition(const TransitionConfig& cfg, std::uint64_t horizon) {
  validate(cfg);
  if (horizon == 0) throw ModelError(ErrorKind::invalid_argument, "horizon must be >= 1");
  TransitionRun run;
  Amount debt = cfg.per_capita_debt;
  Amount balance;
  Amount ud = cfg.initial_ud;
  const Ratio growth = Ratio(1) + cfg.rtm.c;
  if (debt.is_zero()) run.extinction_period = 0;
  for (PeriodIndex t = 1; t <= horizon; ++t) {
    balance += ud;
    const Amount payment = std::min(cfg.repayment_fraction * ud, debt);
    balance -= payment;
    debt -= payment;
    if (debt.is_zero() && !run.extinction_period) run.extinction_period = t;
    run.series.push_back({t, ud, payment, debt, balance});
    ud *= growth;
  }
  return run;
}

// ---------------------------------------------------------------------------
// Dividend sizing

/// c_annual * M / N / periods_per_year (simple proration).
inline Amount ud_calculator(const Amount& mass, std::uint64_t population, const Rate& c_annual,
                            std::uint32_t periods_per_year) {
  if (population == 0) throw ModelError(ErrorKind::population_zero, "population must be >= 1");
  if (periods_per_year == 0) throw ModelError(ErrorKind::invalid_argument, "periods_per_year must be >= 1");
  detail::require_non_negative(mass, "mass");
  detail::require_non_negative(c_annual, "rate");
  return c_annual * mass / Ratio(static_cast<long long>(population)) / Ratio(static_cast<long long>(periods_per_year));
}

/// Annual rate for which ud_calculator yields `ud_per_period`.
inline Rate annual_rate_for_ud(const Amount& ud_per_period, const Amount& mass, std::uint64_t population,
                               std::uint32_t periods_per_year) {
  if (mass.sign() <= 0) throw ModelError(ErrorKind::invalid_argument, "mass must be > 0");
  if (population == 0) throw ModelError(ErrorKind::population_zero, "population must be >= 1");
  return ud_per_period * Ratio(static_cast<long long>(population)) *
         Ratio(static_cast<long long>(periods_per_year)) / mass;
}

// ---------------------------------------------------------------------------
// Reserve bridge

struct ReserveBridgeConfig {
  Amount consumption_per_period;
  std::uint64_t window = 1;
  std::vector<Ratio> reserve_price_path;  // currency units per reserve unit
};

inline void validate(const ReserveBridgeConfig& cfg) {
  detail::require_non_negative(cfg.consumption_per_period, "consumption_per_period");
  if (cfg.window < 1) throw ModelError(ErrorKind::invalid_argument, "window must be >= 1");
  if (cfg.reserve_price_path.size() < cfg.window)
    throw ModelError(ErrorKind::invalid_argument, "reserve_price_path shorter than window");
  for (const auto& p : cfg.reserve_price_path)
    if (p.sign() <= 0) throw ModelError(ErrorKind::invalid_argument, "reserve prices must be > 0");
}

struct ReserveBridgeRow {
  PeriodIndex t = 0;
  Ratio price;
  Ratio units_sold;
  Ratio cumulative_units;
};

inline std::vector<ReserveBridgeRow> reserve_bridge_schedule(const ReserveBridgeConfig& cfg) {
  validate(cfg);
  std::vector<ReserveBridgeRow> rows;
  Ratio cumulative;
  for (std::uint64_t i = 0; i < cfg.window; ++i) {
    const Ratio& price = cfg.reserve_price_path[i];
    const Ratio units = cfg.consumption_per_period / price;
    cumulative += units;
    rows.push_back({i + 1, price, units, cumulative});
  }
  return rows;
}

/// Reserve units to sell to fund consumption over the window.
inline Ratio reserve_bridge(const ReserveBridgeConfig& cfg) {
  return reserve_bridge_schedule(cfg).back().cumulative_units;
}

}  // namespace rtm
