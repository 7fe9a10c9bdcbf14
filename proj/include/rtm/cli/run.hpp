#pragma once

#include "rtm/agents.hpp"
#include "rtm/cli/config.hpp"
#include "rtm/cli/csv.hpp"
#include "rtm/engine.hpp"
#include "rtm/scenarios.hpp"
#include "rtm/wot.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <type_traits>
#include <variant>

namespace rtm::cli {

enum ExitCode : int { kExitOk = 0, kExitConfigError = 2, kExitModelError = 3 };

struct RunOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> decimals;
  std::optional<std::string> out;
};

namespace detail {

inline std::vector<std::string> metadata_for(const ScenarioConfig& cfg) {
  const bool seeded = cfg.kind == ScenarioKind::agents;
  return {
      "kind: " + to_string(cfg.kind),
      "config: " + cfg.canonical,
      "seed: " + std::to_string(cfg.seed),
      std::string("generator: ") + (seeded ? kAgentGenerator : "none (deterministic scenario)"),
      "decimals: " + std::to_string(cfg.decimals),
  };
}

inline CsvTable run_debt(const ScenarioConfig& cfg, const DebtScenario& s) {
  const unsigned d = cfg.decimals;
  CsvTable table;
  table.metadata = metadata_for(cfg);
  if (s.solve_growth) {
    const auto g = required_lending_growth(s.params, s.initial, cfg.horizon);
    table.metadata.push_back("required_lending_growth: " + (g ? round_display(*g, 6) : "infeasible"));
  }
  const auto run = simulate_debt(s.initial, s.params, cfg.horizon);
  table.header = {"t", "M", "outstanding_debt", "due", "shortfall", "new_principal", "principal_repaid",
                  "interest_paid"};
  for (const auto& r : run.rows)
    table.rows.push_back({std::to_string(r.t), round_display(r.money, d), round_display(r.outstanding_debt, d),
                          round_display(r.due, d), round_display(r.shortfall, d), round_display(r.new_principal, d),
                          round_display(r.principal_repaid, d), round_display(r.interest_paid, d)});
  return table;
}

inline CsvTable run_transition(const ScenarioConfig& cfg, const TransitionConfig& tc) {
  const unsigned d = cfg.decimals;
  const auto run = simulate_transition(tc, cfg.horizon);
  CsvTable table;
  table.metadata = metadata_for(cfg);
  table.metadata.push_back("extinction_period: " +
                           (run.extinction_period ? std::to_string(*run.extinction_period) : std::string("none")));
  table.header = {"t", "ud", "payment", "remaining_debt", "balance"};
  for (const auto& r : run.series)
    table.rows.push_back({std::to_string(r.t), round_display(r.ud, d), round_display(r.payment, d),
                          round_display(r.remaining_debt, d), round_display(r.balance, d)});
  return table;
}

inline CsvTable run_double_circulation(const ScenarioConfig& cfg, const DoubleCirculationInputs& in) {
  const unsigned d = cfg.decimals;
  const auto s = effective_money_supply_breakdown(in);
  CsvTable table;
  table.metadata = metadata_for(cfg);
  table.header = {"fiat_mass", "crypto_circulating", "stablecoin_reinvested", "effective_supply"};
  table.rows.push_back({round_display(s.fiat, d), round_display(s.crypto, d), round_display(s.stablecoin, d),
                        round_display(s.total, d)});
  return table;
}

inline CsvTable run_reserve_bridge(const ScenarioConfig& cfg, const ReserveBridgeConfig& rb) {
  const unsigned d = cfg.decimals;
  CsvTable table;
  table.metadata = metadata_for(cfg);
  table.header = {"t", "price", "units_sold", "cumulative_units"};
  for (const auto& r : reserve_bridge_schedule(rb))
    table.rows.push_back({std::to_string(r.t), round_display(r.price, d), round_display(r.units_sold, d),
                          round_display(r.cumulative_units, d)});
  return table;
}

inline CsvTable run_agents(const ScenarioConfig& cfg, AgentEconomyConfig ac) {
  const unsigned d = cfg.decimals;
  ac.seed = cfg.seed;
  ac.horizon = cfg.horizon;
  CsvTable table;
  table.metadata = metadata_for(cfg);
  table.header = {"t", "gini", "M"};
  for (const auto& r : agent_economy_run(ac))
    table.rows.push_back({std::to_string(r.t), round_display(r.gini, d), round_display(r.mass, d)});
  return table;
}

inline CsvTable run_wot(const ScenarioConfig& cfg, const WotScenario& s) {
  CsvTable table;
  table.metadata = metadata_for(cfg);
  if (s.sybil) {
    const auto admitted = sybil_scenario(s.graph, s.params, s.sybil->colluders, s.sybil->fake_count, s.sybil->at);
    table.metadata.push_back("sybil_admitted: " + std::to_string(admitted) + " of " +
                             std::to_string(s.sybil->fake_count));
  }
  table.header = {"t", "identity", "member"};
  for (PeriodIndex t = 0; t < cfg.horizon; ++t) {
    const auto members = evaluate_membership(s.graph, s.params, t);
    for (const auto& id : s.graph.identities())
      table.rows.push_back({std::to_string(t), id.value, members.count(id) ? "1" : "0"});
  }
  return table;
}

}  // namespace detail

/// Runs a validated config and returns the CSV document. Model failures
/// surface as ModelError.
inline CsvTable execute(const ScenarioConfig& cfg) {
  return std::visit(
      [&](const auto& p) -> CsvTable {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, RtmScenario>) {
          const auto result = simulate(p.initial, cfg.horizon, p.transfers, p.membership_changes);
          return simulation_table(result, cfg.decimals, detail::metadata_for(cfg));
        } else if constexpr (std::is_same_v<T, DebtScenario>) {
          return detail::run_debt(cfg, p);
        } else if constexpr (std::is_same_v<T, TransitionConfig>) {
          return detail::run_transition(cfg, p);
        } else if constexpr (std::is_same_v<T, DoubleCirculationInputs>) {
          return detail::run_double_circulation(cfg, p);
        } else if constexpr (std::is_same_v<T, ReserveBridgeConfig>) {
          return detail::run_reserve_bridge(cfg, p);
        } else if constexpr (std::is_same_v<T, AgentEconomyConfig>) {
          return detail::run_agents(cfg, p);
        } else if constexpr (std::is_same_v<T, WotScenario>) {
          return detail::run_wot(cfg, p);
        } else {
          throw ModelError(ErrorKind::invalid_argument, "config has no parameters");
        }
      },
      cfg.params);
}

/// Loads, validates, executes and writes. Returns 0, 2 (config) or 3 (model
/// or output failure); diagnostics go to `err`.
inline int run(const std::filesystem::path& config_path, const RunOverrides& overrides, std::ostream& err) {
  ScenarioConfig cfg;
  try {
    cfg = load_config(config_path);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
  if (overrides.seed) cfg.seed = *overrides.seed;
  if (overrides.decimals) {
    if (*overrides.decimals > kMaxDisplayDecimals) {
      err << "error: --decimals must be <= 12\n";
      return kExitConfigError;
    }
    cfg.decimals = *overrides.decimals;
  }
  if (overrides.out) cfg.output = *overrides.out;
  if (!cfg.output) {
    err << "error: " << config_path.string() << ": no output path (set 'output' or pass --out)\n";
    return kExitConfigError;
  }
  try {
    write_file_atomic(*cfg.output, to_csv_string(execute(cfg)));
  } catch (const ModelError& e) {
    err << "model error: " << e.what() << '\n';
    return kExitModelError;
  } catch (const IoError& e) {
    err << "output error: " << e.what() << '\n';
    return kExitModelError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitModelError;
  }
  return kExitOk;
}

}  // namespace rtm::cli
