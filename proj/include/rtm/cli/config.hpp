#pragma once

// YAML scenario configs. Top-level keys shared by every kind:
//
//   kind: rtm | debt | transition | double_circulation | reserve_bridge | agents | wot
//   horizon: <periods>          (required except for double_circulation, reserve_bridge)
//   seed: <u64>                 (default 0)
//   decimals: <0..12>           (default 2)
//   output: <csv path>          (may instead be given with --out)
//
// The remaining keys are the parameter record of the chosen kind; see
// README.md. Rationals may be written as integers, decimals ("0.05"),
// fractions ("1/10") or with an exponent ("1e13"). Unknown keys are errors.

#include "rtm/agents.hpp"
#include "rtm/engine.hpp"
#include "rtm/error.hpp"
#include "rtm/scenarios.hpp"
#include "rtm/wot.hpp"
#include "rtm/wot_io.hpp"

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace rtm::cli {

enum class ScenarioKind { rtm, debt, transition, double_circulation, reserve_bridge, agents, wot };

inline std::string to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::rtm: return "rtm";
    case ScenarioKind::debt: return "debt";
    case ScenarioKind::transition: return "transition";
    case ScenarioKind::double_circulation: return "double_circulation";
    case ScenarioKind::reserve_bridge: return "reserve_bridge";
    case ScenarioKind::agents: return "agents";
    case ScenarioKind::wot: return "wot";
  }
  return "unknown";
}

struct RtmScenario {
  LedgerState initial;
  std::vector<ScheduledTransfer> transfers;
  std::vector<MembershipChange> membership_changes;
};

struct DebtScenario {
  DebtState initial;
  DebtParams params;
  bool solve_growth = false;
};

struct SybilProbe {
  std::set<IdentityId> colluders;
  std::size_t fake_count = 0;
  PeriodIndex at = 0;
};

struct WotScenario {
  WotGraph graph;
  WotParams params;
  std::optional<SybilProbe> sybil;
};

using ScenarioParams = std::variant<std::monostate, RtmScenario, DebtScenario, TransitionConfig, DoubleCirculationInputs,
                                    ReserveBridgeConfig, AgentEconomyConfig, WotScenario>;

struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::rtm;
  std::uint64_t horizon = 0;
  std::uint64_t seed = 0;
  unsigned decimals = 2;
  std::optional<std::string> output;
  std::string canonical;  // single-line rendering of the config, for CSV metadata
  ScenarioParams params;
};

namespace detail {

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  const std::string& source() const { return source_; }

  static std::size_t line_of(const YAML::Node& n) {
    const auto mark = n.Mark();
    return mark.line >= 0 ? static_cast<std::size_t>(mark.line) + 1 : 0;
  }

  [[noreturn]] void fail(const YAML::Node& at, const std::string& message) const {
    throw InputError(source_, line_of(at), message);
  }

  void require_map(const YAML::Node& n, const std::string& what) const {
    if (!n.IsMap()) fail(n, what + " must be a mapping");
  }

  void only_keys(const YAML::Node& map, std::initializer_list<const char*> allowed) const {
    for (const auto& kv : map) {
      const std::string key = kv.first.Scalar();
      bool ok = false;
      for (const char* a : allowed) ok = ok || key == a;
      if (!ok) fail(kv.first, "unknown key '" + key + "'");
    }
  }

  YAML::Node get(const YAML::Node& map, const char* key) const { return map[key]; }

  YAML::Node require(const YAML::Node& map, const char* key) const {
    YAML::Node n = map[key];
    if (!n.IsDefined() || n.IsNull()) fail(map, std::string("missing required key '") + key + "'");
    return n;
  }

  std::string scalar(const YAML::Node& n, const std::string& what) const {
    if (!n.IsScalar()) fail(n, what + " must be a scalar");
    return n.Scalar();
  }

  Ratio ratio(const YAML::Node& n, const std::string& what) const {
    auto text = scalar(n, what);
    auto r = Ratio::parse(text);
    if (!r) fail(n, what + ": '" + text + "' is not a number");
    return *r;
  }

  Ratio non_negative(const YAML::Node& n, const std::string& what) const {
    Ratio r = ratio(n, what);
    if (r.sign() < 0) fail(n, what + " must be >= 0");
    return r;
  }

  Ratio unit_interval(const YAML::Node& n, const std::string& what) const {
    Ratio r = ratio(n, what);
    if (r.sign() < 0 || r > Ratio(1)) fail(n, what + " must lie in [0, 1]");
    return r;
  }

  std::uint64_t u64(const YAML::Node& n, const std::string& what) const {
    auto text = scalar(n, what);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
      fail(n, what + ": '" + text + "' is not a non-negative integer");
    return v;
  }

  std::uint64_t positive(const YAML::Node& n, const std::string& what) const {
    auto v = u64(n, what);
    if (v == 0) fail(n, what + " must be >= 1");
    return v;
  }

  bool boolean(const YAML::Node& n, const std::string& what) const {
    auto text = scalar(n, what);
    if (text == "true") return true;
    if (text == "false") return false;
    fail(n, what + " must be true or false");
  }

  std::vector<YAML::Node> sequence(const YAML::Node& n, const std::string& what) const {
    if (!n.IsSequence()) fail(n, what + " must be a list");
    std::vector<YAML::Node> out;
    for (const auto& item : n) out.push_back(item);
    return out;
  }

  std::set<MemberId> id_set(const YAML::Node& n, const std::string& what) const {
    std::set<MemberId> out;
    if (!n.IsDefined() || n.IsNull()) return out;
    for (const auto& item : sequence(n, what))
      if (!out.insert(MemberId(scalar(item, what))).second) fail(item, what + ": duplicate id " + item.Scalar());
    return out;
  }

  // Runs a model-level validator and reports its failure at `at`.
  template <typename F>
  auto guarded(const YAML::Node& at, F&& f) const -> decltype(f()) {
    try {
      return f();
    } catch (const ModelError& e) {
      fail(at, e.what());
    }
  }

 private:
  std::string source_;
};

inline RtmParams read_rtm_params(const Reader& rd, const YAML::Node& map) {
  RtmParams p;
  p.c = rd.ratio(rd.require(map, "c"), "c");
  if (p.c.sign() <= 0) rd.fail(map["c"], "c must be > 0");
  if (auto rule = rd.get(map, "ud_rule"); rule.IsDefined()) {
    auto text = rd.scalar(rule, "ud_rule");
    if (text == "mass_proportional")
      p.ud_rule = UdRule::mass_proportional;
    else if (text == "geometric")
      p.ud_rule = UdRule::geometric;
    else
      rd.fail(rule, "ud_rule must be mass_proportional or geometric");
  }
  if (auto ppy = rd.get(map, "periods_per_year"); ppy.IsDefined())
    p.periods_per_year = static_cast<std::uint32_t>(rd.positive(ppy, "periods_per_year"));
  return p;
}

inline RtmScenario read_rtm(const Reader& rd, const YAML::Node& root, std::uint64_t horizon) {
  rd.only_keys(root, {"kind", "horizon", "seed", "decimals", "output", "c", "ud_rule", "periods_per_year",
                      "balances", "initial_ud", "transfers", "membership_changes"});
  const RtmParams params = read_rtm_params(rd, root);
  const YAML::Node bal = rd.require(root, "balances");
  rd.require_map(bal, "balances");
  Balances balances;
  for (const auto& kv : bal) {
    MemberId id(rd.scalar(kv.first, "member id"));
    if (!balances.emplace(id, rd.non_negative(kv.second, "balance of " + id.value)).second)
      rd.fail(kv.first, "duplicate member " + id.value);
  }
  if (balances.empty()) rd.fail(bal, "balances must list at least one member");
  std::optional<Amount> initial_ud;
  if (auto ud = rd.get(root, "initial_ud"); ud.IsDefined()) {
    initial_ud = rd.ratio(ud, "initial_ud");
    if (initial_ud->sign() <= 0) rd.fail(ud, "initial_ud must be > 0");
  }
  RtmScenario s{rd.guarded(root, [&] { return LedgerState(params, balances, initial_ud); }), {}, {}};
  if (s.initial.ud().sign() <= 0) rd.fail(bal, "initial UD is zero; give positive balances or initial_ud");

  auto check_period = [&](const YAML::Node& n) {
    auto p = rd.positive(n, "period");
    if (p > horizon) rd.fail(n, "period " + std::to_string(p) + " is beyond horizon " + std::to_string(horizon));
    return p;
  };
  if (auto tr = rd.get(root, "transfers"); tr.IsDefined() && !tr.IsNull()) {
    for (const auto& item : rd.sequence(tr, "transfers")) {
      rd.require_map(item, "transfer");
      rd.only_keys(item, {"period", "from", "to", "amount"});
      ScheduledTransfer st;
      st.period = check_period(rd.require(item, "period"));
      st.transfer.from = MemberId(rd.scalar(rd.require(item, "from"), "from"));
      st.transfer.to = MemberId(rd.scalar(rd.require(item, "to"), "to"));
      st.transfer.amount = rd.non_negative(rd.require(item, "amount"), "amount");
      s.transfers.push_back(std::move(st));
    }
  }
  if (auto mc = rd.get(root, "membership_changes"); mc.IsDefined() && !mc.IsNull()) {
    for (const auto& item : rd.sequence(mc, "membership_changes")) {
      rd.require_map(item, "membership change");
      rd.only_keys(item, {"period", "joins", "leaves"});
      MembershipChange change;
      change.period = check_period(rd.require(item, "period"));
      change.joins = rd.id_set(item["joins"], "joins");
      change.leaves = rd.id_set(item["leaves"], "leaves");
      s.membership_changes.push_back(std::move(change));
    }
  }
  return s;
}

inline DebtParams read_debt_params(const Reader& rd, const YAML::Node& map, DebtParams p = {}) {
  if (auto n = rd.get(map, "r"); n.IsDefined()) p.r = rd.non_negative(n, "r");
  if (auto n = rd.get(map, "loan_term"); n.IsDefined()) p.loan_term = rd.positive(n, "loan_term");
  if (auto n = rd.get(map, "new_lending_growth"); n.IsDefined()) {
    p.new_lending_growth = rd.ratio(n, "new_lending_growth");
    if (p.new_lending_growth < Ratio(-1)) rd.fail(n, "new_lending_growth must be >= -1");
  }
  if (auto n = rd.get(map, "interest_recirculation"); n.IsDefined())
    p.interest_recirculation = rd.unit_interval(n, "interest_recirculation");
  return p;
}

inline DebtScenario read_debt(const Reader& rd, const YAML::Node& root) {
  rd.only_keys(root, {"kind", "horizon", "seed", "decimals", "output", "r", "loan_term", "new_lending_growth",
                      "interest_recirculation", "M", "loans", "solve_growth"});
  DebtScenario s;
  s.params = read_debt_params(rd, root, DebtParams{Ratio(1, 20), 1, Ratio(0), Ratio(0)});
  s.initial.money = rd.non_negative(rd.require(root, "M"), "M");
  if (auto loans = rd.get(root, "loans"); loans.IsDefined() && !loans.IsNull()) {
    for (const auto& item : rd.sequence(loans, "loans")) {
      rd.require_map(item, "loan");
      rd.only_keys(item, {"principal", "due_at"});
      Loan l;
      l.principal = rd.ratio(rd.require(item, "principal"), "principal");
      if (l.principal.sign() <= 0) rd.fail(item["principal"], "principal must be > 0");
      l.due_at = rd.positive(rd.require(item, "due_at"), "due_at");
      s.initial.loans.push_back(std::move(l));
    }
  }
  if (auto n = rd.get(root, "solve_growth"); n.IsDefined()) s.solve_growth = rd.boolean(n, "solve_growth");
  return s;
}

inline TransitionConfig read_transition(const Reader& rd, const YAML::Node& root) {
  rd.only_keys(root, {"kind", "horizon", "seed", "decimals", "output", "per_capita_debt", "rtm", "initial_ud",
                      "repayment_fraction"});
  TransitionConfig cfg;
  cfg.per_capita_debt = rd.non_negative(rd.require(root, "per_capita_debt"), "per_capita_debt");
  const YAML::Node rtm = rd.require(root, "rtm");
  rd.require_map(rtm, "rtm");
  rd.only_keys(rtm, {"c", "ud_rule", "periods_per_year"});
  cfg.rtm = read_rtm_params(rd, rtm);
  cfg.initial_ud = rd.ratio(rd.require(root, "initial_ud"), "initial_ud");
  if (cfg.initial_ud.sign() <= 0) rd.fail(root["initial_ud"], "initial_ud must be > 0");
  if (auto n = rd.get(root, "repayment_fraction"); n.IsDefined()) {
    cfg.repayment_fraction = rd.ratio(n, "repayment_fraction");
    if (cfg.repayment_fraction.sign() <= 0 || cfg.repayment_fraction > Ratio(1))
      rd.fail(n, "repayment_fraction must lie in (0, 1]");
  }
  return cfg;
}

inline DoubleCirculationInputs read_double_circulation(const Reader& rd, const YAML::Node& root) {
  rd.only_keys(root, {"kind", "horizon", "seed", "decimals", "output", "fiat_mass", "crypto_positions",
                      "stablecoins"});
  DoubleCirculationInputs in;
  in.fiat_mass = rd.non_negative(rd.require(root, "fiat_mass"), "fiat_mass");
  if (auto n = rd.get(root, "crypto_positions"); n.IsDefined() && !n.IsNull()) {
    for (const auto& item : rd.sequence(n, "crypto_positions")) {
      rd.require_map(item, "crypto position");
      rd.only_keys(item, {"market_value", "acceptance"});
      in.crypto_positions.push_back({rd.non_negative(rd.require(item, "market_value"), "market_value"),
                                     rd.unit_interval(rd.require(item, "acceptance"), "acceptance")});
    }
  }
  if (auto n = rd.get(root, "stablecoins"); n.IsDefined() && !n.IsNull()) {
    for (const auto& item : rd.sequence(n, "stablecoins")) {
      rd.require_map(item, "stablecoin");
      rd.only_keys(item, {"float", "reserve_reinvested"});
      in.stablecoins.push_back({rd.non_negative(rd.require(item, "float"), "float"),
                                rd.unit_interval(rd.require(item, "reserve_reinvested"), "reserve_reinvested")});
    }
  }
  return in;
}

inline ReserveBridgeConfig read_reserve_bridge(const Reader& rd, const YAML::Node& root) {
  rd.only_keys(root, {"kind", "horizon", "seed", "decimals", "output", "consumption_per_period", "window",
                      "reserve_price_path"});
  ReserveBridgeConfig cfg;
  cfg.consumption_per_period = rd.non_negative(rd.require(root, "consumption_per_period"), "consumption_per_period");
  cfg.window = rd.positive(rd.require(root, "window"), "window");
  const YAML::Node path = rd.require(root, "reserve_price_path");
  for (const auto& item : rd.sequence(path, "reserve_price_path")) {
    Ratio p = rd.ratio(item, "reserve price");
    if (p.sign() <= 0) rd.fail(item, "reserve prices must be > 0");
    cfg.reserve_price_path.push_back(std::move(p));
  }
  if (cfg.reserve_price_path.size() < cfg.window)
    rd.fail(path, "reserve_price_path has " + std::to_string(cfg.reserve_price_path.size()) +
                      " entries, window needs " + std::to_string(cfg.window));
  return cfg;
}

inline AgentEconomyConfig read_agents(const Reader& rd, const YAML::Node& root, std::uint64_t horizon,
                                      std::uint64_t seed) {
  rd.only_keys(root, {"kind", "horizon", "seed", "decimals", "output", "n_agents", "regime", "spend_propensity",
                      "c", "initial_balances", "debt"});
  AgentEconomyConfig cfg;
  cfg.horizon = horizon;
  cfg.seed = seed;
  const YAML::Node n = rd.require(root, "n_agents");
  cfg.n_agents = rd.u64(n, "n_agents");
  if (cfg.n_agents < 2) rd.fail(n, "n_agents must be >= 2");
  const auto regime = rd.require(root, "regime");
  const auto regime_text = rd.scalar(regime, "regime");
  if (regime_text == "rtm")
    cfg.regime = Regime::rtm;
  else if (regime_text == "debt")
    cfg.regime = Regime::debt;
  else
    rd.fail(regime, "regime must be rtm or debt");
  cfg.spend_propensity = rd.unit_interval(rd.require(root, "spend_propensity"), "spend_propensity");
  if (auto c = rd.get(root, "c"); c.IsDefined()) {
    cfg.c = rd.ratio(c, "c");
    if (cfg.c.sign() <= 0) rd.fail(c, "c must be > 0");
  }
  if (auto ib = rd.get(root, "initial_balances"); ib.IsDefined()) {
    std::vector<Amount> balances;
    for (const auto& item : rd.sequence(ib, "initial_balances")) balances.push_back(rd.non_negative(item, "balance"));
    if (balances.size() != cfg.n_agents) rd.fail(ib, "initial_balances must list n_agents values");
    cfg.initial_balances = std::move(balances);
  }
  if (auto d = rd.get(root, "debt"); d.IsDefined()) {
    rd.require_map(d, "debt");
    rd.only_keys(d, {"r", "loan_term", "new_lending_growth", "interest_recirculation"});
    cfg.debt = read_debt_params(rd, d);
  }
  return cfg;
}

inline WotScenario read_wot(const Reader& rd, const YAML::Node& root, const std::filesystem::path& base_dir) {
  rd.only_keys(root, {"kind", "horizon", "seed", "decimals", "output", "min_certs", "cert_validity",
                      "max_certs_per_issuer", "distance_rule", "identities", "seed_members", "certifications",
                      "identities_file", "edges_file", "sybil"});
  WotScenario s;
  if (auto n = rd.get(root, "min_certs"); n.IsDefined())
    s.params.min_certs = static_cast<std::uint32_t>(rd.positive(n, "min_certs"));
  if (auto n = rd.get(root, "cert_validity"); n.IsDefined()) s.params.cert_validity = rd.positive(n, "cert_validity");
  if (auto n = rd.get(root, "max_certs_per_issuer"); n.IsDefined())
    s.params.max_certs_per_issuer = static_cast<std::uint32_t>(rd.positive(n, "max_certs_per_issuer"));
  if (auto n = rd.get(root, "distance_rule"); n.IsDefined()) {
    rd.require_map(n, "distance_rule");
    rd.only_keys(n, {"max_distance", "coverage"});
    DistanceRule rule;
    rule.max_distance = static_cast<std::uint32_t>(rd.positive(rd.require(n, "max_distance"), "max_distance"));
    rule.coverage = rd.ratio(rd.require(n, "coverage"), "coverage");
    if (rule.coverage.sign() <= 0 || rule.coverage > Ratio(1)) rd.fail(n["coverage"], "coverage must lie in (0, 1]");
    s.params.distance_rule = rule;
  }

  std::vector<IdentityEntry> identities;
  std::vector<Certification> edges;
  const bool from_files = rd.get(root, "identities_file").IsDefined() || rd.get(root, "edges_file").IsDefined();
  if (from_files) {
    if (rd.get(root, "identities").IsDefined() || rd.get(root, "certifications").IsDefined())
      rd.fail(root, "use either identities/certifications or identities_file/edges_file, not both");
    auto open = [&](const char* key) {
      const YAML::Node n = rd.require(root, key);
      std::filesystem::path p = rd.scalar(n, key);
      if (p.is_relative()) p = base_dir / p;
      std::ifstream in(p);
      if (!in) rd.fail(n, "cannot read " + p.string());
      return std::make_pair(std::move(in), p.string());
    };
    auto [ids_in, ids_name] = open("identities_file");
    identities = read_identities(ids_in, ids_name);
    auto [edges_in, edges_name] = open("edges_file");
    edges = read_edges(edges_in, edges_name);
  } else {
    const auto seeds = rd.id_set(rd.get(root, "seed_members"), "seed_members");
    const auto ids = rd.id_set(rd.require(root, "identities"), "identities");
    for (const auto& id : ids) identities.push_back({id, seeds.count(id) != 0});
    for (const auto& sd : seeds)
      if (ids.count(sd) == 0) rd.fail(root["seed_members"], "seed member " + sd.value + " is not in identities");
    if (auto certs = rd.get(root, "certifications"); certs.IsDefined() && !certs.IsNull()) {
      for (const auto& item : rd.sequence(certs, "certifications")) {
        rd.require_map(item, "certification");
        rd.only_keys(item, {"issuer", "subject", "issued_at", "validity"});
        Certification c;
        c.issuer = IdentityId(rd.scalar(rd.require(item, "issuer"), "issuer"));
        c.subject = IdentityId(rd.scalar(rd.require(item, "subject"), "subject"));
        c.issued_at = rd.u64(rd.require(item, "issued_at"), "issued_at");
        c.validity = s.params.cert_validity;
        if (auto v = rd.get(item, "validity"); v.IsDefined()) c.validity = rd.positive(v, "validity");
        if (ids.count(c.issuer) == 0) rd.fail(item, "unknown issuer " + c.issuer.value);
        if (ids.count(c.subject) == 0) rd.fail(item, "unknown subject " + c.subject.value);
        if (c.issuer == c.subject) rd.fail(item, "self-certification " + c.issuer.value);
        edges.push_back(std::move(c));
      }
    }
  }
  s.graph = build_graph(identities, std::move(edges), rd.source());

  if (auto sy = rd.get(root, "sybil"); sy.IsDefined()) {
    rd.require_map(sy, "sybil");
    rd.only_keys(sy, {"colluders", "fake_count", "at"});
    SybilProbe probe;
    probe.colluders = rd.id_set(rd.require(sy, "colluders"), "colluders");
    probe.fake_count = rd.u64(rd.require(sy, "fake_count"), "fake_count");
    if (auto at = rd.get(sy, "at"); at.IsDefined()) probe.at = rd.u64(at, "at");
    for (const auto& id : probe.colluders)
      if (!s.graph.contains(id)) rd.fail(sy, "unknown colluder " + id.value);
    s.sybil = std::move(probe);
  }
  return s;
}

inline void set_flow_style(YAML::Node n) {
  if (n.IsMap() || n.IsSequence()) {
    n.SetStyle(YAML::EmitterStyle::Flow);
    for (auto it = n.begin(); it != n.end(); ++it) set_flow_style(n.IsMap() ? it->second : *it);
  }
}

inline std::string canonical_text(const YAML::Node& root) {
  YAML::Node copy = YAML::Clone(root);
  set_flow_style(copy);
  YAML::Emitter out;
  out << copy;
  return out.c_str();
}

}  // namespace detail

/// Parses and validates a config. Throws InputError with a line number on
/// any syntax or validation problem.
inline ScenarioConfig parse_config(const std::string& text, const std::string& source,
                                   const std::filesystem::path& base_dir = ".") {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw InputError(source, e.mark.line >= 0 ? static_cast<std::size_t>(e.mark.line) + 1 : 0, e.msg);
  }
  detail::Reader rd(source);
  if (!root.IsMap()) throw InputError(source, detail::Reader::line_of(root), "config must be a mapping");

  ScenarioConfig cfg;
  const auto kind_node = rd.require(root, "kind");
  const auto kind = rd.scalar(kind_node, "kind");
  static const std::pair<const char*, ScenarioKind> kinds[] = {
      {"rtm", ScenarioKind::rtm},
      {"debt", ScenarioKind::debt},
      {"transition", ScenarioKind::transition},
      {"double_circulation", ScenarioKind::double_circulation},
      {"reserve_bridge", ScenarioKind::reserve_bridge},
      {"agents", ScenarioKind::agents},
      {"wot", ScenarioKind::wot},
  };
  bool known = false;
  for (const auto& [name, k] : kinds)
    if (kind == name) {
      cfg.kind = k;
      known = true;
    }
  if (!known) rd.fail(kind_node, "unknown kind '" + kind + "'");

  const bool needs_horizon =
      cfg.kind != ScenarioKind::double_circulation && cfg.kind != ScenarioKind::reserve_bridge;
  if (auto h = rd.get(root, "horizon"); h.IsDefined())
    cfg.horizon = rd.positive(h, "horizon");
  else if (needs_horizon)
    rd.require(root, "horizon");
  if (auto s = rd.get(root, "seed"); s.IsDefined()) cfg.seed = rd.u64(s, "seed");
  if (auto d = rd.get(root, "decimals"); d.IsDefined()) {
    auto v = rd.u64(d, "decimals");
    if (v > kMaxDisplayDecimals) rd.fail(d, "decimals must be <= 12");
    cfg.decimals = static_cast<unsigned>(v);
  }
  if (auto o = rd.get(root, "output"); o.IsDefined()) cfg.output = rd.scalar(o, "output");

  switch (cfg.kind) {
    case ScenarioKind::rtm: cfg.params = detail::read_rtm(rd, root, cfg.horizon); break;
    case ScenarioKind::debt: cfg.params = detail::read_debt(rd, root); break;
    case ScenarioKind::transition: cfg.params = detail::read_transition(rd, root); break;
    case ScenarioKind::double_circulation: cfg.params = detail::read_double_circulation(rd, root); break;
    case ScenarioKind::reserve_bridge: cfg.params = detail::read_reserve_bridge(rd, root); break;
    case ScenarioKind::agents: cfg.params = detail::read_agents(rd, root, cfg.horizon, cfg.seed); break;
    case ScenarioKind::wot: cfg.params = detail::read_wot(rd, root, base_dir); break;
  }
  cfg.canonical = detail::canonical_text(root);
  return cfg;
}

inline ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string(), 0, "cannot read config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.string(), path.parent_path().empty() ? "." : path.parent_path());
}

}  // namespace rtm::cli
