// rtm: command-line front end for the dividend ledger and its comparison scenarios.
//
//   rtm reproduce-tables [--out <path>]
//   rtm run <config.yaml> [--seed <u64>] [--decimals <n>] [--out <path>]
//   rtm ud-calc --mass <amount> --population <n> --rate <annual> --periods-per-year <p> [--decimals <n>]
//   rtm wot-check <edges.csv> <identities.txt> [--k <n>] [--at <t>] [--out <path>]
//
// Exit codes: 0 success, 2 usage or config error, 3 model or output error.

#include "rtm/cli/csv.hpp"
#include "rtm/cli/run.hpp"
#include "rtm/cli/tables.hpp"
#include "rtm/scenarios.hpp"
#include "rtm/wot.hpp"
#include "rtm/wot_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using rtm::cli::kExitConfigError;
using rtm::cli::kExitModelError;
using rtm::cli::kExitOk;

int emit(const std::string& text, const std::optional<std::string>& out) {
  if (!out) {
    std::cout << text;
    return kExitOk;
  }
  try {
    rtm::cli::write_file_atomic(*out, text);
  } catch (const rtm::cli::IoError& e) {
    std::cerr << "output error: " << e.what() << '\n';
    return kExitModelError;
  }
  return kExitOk;
}

int ud_calc(const std::string& mass_text, std::uint64_t population, const std::string& rate_text,
            std::uint32_t periods_per_year, unsigned decimals) {
  const auto mass = rtm::Ratio::parse(mass_text);
  const auto rate = rtm::Ratio::parse(rate_text);
  if (!mass || mass->sign() < 0) {
    std::cerr << "error: --mass: '" << mass_text << "' is not a non-negative number\n";
    return kExitConfigError;
  }
  if (!rate || rate->sign() < 0) {
    std::cerr << "error: --rate: '" << rate_text << "' is not a non-negative number\n";
    return kExitConfigError;
  }
  try {
    const auto ud = rtm::ud_calculator(*mass, population, *rate, periods_per_year);
    std::cout << rtm::round_display(ud, decimals) << '\n';
  } catch (const rtm::ModelError& e) {
    std::cerr << "model error: " << e.what() << '\n';
    return kExitModelError;
  }
  return kExitOk;
}

int wot_check(const std::string& edges_path, const std::string& identities_path, std::uint32_t k,
              std::uint64_t at, const std::optional<std::string>& out) {
  std::ifstream edges_in(edges_path);
  if (!edges_in) {
    std::cerr << "error: " << edges_path << ": cannot read\n";
    return kExitConfigError;
  }
  std::ifstream ids_in(identities_path);
  if (!ids_in) {
    std::cerr << "error: " << identities_path << ": cannot read\n";
    return kExitConfigError;
  }
  rtm::WotGraph graph;
  try {
    auto identities = rtm::read_identities(ids_in, identities_path);
    auto edges = rtm::read_edges(edges_in, edges_path);
    graph = rtm::build_graph(identities, std::move(edges), edges_path);
  } catch (const rtm::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const rtm::ModelError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
  rtm::WotParams params;
  params.min_certs = k;
  std::ostringstream os;
  try {
    const auto members = rtm::evaluate_membership(graph, params, at);
    os << "# members at t=" << at << " with k=" << k << ": " << members.size() << " of "
       << graph.identities().size() << '\n';
    for (const auto& id : members) os << id.value << '\n';
  } catch (const rtm::ModelError& e) {
    std::cerr << "model error: " << e.what() << '\n';
    return kExitModelError;
  }
  return emit(os.str(), out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Universal Dividend ledger simulator"};
  app.require_subcommand(1);

  auto* tables = app.add_subcommand("reproduce-tables", "Print the quotative and relative reference tables");
  std::optional<std::string> tables_out;
  tables->add_option("--out", tables_out, "Write to a file instead of stdout");

  auto* run = app.add_subcommand("run", "Run a YAML scenario config and write CSV");
  std::string config_path;
  rtm::cli::RunOverrides overrides;
  run->add_option("config", config_path, "Scenario config (YAML)")->required();
  run->add_option("--seed", overrides.seed, "Override the config seed");
  run->add_option("--decimals", overrides.decimals, "Override display decimals (0-12)");
  run->add_option("--out", overrides.out, "Override the output CSV path");

  auto* ud = app.add_subcommand("ud-calc", "Per-period dividend from mass, population and annual rate");
  std::string mass_text;
  std::string rate_text;
  std::uint64_t population = 0;
  std::uint32_t periods_per_year = 12;
  unsigned ud_decimals = 2;
  ud->add_option("--mass", mass_text, "Monetary mass")->required();
  ud->add_option("--population", population, "Number of members")->required();
  ud->add_option("--rate", rate_text, "Annual growth rate, e.g. 0.1 or 1/10")->required();
  ud->add_option("--periods-per-year", periods_per_year, "Periods per year")->required();
  ud->add_option("--decimals", ud_decimals, "Display decimals (0-12)")->check(CLI::Range(0U, 12U));

  auto* wot = app.add_subcommand("wot-check", "Evaluate web-of-trust membership");
  std::string edges_path;
  std::string identities_path;
  std::uint32_t k = rtm::WotParams{}.min_certs;
  std::uint64_t at = 0;
  std::optional<std::string> wot_out;
  wot->add_option("edges", edges_path, "Edge list CSV")->required();
  wot->add_option("identities", identities_path, "Identities file")->required();
  wot->add_option("--k", k, "Certifications required")->check(CLI::PositiveNumber);
  wot->add_option("--at", at, "Period to evaluate");
  wot->add_option("--out", wot_out, "Write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  if (tables->parsed()) return emit(rtm::cli::reproduce_tables_text(), tables_out);
  if (run->parsed()) return rtm::cli::run(config_path, overrides, std::cerr);
  if (ud->parsed()) return ud_calc(mass_text, population, rate_text, periods_per_year, ud_decimals);
  if (wot->parsed()) return wot_check(edges_path, identities_path, k, at, wot_out);
  return kExitConfigError;
}
