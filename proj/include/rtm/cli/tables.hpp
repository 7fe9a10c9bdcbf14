#pragma once

// The two reference tables of a three-member economy: balances in currency
// units and balances in units of the current dividend.

#include "rtm/engine.hpp"

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace rtm::cli {

inline LedgerState reference_economy() {
  Balances b{{"P1", Amount(1000)}, {"P2", Amount(2000)}, {"P3", Amount(3000)}};
  return LedgerState(RtmParams{}, std::move(b), Amount(200));
}

constexpr std::uint64_t kReferenceHorizon = 20;

struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Columns: t, one per member, M, M/N, DU.
inline TextTable quotative_table(const SimulationResult& r, unsigned decimals = 0) {
  TextTable table{{"t"}, {}};
  if (!r.rows.empty())
    for (const auto& [id, b] : r.rows.front().balances) table.header.push_back(id.value);
  table.header.insert(table.header.end(), {"M", "M/N", "DU"});
  for (const auto& row : r.rows) {
    std::vector<std::string> cells{std::to_string(row.t)};
    for (const auto& [id, b] : row.balances) cells.push_back(round_display(b, decimals));
    cells.push_back(round_display(row.mass, decimals));
    cells.push_back(round_display(row.mass_per_capita, decimals));
    cells.push_back(round_display(row.ud, decimals));
    table.rows.push_back(std::move(cells));
  }
  return table;
}

inline TextTable relative_table(const SimulationResult& r, unsigned decimals = 2) {
  TextTable table{{"t"}, {}};
  if (!r.rows.empty())
    for (const auto& [id, x] : r.rows.front().relative_balances) table.header.push_back(id.value);
  table.header.insert(table.header.end(), {"M", "M/N", "DU"});
  for (const auto& row : r.rows) {
    std::vector<std::string> cells{std::to_string(row.t)};
    for (const auto& [id, x] : row.relative_balances) cells.push_back(round_display(x, decimals));
    cells.push_back(round_display(row.relative_mass, decimals));
    cells.push_back(round_display(row.mass_per_capita / row.ud, decimals));
    cells.push_back(round_display(row.ud / row.ud, decimals));
    table.rows.push_back(std::move(cells));
  }
  return table;
}

inline void write_text_table(std::ostream& out, const TextTable& table) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << '\t';
      out << cells[i];
    }
    out << '\n';
  };
  line(table.header);
  for (const auto& r : table.rows) line(r);
}

/// Quotative table (0 decimals), a blank line, relative table (2 decimals).
inline void reproduce_tables(std::ostream& out) {
  const auto result = simulate(reference_economy(), kReferenceHorizon);
  out << "quotative\n";
  write_text_table(out, quotative_table(result, 0));
  out << "\nrelative\n";
  write_text_table(out, relative_table(result, 2));
}

inline std::string reproduce_tables_text() {
  std::ostringstream os;
  reproduce_tables(os);
  return os.str();
}

}  // namespace rtm::cli
