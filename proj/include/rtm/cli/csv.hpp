#pragma once

#include "rtm/engine.hpp"
#include "rtm/money.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rtm::cli {

class IoError : public std::runtime_error {
 public:
  IoError(const std::string& path, const std::string& what) : std::runtime_error(path + ": " + what) {}
};

/// A CSV document: '#'-prefixed metadata lines, a header row, data rows.
struct CsvTable {
  std::vector<std::string> metadata;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline void write_csv(std::ostream& out, const CsvTable& table) {
  for (const auto& m : table.metadata) out << "# " << m << '\n';
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out << ',';
      out << fields[i];
    }
    out << '\n';
  };
  line(table.header);
  for (const auto& r : table.rows) line(r);
}

inline std::string to_csv_string(const CsvTable& table) {
  std::ostringstream os;
  write_csv(os, table);
  return os.str();
}

/// Writes to "<path>.tmp" and renames over `path`, so readers never observe a
/// partial file.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(tmp.string(), "cannot open for writing");
    out << contents;
    out.flush();
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw IoError(tmp.string(), "write failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw IoError(path.string(), "rename failed: " + ec.message());
  }
}

/// Long format, one line per member per period:
/// t,member,balance,balance_ud,M,M_over_N,ud,gini
inline CsvTable simulation_table(const SimulationResult& result, unsigned decimals,
                                 std::vector<std::string> metadata = {}) {
  CsvTable table;
  table.metadata = std::move(metadata);
  table.header = {"t", "member", "balance", "balance_ud", "M", "M_over_N", "ud", "gini"};
  for (const auto& row : result.rows) {
    const std::string t = std::to_string(row.t);
    const std::string mass = round_display(row.mass, decimals);
    const std::string per_capita = round_display(row.mass_per_capita, decimals);
    const std::string ud = round_display(row.ud, decimals);
    const std::string g = round_display(row.gini, decimals);
    for (const auto& [id, balance] : row.balances) {
      table.rows.push_back({t, id.value, round_display(balance, decimals),
                            round_display(row.relative_balances.at(id), decimals), mass, per_capita, ud, g});
    }
  }
  return table;
}

inline void emit_csv(const SimulationResult& result, unsigned decimals, const std::filesystem::path& path,
                     std::vector<std::string> metadata = {}) {
  write_file_atomic(path, to_csv_string(simulation_table(result, decimals, std::move(metadata))));
}

}  // namespace rtm::cli
