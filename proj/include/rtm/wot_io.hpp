#pragma once

// Text formats for webs of trust.
//
// Edge list (CSV, header required):
//   issuer,subject,issued_at,validity
//   alice,bob,0,24
//
// Identities file: one id per line; a trailing "*" marks a seed member.
// Blank lines and lines starting with '#' are ignored.
//   alice *
//   bob

#include "rtm/error.hpp"
#include "rtm/wot.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace rtm {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = line.find(sep, start);
    out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

inline bool parse_u64(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace detail

struct IdentityEntry {
  IdentityId id;
  bool seed = false;
};

inline std::vector<IdentityEntry> read_identities(std::istream& in, const std::string& source) {
  std::vector<IdentityEntry> out;
  std::set<IdentityId> seen;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    IdentityEntry entry;
    if (line.back() == '*') {
      entry.seed = true;
      line = detail::trim(line.substr(0, line.size() - 1));
    }
    if (line.empty() || line.find_first_of(" \t,") != std::string_view::npos)
      throw InputError(source, line_no, "expected one identity id, optionally followed by '*'");
    entry.id = IdentityId(std::string(line));
    if (!seen.insert(entry.id).second) throw InputError(source, line_no, "duplicate identity " + entry.id.value);
    out.push_back(std::move(entry));
  }
  return out;
}

inline std::vector<Certification> read_edges(std::istream& in, const std::string& source) {
  std::vector<Certification> out;
  std::string raw;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto fields = detail::split(line, ',');
    if (!header_seen) {
      if (fields.size() != 4 || fields[0] != "issuer" || fields[1] != "subject" || fields[2] != "issued_at" ||
          fields[3] != "validity")
        throw InputError(source, line_no, "expected header issuer,subject,issued_at,validity");
      header_seen = true;
      continue;
    }
    if (fields.size() != 4) throw InputError(source, line_no, "expected 4 fields");
    Certification c;
    if (fields[0].empty() || fields[1].empty()) throw InputError(source, line_no, "empty identity id");
    c.issuer = IdentityId(std::string(fields[0]));
    c.subject = IdentityId(std::string(fields[1]));
    if (!detail::parse_u64(fields[2], c.issued_at)) throw InputError(source, line_no, "issued_at must be a non-negative integer");
    if (!detail::parse_u64(fields[3], c.validity) || c.validity == 0)
      throw InputError(source, line_no, "validity must be a positive integer");
    if (c.issuer == c.subject) throw InputError(source, line_no, "self-certification " + c.issuer.value);
    out.push_back(std::move(c));
  }
  if (!header_seen) throw InputError(source, 0, "missing header issuer,subject,issued_at,validity");
  return out;
}

/// Builds a graph; every edge endpoint must be a listed identity.
inline WotGraph build_graph(const std::vector<IdentityEntry>& identities, std::vector<Certification> edges,
                            const std::string& source = "edges") {
  WotGraph g;
  for (const auto& e : identities) g = g.with_identity(e.id, e.seed);
  for (const auto& c : edges) {
    if (!g.contains(c.issuer)) throw InputError(source, 0, "unknown identity " + c.issuer.value);
    if (!g.contains(c.subject)) throw InputError(source, 0, "unknown identity " + c.subject.value);
  }
  return g.with_certifications(std::move(edges));
}

inline void write_edges(std::ostream& out, const WotGraph& g) {
  out << "issuer,subject,issued_at,validity\n";
  for (const auto& c : g.certifications())
    out << c.issuer.value << ',' << c.subject.value << ',' << c.issued_at << ',' << c.validity << '\n';
}

inline void write_identities(std::ostream& out, const WotGraph& g) {
  for (const auto& id : g.identities()) {
    out << id.value;
    if (g.seed_members().count(id) != 0) out << " *";
    out << '\n';
  }
}

}  // namespace rtm
