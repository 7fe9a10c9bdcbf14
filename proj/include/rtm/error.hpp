#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rtm {

enum class ErrorKind {
  population_zero,
  zero_ud,
  insufficient_balance,
  unknown_member,
  duplicate_join,
  unknown_leaver,
  empty_population,
  duplicate_identity,
  unknown_identity,
  non_member_issuer,
  self_certification,
  quota_exceeded,
  duplicate_active_cert,
  invalid_argument,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::population_zero: return "population-zero";
    case ErrorKind::zero_ud: return "zero-ud";
    case ErrorKind::insufficient_balance: return "insufficient-balance";
    case ErrorKind::unknown_member: return "unknown-member";
    case ErrorKind::duplicate_join: return "duplicate-join";
    case ErrorKind::unknown_leaver: return "unknown-leaver";
    case ErrorKind::empty_population: return "empty-population";
    case ErrorKind::duplicate_identity: return "duplicate-identity";
    case ErrorKind::unknown_identity: return "unknown-identity";
    case ErrorKind::non_member_issuer: return "non-member-issuer";
    case ErrorKind::self_certification: return "self-certification";
    case ErrorKind::quota_exceeded: return "quota-exceeded";
    case ErrorKind::duplicate_active_cert: return "duplicate-active-cert";
    case ErrorKind::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

/// Raised by every model operation whose precondition fails at runtime.
/// The CLI maps it to exit code 3.
class ModelError : public std::runtime_error {
 public:
  ModelError(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed or invalid input text (config files, edge lists). Carries the
/// 1-based line it refers to, or 0 when no line applies. Exit code 2.
class InputError : public std::runtime_error {
 public:
  InputError(std::string source, std::size_t line, const std::string& message)
      : std::runtime_error(format(source, line, message)), source_(std::move(source)), line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& source, std::size_t line, const std::string& message) {
    if (line == 0) return source + ": " + message;
    return source + ":" + std::to_string(line) + ": " + message;
  }

  std::string source_;
  std::size_t line_;
};

}  // namespace rtm
