#pragma once

// Exact rational quantities of currency. Every balance, dividend and rate in
// the library is a Ratio; nothing is rounded except at display time.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rtm {

using BigInt = boost::multiprecision::cpp_int;

class Ratio {
 public:
  Ratio() = default;
  Ratio(long long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Ratio(const BigInt& value) : value_(value) {}
  Ratio(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw std::domain_error("Ratio: zero denominator");
    if (denominator < 0)
      value_ = Rep(BigInt(-numerator), BigInt(-denominator));
    else
      value_ = Rep(numerator, denominator);
  }

  /// Accepts "12", "-3/4", "0.055", "1.5e3". Returns nullopt on malformed text.
  static std::optional<Ratio> parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  int sign() const { return value_.sign(); }
  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }

  /// Lossy; for diagnostics only.
  double to_double() const { return value_.convert_to<double>(); }

  /// "n" or "n/d" in lowest terms.
  std::string str() const {
    auto den = denominator();
    if (den == 1) return numerator().str();
    return numerator().str() + "/" + den.str();
  }

  Ratio operator-() const { return Ratio(Rep(-value_)); }
  Ratio& operator+=(const Ratio& o) { value_ += o.value_; return *this; }
  Ratio& operator-=(const Ratio& o) { value_ -= o.value_; return *this; }
  Ratio& operator*=(const Ratio& o) { value_ *= o.value_; return *this; }
  Ratio& operator/=(const Ratio& o) {
    if (o.is_zero()) throw std::domain_error("Ratio: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Ratio operator+(Ratio a, const Ratio& b) { return a += b; }
  friend Ratio operator-(Ratio a, const Ratio& b) { return a -= b; }
  friend Ratio operator*(Ratio a, const Ratio& b) { return a *= b; }
  friend Ratio operator/(Ratio a, const Ratio& b) { return a /= b; }

  friend bool operator==(const Ratio& a, const Ratio& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.str(); }

 private:
  using Rep = boost::multiprecision::cpp_rational;
  explicit Ratio(Rep value) : value_(std::move(value)) {}

  Rep value_{0};
};

/// Quantity of currency units. Ledger balances are never negative; deltas may be.
using Amount = Ratio;
/// Dimensionless rate per period.
using Rate = Ratio;

inline Ratio abs(const Ratio& x) { return x.sign() < 0 ? -x : x; }

inline Ratio pow_ratio(const Ratio& base, std::uint64_t k) {
  Ratio result{1};
  Ratio square = base;
  while (k != 0) {
    if (k & 1U) result *= square;
    k >>= 1U;
    if (k != 0) square *= square;
  }
  return result;
}

inline BigInt pow10(unsigned exponent) {
  BigInt p = 1;
  for (unsigned i = 0; i < exponent; ++i) p *= 10;
  return p;
}

constexpr unsigned kMaxDisplayDecimals = 12;

/// Decimal text rounded half away from zero, '.' separator, no exponent.
/// A value that rounds to zero prints without a sign.
inline std::string round_display(const Ratio& x, unsigned decimals) {
  if (decimals > kMaxDisplayDecimals)
    throw std::invalid_argument("round_display: at most 12 decimals");
  const BigInt num = x.numerator();
  const BigInt den = x.denominator();
  const bool negative = num < 0;
  const BigInt scaled = (negative ? BigInt(-num) : num) * pow10(decimals);
  BigInt quotient = scaled / den;
  const BigInt remainder = scaled % den;
  if (2 * remainder >= den) quotient += 1;

  std::string digits = quotient.str();
  if (digits.size() <= decimals) digits.insert(0, decimals + 1 - digits.size(), '0');
  std::string out;
  if (negative && quotient != 0) out.push_back('-');
  out.append(digits, 0, digits.size() - decimals);
  if (decimals > 0) {
    out.push_back('.');
    out.append(digits, digits.size() - decimals, decimals);
  }
  return out;
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  return true;
}

// Decimal digits only; leading zeros would otherwise select octal.
inline BigInt from_digits(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return BigInt{std::string(digits)};
}

inline std::optional<BigInt> parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) return std::nullopt;
  BigInt v = from_digits(s);
  return negative ? BigInt(-v) : v;
}

inline std::optional<Ratio> parse_decimal(std::string_view s) {
  long long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    auto exp_part = parse_integer(s.substr(e + 1));
    if (!exp_part || *exp_part > 4096 || *exp_part < -4096) return std::nullopt;
    exponent = exp_part->convert_to<long long>();
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) return std::nullopt;
  if (!int_part.empty() && !all_digits(int_part)) return std::nullopt;
  if (!frac_part.empty() && !all_digits(frac_part)) return std::nullopt;

  BigInt mantissa = from_digits(std::string(int_part) + std::string(frac_part));
  exponent -= static_cast<long long>(frac_part.size());
  if (negative) mantissa = -mantissa;
  if (exponent >= 0) return Ratio(mantissa * pow10(static_cast<unsigned>(exponent)));
  return Ratio(mantissa, pow10(static_cast<unsigned>(-exponent)));
}

}  // namespace detail

inline std::optional<Ratio> Ratio::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = detail::parse_integer(text.substr(0, slash));
    auto den = detail::parse_integer(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Ratio(*num, *den);
  }
  return detail::parse_decimal(text);
}

}  // namespace rtm
