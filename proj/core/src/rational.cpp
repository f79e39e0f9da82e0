#include "sinkloc/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace sinkloc {

namespace {

std::int64_t floor_div(__int128 a, __int128 b) {
  __int128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  if (q > std::numeric_limits<std::int64_t>::max() || q < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("rational result out of range");
  }
  return static_cast<std::int64_t>(q);
}

std::int64_t parse_int(std::string_view digits, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

Rational Rational::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(parse_int(text, text), 1);

  std::string_view int_part = text.substr(0, dot);
  std::string_view frac_part = text.substr(dot + 1);
  if (frac_part.empty() || frac_part.size() > 18 ||
      frac_part.find_first_not_of("0123456789") != std::string_view::npos) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  bool negative = !int_part.empty() && int_part.front() == '-';
  if (negative) int_part.remove_prefix(1);
  std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, text);
  if (whole < 0) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");

  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
  std::int64_t frac = parse_int(frac_part, text);
  __int128 num = static_cast<__int128>(whole) * scale + frac;
  if (num > std::numeric_limits<std::int64_t>::max()) {
    throw std::overflow_error("rational '" + std::string(text) + "' out of range");
  }
  auto n = static_cast<std::int64_t>(num);
  return Rational(negative ? -n : n, scale);
}

std::int64_t Rational::floor_times(std::int64_t value) const {
  return floor_div(static_cast<__int128>(num_) * value, den_);
}

std::int64_t Rational::ceil_reciprocal() const {
  if (num_ <= 0) throw std::domain_error("reciprocal of a non-positive rational");
  return (den_ + num_ - 1) / num_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

}  // namespace sinkloc
