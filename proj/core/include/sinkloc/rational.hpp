#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace sinkloc {

/// Exact positive-or-signed rational in lowest terms, denominator > 0.
/// Used for ε so that candidate strides are computed without rounding.
class Rational {
 public:
  constexpr Rational() = default;
  /// Throws std::invalid_argument on a zero denominator.
  Rational(std::int64_t numerator, std::int64_t denominator);

  /// Accepts "p/q", an integer, or a plain decimal such as "0.25".
  /// Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  [[nodiscard]] constexpr std::int64_t numerator() const noexcept { return num_; }
  [[nodiscard]] constexpr std::int64_t denominator() const noexcept { return den_; }
  [[nodiscard]] constexpr bool positive() const noexcept { return num_ > 0; }

  /// ⌊this · value⌋
  [[nodiscard]] std::int64_t floor_times(std::int64_t value) const;
  /// ⌈1 / this⌉, requires a positive value.
  [[nodiscard]] std::int64_t ceil_reciprocal() const;

  /// "p/q", or "p" when q = 1.
  [[nodiscard]] std::string str() const;

  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace sinkloc
