#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace qrbf {

/// Exact rational with 64-bit numerator and denominator.
///
/// Every quantity produced by the exact testers is a ratio of integer counts
/// (usually dyadic), so arithmetic is carried out in 128-bit intermediates and
/// reduced back; results that do not fit in 64 bits throw std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num);  // NOLINT: implicit from integers is intended
  Rational(std::int64_t num, std::int64_t den);

  /// num / 2^exp.
  static Rational dyadic(std::int64_t num, int exp);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  double to_double() const noexcept;
  long double to_long_double() const noexcept;
  /// Renders as `num/den`, always with an explicit denominator.
  std::string to_string() const;

  Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

  /// Parses `num/den` or a bare integer.
  static Rational parse(const std::string& text);

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational pow(const Rational& base, unsigned exponent);

}  // namespace qrbf
