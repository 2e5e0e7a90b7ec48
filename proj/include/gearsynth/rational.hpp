#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gearsynth {

/// Exact rational number on int64 storage.
///
/// Always held in canonical form: denominator > 0, gcd(|num|, den) == 1.
/// Arithmetic goes through 128-bit intermediates and throws
/// std::overflow_error if a reduced result no longer fits in int64, so a
/// result that comes back is exact. Feasibility decisions built on this
/// type are bit-identical across runs and platforms.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t numerator, std::int64_t denominator);

  /// Overflow-checked construction from 128-bit parts. Throws
  /// std::invalid_argument on zero denominator, std::overflow_error if the
  /// reduced value does not fit int64.
  static Rational make(__int128 numerator, __int128 denominator);

  /// Accepts "p", "p/q", or a plain decimal like "79.4" / "-0.05"
  /// (converted exactly, e.g. 79.4 -> 397/5). Throws std::invalid_argument
  /// on malformed input or zero denominator.
  static Rational parse(std::string_view text);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "p" when integral, "p/q" otherwise.
  std::string str() const;
  /// Always "p/q", e.g. "20/1".
  std::string str_fraction() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);  // throws on b == 0
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace gearsynth
