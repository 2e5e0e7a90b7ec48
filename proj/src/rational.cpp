#include "gearsynth/rational.hpp"

#include <cctype>
#include <limits>

namespace gearsynth {

namespace {

using Wide = __int128;

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

Wide wide_gcd(Wide a, Wide b) {
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr Wide kInt64Max = std::numeric_limits<std::int64_t>::max();

}  // namespace

Rational Rational::make(__int128 numerator, __int128 denominator) {
  if (denominator == 0) throw std::invalid_argument("rational: zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  if (numerator == 0) return Rational();
  const Wide g = wide_gcd(wide_abs(numerator), denominator);
  numerator /= g;
  denominator /= g;
  if (wide_abs(numerator) > kInt64Max || denominator > kInt64Max)
    throw std::overflow_error("rational: reduced value exceeds 64-bit range");
  Rational r;
  r.num_ = static_cast<std::int64_t>(numerator);
  r.den_ = static_cast<std::int64_t>(denominator);
  return r;
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  *this = make(numerator, denominator);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::make(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::make(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::make(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::invalid_argument("rational: division by zero");
  return Rational::make(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // int64 * int64 always fits __int128
  const Wide lhs = Wide(a.num_) * b.den_;
  const Wide rhs = Wide(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::str_fraction() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

// Parses a run of ASCII digits into v, rejecting overflow past 18 digits.
bool take_digits(std::string_view& s, std::int64_t& v, int& count) {
  v = 0;
  count = 0;
  while (!s.empty() && std::isdigit(static_cast<unsigned char>(s.front()))) {
    if (++count > 18) return false;
    v = v * 10 + (s.front() - '0');
    s.remove_prefix(1);
  }
  return count > 0;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  const auto fail = [&text]() -> Rational {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  };

  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  std::int64_t whole = 0;
  int digits = 0;
  if (!take_digits(s, whole, digits)) return fail();

  if (s.empty()) return Rational(negative ? -whole : whole);

  if (s.front() == '/') {
    s.remove_prefix(1);
    std::int64_t den = 0;
    if (!take_digits(s, den, digits) || !s.empty()) return fail();
    if (den == 0) throw std::invalid_argument("rational: zero denominator in '" + std::string(text) + "'");
    return Rational(negative ? -whole : whole, den);
  }

  if (s.front() == '.') {
    s.remove_prefix(1);
    std::int64_t frac = 0;
    int frac_digits = 0;
    if (!take_digits(s, frac, frac_digits) || !s.empty()) return fail();
    if (digits + frac_digits > 18) return fail();
    Wide scale = 1;
    for (int i = 0; i < frac_digits; ++i) scale *= 10;
    const Wide num = Wide(whole) * scale + frac;
    return make(negative ? -num : num, scale);
  }

  return fail();
}

}  // namespace gearsynth
