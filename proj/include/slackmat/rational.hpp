#ifndef SLACKMAT_RATIONAL_HPP
#define SLACKMAT_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace slackmat {

/**
 * Exact arbitrary-precision fraction.
 *
 * Always held in lowest terms with a positive denominator; zero is 0/1.
 * Every arithmetic result is canonical, so equality is structural.
 */
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  /// Throws InvalidInput when den == 0.
  Rational(long num, long den);

  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Accepts "a/b" or an integer literal, each with an optional sign.
  static Rational parse(std::string_view text);

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }

  Rational abs() const;
  Rational reciprocal() const;

  /// Canonical text: "n" for integers, otherwise "n/d".
  std::string to_string() const;

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using Vector = std::vector<Rational>;

}  // namespace slackmat

#endif  // SLACKMAT_RATIONAL_HPP
