#include "slackmat/rational.hpp"

#include <cctype>
#include <ostream>

#include "slackmat/errors.hpp"

namespace slackmat {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw InvalidInput("zero denominator");
  value_ = mpq_class(num, 1);
  value_ /= mpq_class(den, 1);
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) throw InvalidInput("malformed rational '" + std::string(text) + "'");
    return Rational(mpq_class(parse_integer(text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  // the denominator may not carry its own sign
  if (!is_integer_literal(num) || den.empty() || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+')
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  mpz_class d = parse_integer(den);
  if (d == 0) throw InvalidInput("zero denominator");
  return Rational(mpq_class(parse_integer(num), d));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const { return Rational(1) / *this; }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidInput("division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace slackmat
