#include "folidx/rational.hpp"

#include <cctype>
#include <ostream>

#include "folidx/errors.hpp"

namespace folidx {

namespace mp = boost::multiprecision;

Rational::Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  // cpp_rational reduces to lowest terms but insists on a positive input
  // denominator, so move the sign up front.
  if (den < 0)
    value_ = mp::cpp_rational(-num, -den);
  else
    value_ = mp::cpp_rational(num, den);
}

namespace {

BigInt parse_integer(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer literal");
  size_t i = text[0] == '-' ? 1 : 0;
  if (i == text.size()) throw ParseError("bare sign is not an integer");
  for (size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw ParseError("bad integer literal: " + std::string(text));
  }
  return BigInt(std::string(text));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ParseError("rational literal with zero denominator: " + std::string(text));
  return Rational(num, den);
}

BigInt Rational::floor() const {
  BigInt num = numerator();
  BigInt den = denominator();
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

double Rational::to_double() const {
  // Division of two exactly-representable doubles is correctly rounded, so
  // prefer that path; fall back to the multiprecision conversion otherwise.
  BigInt num = numerator();
  BigInt den = denominator();
  const BigInt limit = BigInt(1) << 53;
  if (abs(num) <= limit && den <= limit)
    return num.convert_to<double>() / den.convert_to<double>();
  return value_.convert_to<double>();
}

std::string Rational::str() const {
  std::string s = numerator().str();
  if (!is_integer()) {
    s += '/';
    s += denominator().str();
  }
  return s;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ValidationError("division of rational by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

}  // namespace folidx
