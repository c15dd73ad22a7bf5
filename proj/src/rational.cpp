#include "grossone/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "grossone/error.hpp"

namespace grossone {

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational result;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw InvalidArgument("malformed fraction '" + std::string(text) + "'");
    result = Rational(BigInt(std::string(num), 10), BigInt(std::string(den), 10));
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) throw InvalidArgument("malformed decimal '" + std::string(text) + "'");
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    result = Rational(BigInt(std::string(whole) + std::string(frac), 10), scale);
  } else {
    if (!all_digits(body)) throw InvalidArgument("malformed integer '" + std::string(text) + "'");
    result = Rational(BigInt(std::string(body), 10));
  }
  return negative ? -result : result;
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw DivisionByZero("zero raised to a negative power");
    return Rational(1) / pow(-exponent);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

namespace {

// Splits den = 2^twos * 5^fives * rest.
void strip_two_five(BigInt den, unsigned long& twos, unsigned long& fives, BigInt& rest) {
  twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), BigInt(2).get_mpz_t());
  fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), BigInt(5).get_mpz_t());
  rest = den;
}

}  // namespace

bool Rational::has_terminating_decimal() const {
  unsigned long twos = 0, fives = 0;
  BigInt rest;
  strip_two_five(value_.get_den(), twos, fives, rest);
  return rest == 1;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  unsigned long twos = 0, fives = 0;
  BigInt rest;
  strip_two_five(value_.get_den(), twos, fives, rest);
  if (rest != 1) return value_.get_num().get_str() + "/" + value_.get_den().get_str();

  const unsigned long digits = std::max(twos, fives);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  BigInt scaled = abs().value_.get_num() * (scale / value_.get_den());
  std::string text = scaled.get_str();
  if (text.size() <= digits) text.insert(0, digits - text.size() + 1, '0');
  text.insert(text.size() - digits, ".");
  return sign() < 0 ? "-" + text : text;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

bool exact_root(const BigInt& value, unsigned long k, BigInt& root) {
  if (k == 0) return false;
  if (value < 0 && k % 2 == 0) return false;
  return mpz_root(root.get_mpz_t(), value.get_mpz_t(), k) != 0;
}

}  // namespace grossone
