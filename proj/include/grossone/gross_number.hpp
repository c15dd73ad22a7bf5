#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grossone/rational.hpp"

namespace grossone {

/// A finite sum of terms c * G1^p with rational c and p.
///
/// Terms are kept in a map ordered by strictly descending exponent and zero
/// coefficients are never stored, so two numbers are equal exactly when their
/// term maps are identical. The empty map is zero.
class GrossNumber {
 public:
  using TermMap = std::map<Rational, Rational, std::greater<>>;  // exponent -> coefficient

  GrossNumber() = default;
  GrossNumber(const Rational& finite);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  GrossNumber(I finite) : GrossNumber(Rational(finite)) {}  // NOLINT(google-explicit-constructor)

  /// coefficient * G1^exponent
  static GrossNumber term(const Rational& coefficient, const Rational& exponent);
  static GrossNumber grossone() { return term(1, 1); }
  /// Builds from (coefficient, exponent) pairs; like exponents are summed.
  static GrossNumber from_terms(std::initializer_list<std::pair<Rational, Rational>> terms);
  /// Adopts a term map, dropping zero coefficients.
  static GrossNumber from_map(TermMap terms);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Leading (largest) exponent and its coefficient. Precondition: nonzero.
  const Rational& leading_exponent() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }
  /// Smallest exponent. Precondition: nonzero.
  const Rational& trailing_exponent() const { return terms_.rbegin()->first; }

  Rational coefficient_at(const Rational& exponent) const;

  /// True when the number has no term with a nonzero exponent.
  bool is_finite() const;
  /// The value when is_finite().
  std::optional<Rational> as_finite() const;
  /// Finite integer value, if any.
  std::optional<BigInt> as_integer() const;
  /// A single term c * G1^p; these are exactly the invertible numbers.
  bool is_monomial() const { return terms_.size() == 1; }

  friend bool operator==(const GrossNumber&, const GrossNumber&) = default;

 private:
  void insert(const Rational& exponent, const Rational& coefficient);

  TermMap terms_;
};

enum class Classification { Zero, PurelyFinite, Infinite, Infinitesimal, MixedFiniteInfinitesimal };

GrossNumber add(const GrossNumber& x, const GrossNumber& y);
GrossNumber sub(const GrossNumber& x, const GrossNumber& y);
GrossNumber mul(const GrossNumber& x, const GrossNumber& y);
GrossNumber negate(const GrossNumber& x);
GrossNumber abs(const GrossNumber& x);
GrossNumber pow_nat(const GrossNumber& x, std::uint64_t k);

inline constexpr std::size_t kDefaultMaxQuotientTerms = 64;

/// Long division in descending-exponent order. Throws DivisionByZero for y = 0
/// and DivisionInexact when the remainder is still nonzero after `max_terms`
/// quotient terms.
GrossNumber div_exact(const GrossNumber& x, const GrossNumber& y,
                      std::size_t max_terms = kDefaultMaxQuotientTerms);

inline constexpr std::size_t kTryDivideBudget = 2048;

/// Exact quotient when y divides x. The division stops as soon as the next
/// quotient exponent falls below what an exact quotient could contain, or
/// after `budget` quotient terms (reported as not dividing).
std::optional<GrossNumber> try_divide(const GrossNumber& x, const GrossNumber& y,
                                      std::size_t budget = kTryDivideBudget);

/// Sign of x - y read off the leading term of the difference.
std::strong_ordering compare(const GrossNumber& x, const GrossNumber& y);
int sign(const GrossNumber& x);

Classification classify(const GrossNumber& x);
std::string to_string(Classification c);

/// Evaluates sum c * n^p exactly. Throws NonExactSubstitution when some n^p is
/// irrational and InvalidArgument for n < 1.
Rational substitute(const GrossNumber& x, const BigInt& n);

/// Greatest common divisor of the numbers viewed as Laurent polynomials in a
/// root of G1, normalized as described for `primitive_split`. Zero inputs are
/// ignored; returns 1 when all are zero or when the gcd is a unit.
GrossNumber gcd(const std::vector<GrossNumber>& values);

/// Splits values jointly as unit * primitive, where unit = c * G1^p and the
/// primitive parts have integer coefficients with overall gcd 1, smallest
/// exponent 0 across all values, and a positive leading coefficient in the
/// first nonzero value.
struct UnitSplit {
  Rational scale;
  Rational exponent;
  GrossNumber unit() const { return GrossNumber::term(scale, exponent); }
};
UnitSplit primitive_split(const std::vector<GrossNumber>& values);

GrossNumber operator+(const GrossNumber& x, const GrossNumber& y);
GrossNumber operator-(const GrossNumber& x, const GrossNumber& y);
GrossNumber operator*(const GrossNumber& x, const GrossNumber& y);
GrossNumber operator-(const GrossNumber& x);

/// Canonical text in descending exponent order, e.g. "2*G1^2-1" (compact) or
/// "2*G1^2 - 1" (spaced). `symbol` replaces "G1".
std::string to_string(const GrossNumber& x, std::string_view symbol = "G1", bool spaced = false);
std::ostream& operator<<(std::ostream& os, const GrossNumber& x);

}  // namespace grossone
