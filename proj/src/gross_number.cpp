#include "grossone/gross_number.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "grossone/error.hpp"

namespace grossone {

GrossNumber::GrossNumber(const Rational& finite) { insert(0, finite); }

GrossNumber GrossNumber::term(const Rational& coefficient, const Rational& exponent) {
  GrossNumber g;
  g.insert(exponent, coefficient);
  return g;
}

GrossNumber GrossNumber::from_terms(std::initializer_list<std::pair<Rational, Rational>> terms) {
  GrossNumber g;
  for (const auto& [coefficient, exponent] : terms) g.insert(exponent, coefficient);
  return g;
}

GrossNumber GrossNumber::from_map(TermMap terms) {
  std::erase_if(terms, [](const auto& kv) { return kv.second.is_zero(); });
  GrossNumber g;
  g.terms_ = std::move(terms);
  return g;
}

void GrossNumber::insert(const Rational& exponent, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational GrossNumber::coefficient_at(const Rational& exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational() : it->second;
}

bool GrossNumber::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

std::optional<Rational> GrossNumber::as_finite() const {
  if (!is_finite()) return std::nullopt;
  return terms_.empty() ? Rational() : terms_.begin()->second;
}

std::optional<BigInt> GrossNumber::as_integer() const {
  const auto v = as_finite();
  if (!v || !v->is_integer()) return std::nullopt;
  return v->numerator();
}

// Arithmetic -----------------------------------------------------------------

namespace {

void accumulate(GrossNumber::TermMap& into, const Rational& exponent, const Rational& coefficient) {
  auto [it, inserted] = into.try_emplace(exponent, coefficient);
  if (!inserted) it->second += coefficient;
}

}  // namespace

GrossNumber add(const GrossNumber& x, const GrossNumber& y) {
  GrossNumber::TermMap terms = x.terms();
  for (const auto& [e, c] : y.terms()) accumulate(terms, e, c);
  return GrossNumber::from_map(std::move(terms));
}

GrossNumber negate(const GrossNumber& x) {
  GrossNumber::TermMap terms = x.terms();
  for (auto& [e, c] : terms) c = -c;
  return GrossNumber::from_map(std::move(terms));
}

GrossNumber sub(const GrossNumber& x, const GrossNumber& y) { return add(x, negate(y)); }

GrossNumber mul(const GrossNumber& x, const GrossNumber& y) {
  GrossNumber::TermMap terms;
  for (const auto& [ex, cx] : x.terms())
    for (const auto& [ey, cy] : y.terms()) accumulate(terms, ex + ey, cx * cy);
  return GrossNumber::from_map(std::move(terms));
}

GrossNumber abs(const GrossNumber& x) { return sign(x) < 0 ? negate(x) : x; }

GrossNumber pow_nat(const GrossNumber& x, std::uint64_t k) {
  GrossNumber result(1);
  GrossNumber base = x;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    k >>= 1U;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

GrossNumber operator+(const GrossNumber& x, const GrossNumber& y) { return add(x, y); }
GrossNumber operator-(const GrossNumber& x, const GrossNumber& y) { return sub(x, y); }
GrossNumber operator*(const GrossNumber& x, const GrossNumber& y) { return mul(x, y); }
GrossNumber operator-(const GrossNumber& x) { return negate(x); }

namespace {

enum class DivisionOutcome { Exact, Inexact, OutOfTerms };

// Descending long division. An exact quotient never has an exponent below
// trailing(x) - trailing(y), which bounds the loop without a term budget.
DivisionOutcome long_divide(const GrossNumber& x, const GrossNumber& y, std::size_t max_terms,
                            GrossNumber& quotient) {
  if (y.is_zero()) throw DivisionByZero("division by zero gross-number");
  quotient = GrossNumber();
  if (x.is_zero()) return DivisionOutcome::Exact;

  const Rational floor_exponent = x.trailing_exponent() - y.trailing_exponent();
  GrossNumber::TermMap q;
  GrossNumber remainder = x;
  std::size_t produced = 0;
  while (!remainder.is_zero()) {
    if (produced == max_terms) {
      quotient = GrossNumber::from_map(std::move(q));
      return DivisionOutcome::OutOfTerms;
    }
    const Rational e = remainder.leading_exponent() - y.leading_exponent();
    if (e < floor_exponent) return DivisionOutcome::Inexact;
    const Rational c = remainder.leading_coefficient() / y.leading_coefficient();
    q.emplace(e, c);
    remainder = sub(remainder, mul(GrossNumber::term(c, e), y));
    ++produced;
  }
  quotient = GrossNumber::from_map(std::move(q));
  return DivisionOutcome::Exact;
}

}  // namespace

GrossNumber div_exact(const GrossNumber& x, const GrossNumber& y, std::size_t max_terms) {
  if (max_terms == 0) throw InvalidArgument("max_terms must be positive");
  GrossNumber quotient;
  switch (long_divide(x, y, max_terms, quotient)) {
    case DivisionOutcome::Exact:
      return quotient;
    case DivisionOutcome::Inexact:
      throw DivisionInexact("(" + to_string(x) + ")/(" + to_string(y) + ") is not a finite gross-number");
    case DivisionOutcome::OutOfTerms:
      break;
  }
  throw DivisionInexact("(" + to_string(x) + ")/(" + to_string(y) + ") did not terminate within " +
                        std::to_string(max_terms) + " quotient terms");
}

std::optional<GrossNumber> try_divide(const GrossNumber& x, const GrossNumber& y, std::size_t budget) {
  GrossNumber quotient;
  if (long_divide(x, y, budget, quotient) == DivisionOutcome::Exact)
    return quotient;
  return std::nullopt;
}

// Order and classification ---------------------------------------------------

int sign(const GrossNumber& x) { return x.is_zero() ? 0 : x.leading_coefficient().sign(); }

std::strong_ordering compare(const GrossNumber& x, const GrossNumber& y) {
  const int s = sign(sub(x, y));
  return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Classification classify(const GrossNumber& x) {
  if (x.is_zero()) return Classification::Zero;
  const int lead = x.leading_exponent().sign();
  if (lead > 0) return Classification::Infinite;
  if (lead < 0) return Classification::Infinitesimal;
  return x.size() == 1 ? Classification::PurelyFinite : Classification::MixedFiniteInfinitesimal;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Zero: return "Zero";
    case Classification::PurelyFinite: return "PurelyFinite";
    case Classification::Infinite: return "Infinite";
    case Classification::Infinitesimal: return "Infinitesimal";
    case Classification::MixedFiniteInfinitesimal: return "MixedFiniteInfinitesimal";
  }
  return "?";
}

// Substitution ---------------------------------------------------------------

Rational substitute(const GrossNumber& x, const BigInt& n) {
  if (n < 1) throw InvalidArgument("substitution needs a positive integer n, got " + n.get_str());
  Rational total;
  for (const auto& [exponent, coefficient] : x.terms()) {
    const BigInt num = exponent.numerator();
    const BigInt den = exponent.denominator();
    if (!den.fits_ulong_p() || !num.fits_slong_p())
      throw SubstitutionOverflow("exponent " + exponent.to_string() + " is too large to substitute");
    BigInt base = n;
    if (den != 1 && !exact_root(n, den.get_ui(), base))
      throw NonExactSubstitution("exponent " + exponent.to_string() + ": " + n.get_str() + "^(1/" + den.get_str() +
                                 ") is not rational");
    total += coefficient * Rational(base).pow(num.get_si());
  }
  return total;
}

// Laurent-polynomial gcd -----------------------------------------------------

namespace {

// Dense integer polynomial, index = degree.
using Dense = std::vector<BigInt>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(Dense& p) {
  BigInt g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b, made primitive.
Dense pseudo_remainder(Dense a, const Dense& b) {
  const BigInt& lb = b.back();
  while (a.size() >= b.size()) {
    const BigInt la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
    a.pop_back();
    trim(a);
  }
  make_primitive(a);
  return a;
}

// Primitive remainder sequence; the result is primitive with positive leading coefficient.
Dense poly_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Dense r = pseudo_remainder(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

constexpr long kMaxDenseDegree = 96;

BigInt exponent_scale(const std::vector<GrossNumber>& values) {
  BigInt scale = 1;
  for (const auto& v : values)
    for (const auto& [e, c] : v.terms()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.denominator().get_mpz_t());
  return scale;
}

// Scaled integer exponent of a term, or nullopt if it does not fit.
std::optional<long> scaled_exponent(const Rational& e, const BigInt& scale) {
  const BigInt v = e.numerator() * (scale / e.denominator());
  if (!v.fits_slong_p()) return std::nullopt;
  return v.get_si();
}

std::optional<Dense> to_dense(const GrossNumber& g, const BigInt& scale) {
  const auto lo = scaled_exponent(g.trailing_exponent(), scale);
  const auto hi = scaled_exponent(g.leading_exponent(), scale);
  if (!lo || !hi || *hi - *lo > kMaxDenseDegree) return std::nullopt;
  BigInt common = 1;
  for (const auto& [e, c] : g.terms()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.denominator().get_mpz_t());
  Dense p(static_cast<std::size_t>(*hi - *lo + 1));
  for (const auto& [e, c] : g.terms())
    p[static_cast<std::size_t>(*scaled_exponent(e, scale) - *lo)] = c.numerator() * (common / c.denominator());
  return p;
}

}  // namespace

UnitSplit primitive_split(const std::vector<GrossNumber>& values) {
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  std::optional<Rational> min_exponent;
  int lead_sign = 0;
  for (const auto& v : values) {
    if (v.is_zero()) continue;
    if (lead_sign == 0) lead_sign = v.leading_coefficient().sign();
    for (const auto& [e, c] : v.terms()) {
      const BigInt n = c.numerator();
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
      if (!min_exponent || e < *min_exponent) min_exponent = e;
    }
  }
  if (lead_sign == 0) return {Rational(1), Rational(0)};
  Rational scale(num_gcd, den_lcm);
  if (lead_sign < 0) scale = -scale;
  return {scale, *min_exponent};
}

GrossNumber gcd(const std::vector<GrossNumber>& values) {
  std::vector<GrossNumber> nonzero;
  for (const auto& v : values)
    if (!v.is_zero()) nonzero.push_back(v);
  if (nonzero.empty()) return GrossNumber(1);

  const BigInt scale = exponent_scale(nonzero);
  std::optional<Dense> acc;
  for (const auto& v : nonzero) {
    auto dense = to_dense(v, scale);
    if (!dense) return GrossNumber(1);
    acc = acc ? poly_gcd(std::move(*acc), *dense) : poly_gcd(*dense, Dense{});
    if (acc->size() <= 1) return GrossNumber(1);
  }

  GrossNumber::TermMap terms;
  for (std::size_t i = 0; i < acc->size(); ++i)
    if (sgn((*acc)[i]) != 0) terms.emplace(Rational(BigInt(static_cast<long>(i)), scale), Rational((*acc)[i]));
  GrossNumber g = GrossNumber::from_map(std::move(terms));
  const UnitSplit split = primitive_split({g});
  return mul(g, GrossNumber::term(Rational(1) / split.scale, -split.exponent));
}

// Text -----------------------------------------------------------------------

namespace {

std::string exponent_text(const Rational& e) {
  return e.has_terminating_decimal() ? e.to_string() : "(" + e.to_string() + ")";
}

// One term without its sign.
std::string magnitude_text(const Rational& exponent, const Rational& magnitude, std::string_view symbol) {
  if (exponent.is_zero()) return magnitude.to_string();
  std::string s = magnitude == Rational(1) ? "" : magnitude.to_string() + "*";
  s += symbol;
  if (exponent != Rational(1)) s += "^" + exponent_text(exponent);
  return s;
}

}  // namespace

std::string to_string(const GrossNumber& x, std::string_view symbol, bool spaced) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : x.terms()) {
    const bool negative = c.sign() < 0;
    const std::string body = magnitude_text(e, c.abs(), symbol);
    if (first) {
      out = (negative ? "-" : "") + body;
      first = false;
    } else if (spaced) {
      out += (negative ? " - " : " + ") + body;
    } else {
      out += (negative ? "-" : "+") + body;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GrossNumber& x) { return os << to_string(x); }

}  // namespace grossone
