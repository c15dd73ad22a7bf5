#include "normal_form.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "grossone/error.hpp"

namespace grossone::nf {

namespace {

const Expr& one_expr() {
  static const Expr e = Expr::atom(GrossNumber(1));
  return e;
}

bool is_atom_value(const Expr& e, const Rational& r) {
  return e.is_atom() && e.value() == GrossNumber(r);
}

std::optional<long> small_integer(const Expr& e) {
  if (!e.is_atom()) return std::nullopt;
  const auto v = e.value().as_integer();
  if (!v || !v->fits_slong_p()) return std::nullopt;
  return v->get_si();
}

bool is_unit(const GrossNumber& g) { return g.is_monomial(); }

// b * G1^e raised to the integer k.
GrossNumber unit_power(const GrossNumber& unit, long k) {
  return GrossNumber::term(unit.leading_coefficient().pow(k), unit.leading_exponent() * Rational(k));
}

// b^e for rational b and e when the result is rational.
std::optional<Rational> rational_power(const Rational& b, const Rational& e) {
  if (e.is_integer()) {
    if (!e.numerator().fits_slong_p()) return std::nullopt;
    if (b.is_zero() && e.sign() < 0) return std::nullopt;
    return b.pow(e.numerator().get_si());
  }
  if (!e.denominator().fits_ulong_p() || !e.numerator().fits_slong_p()) return std::nullopt;
  const unsigned long k = e.denominator().get_ui();
  BigInt num, den;
  if (!exact_root(b.numerator(), k, num) || !exact_root(b.denominator(), k, den)) return std::nullopt;
  if (b.sign() == 0 && e.sign() < 0) return std::nullopt;
  return Rational(num, den).pow(e.numerator().get_si());
}

Expr add_exponents(const Expr& a, const Expr& b) {
  if (a.is_atom() && b.is_atom()) return Expr::atom(a.value() + b.value());
  return simplify(Expr::add({a, b}));
}

Expr scale_exponent(const Expr& a, const Expr& b) {
  if (a.is_atom() && b.is_atom()) return Expr::atom(a.value() * b.value());
  return simplify(Expr::mul({a, b}));
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].base < b[j].base)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].base < a[i].base) {
      out.push_back(b[j++]);
    } else {
      Expr e = add_exponents(a[i].exponent, b[j].exponent);
      if (!is_atom_value(e, 0)) out.push_back({a[i].base, std::move(e)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Folds whatever part of each factor is representable into the coefficient.
void normalize_term(GrossNumber& coef, Monomial& m) {
  Monomial out;
  for (Factor f : m) {
    if (coef.is_zero()) break;
    if (is_atom_value(f.exponent, 0)) continue;
    if (!f.base.is_atom()) {
      out.push_back(std::move(f));
      continue;
    }
    const GrossNumber& b = f.base.value();
    if (b == GrossNumber(1)) continue;
    if (b.is_zero() || !f.exponent.is_atom()) {
      out.push_back(std::move(f));
      continue;
    }
    GrossNumber e = f.exponent.value();
    const BigInt whole = e.coefficient_at(0).floor();
    if (is_unit(b)) {
      if (e.is_finite()) {
        const Rational r = *e.as_finite();
        if (const auto scale = rational_power(b.leading_coefficient(), r)) {
          coef = coef * GrossNumber::term(*scale, b.leading_exponent() * r);
          continue;
        }
      }
      if (whole.fits_slong_p() && std::abs(whole.get_si()) <= kMaxUnitShift) {
        coef = coef * unit_power(b, whole.get_si());
        e = e - GrossNumber(Rational(whole));
      }
    } else if (whole > 0 && whole <= kMaxAtomPower) {
      coef = coef * pow_nat(b, whole.get_ui());
      e = e - GrossNumber(Rational(whole));
    } else if (whole < 0) {
      long absorbed = 0;
      const long wanted = whole >= -kMaxAtomPower ? -whole.get_si() : kMaxAtomPower;
      while (absorbed < wanted) {
        auto q = try_divide(coef, b);
        if (!q) break;
        coef = std::move(*q);
        ++absorbed;
      }
      e = e + GrossNumber(absorbed);
    }
    if (e.is_zero()) continue;
    out.push_back({f.base, Expr::atom(std::move(e))});
  }
  m = coef.is_zero() ? Monomial{} : std::move(out);
}

void add_term(Poly& p, GrossNumber coef, Monomial m) {
  normalize_term(coef, m);
  if (coef.is_zero()) return;
  auto [it, inserted] = p.try_emplace(std::move(m), coef);
  if (!inserted) {
    it->second = it->second + coef;
    if (it->second.is_zero()) p.erase(it);
  }
}

Poly constant_poly(const GrossNumber& c) {
  Poly p;
  if (!c.is_zero()) p.emplace(Monomial{}, c);
  return p;
}

Poly one_poly() { return constant_poly(GrossNumber(1)); }

bool is_one(const Poly& p) { return is_constant(p) && constant_value(p) == GrossNumber(1); }

Poly add_polys(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [m, c] : b) add_term(out, c, m);
  return out;
}

Poly mul_polys(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) add_term(out, ca * cb, multiply(ma, mb));
  return out;
}

Poly scale_poly(const Poly& p, const GrossNumber& c) {
  Poly out;
  for (const auto& [m, coef] : p) add_term(out, coef * c, m);
  return out;
}

// Exact division of every coefficient; nullopt if one does not divide.
std::optional<Poly> divide_coefficients(const Poly& p, const GrossNumber& d) {
  Poly out;
  for (const auto& [m, c] : p) {
    auto q = try_divide(c, d);
    if (!q) return std::nullopt;
    add_term(out, std::move(*q), m);
  }
  return out;
}

GrossNumber inverse_unit(const UnitSplit& u) {
  return GrossNumber::term(Rational(1) / u.scale, -u.exponent);
}

GrossNumber content(const Poly& p) {
  std::vector<GrossNumber> coefs;
  for (const auto& [m, c] : p) coefs.push_back(c);
  return gcd(coefs);
}

std::vector<GrossNumber> coefficients(const Poly& p) {
  std::vector<GrossNumber> out;
  for (const auto& [m, c] : p) out.push_back(c);
  return out;
}

// Family collection -----------------------------------------------------------
//
// Terms c1*q^(s+k1) and c2*q^(s+k2) over a non-unit atom q are merged into
// (c1*q^(k1-k) + c2*q^(k2-k)) * q^(s+k) with k = min(k1, k2).

struct Split {
  Monomial key;
  std::map<Expr, std::pair<GrossNumber, long>> offsets;  // base -> (s, k)
};

bool splittable(const Factor& f) {
  return f.base.is_atom() && !is_unit(f.base.value()) && !f.base.value().is_zero() && f.exponent.is_atom();
}

std::optional<Split> split_monomial(const Monomial& m) {
  Split s;
  for (const auto& f : m) {
    if (!splittable(f)) {
      s.key.push_back(f);
      continue;
    }
    const GrossNumber& e = f.exponent.value();
    const BigInt whole = e.coefficient_at(0).floor();
    if (!whole.fits_slong_p()) return std::nullopt;
    const GrossNumber rest = e - GrossNumber(Rational(whole));
    s.offsets.emplace(f.base, std::make_pair(rest, whole.get_si()));
    if (!rest.is_zero()) s.key.push_back({f.base, Expr::atom(rest)});
  }
  return s;
}

Poly collect_families(const Poly& p) {
  bool any_negative = false;
  for (const auto& [m, c] : p)
    for (const auto& f : m)
      if (splittable(f) && f.exponent.value().coefficient_at(0).sign() < 0) any_negative = true;
  if (!any_negative) return p;

  struct Member {
    const Monomial* monomial;
    const GrossNumber* coef;
    Split split;
  };
  std::map<Monomial, std::vector<Member>, MonomialOrder> groups;
  Poly out;
  for (const auto& [m, c] : p) {
    auto s = split_monomial(m);
    if (!s) {
      add_term(out, c, m);
      continue;
    }
    Monomial key = s->key;
    groups[std::move(key)].push_back({&m, &c, std::move(*s)});
  }
  for (auto& [key, members] : groups) {
    if (members.size() == 1) {
      add_term(out, *members.front().coef, *members.front().monomial);
      continue;
    }
    std::map<Expr, std::pair<GrossNumber, long>> lowest;
    for (const auto& mem : members)
      for (const auto& [base, sk] : mem.split.offsets) {
        auto [it, inserted] = lowest.try_emplace(base, sk);
        if (!inserted) it->second.second = std::min(it->second.second, sk.second);
      }
    for (auto& [base, sk] : lowest) {
      for (const auto& mem : members)
        if (!mem.split.offsets.contains(base)) sk.second = std::min(sk.second, 0L);
    }
    GrossNumber total;
    bool feasible = true;
    for (const auto& mem : members) {
      GrossNumber c = *mem.coef;
      for (const auto& [base, sk] : lowest) {
        const auto it = mem.split.offsets.find(base);
        const long k = it == mem.split.offsets.end() ? 0 : it->second.second;
        const long shift = k - sk.second;
        if (shift > kMaxAtomPower) feasible = false;
        if (shift > 0 && feasible) c = c * pow_nat(base.value(), static_cast<std::uint64_t>(shift));
      }
      total = total + c;
    }
    if (!feasible) {
      for (const auto& mem : members) add_term(out, *mem.coef, *mem.monomial);
      continue;
    }
    Monomial merged;
    for (const auto& f : key)
      if (!lowest.contains(f.base)) merged.push_back(f);
    for (const auto& [base, sk] : lowest) {
      const GrossNumber e = sk.first + GrossNumber(sk.second);
      if (!e.is_zero()) merged.push_back({base, Expr::atom(e)});
    }
    std::sort(merged.begin(), merged.end(), [](const Factor& a, const Factor& b) { return a.base < b.base; });
    add_term(out, total, std::move(merged));
  }
  return out;
}

// Fractions -------------------------------------------------------------------

Fraction power(const Fraction& f, const Expr& exponent);

bool resolvable(const Factor& f) {
  const auto k = small_integer(f.exponent);
  if (!k || *k == 0) return false;
  if (f.base.is_atom()) return !is_unit(f.base.value()) && *k < 0 && -*k <= kMaxAtomPower;
  if (f.base.kind() == ExprKind::FloorSqrt) return *k < 0 && -*k <= kMaxAtomPower;
  return std::abs(*k) <= kMaxPolyPower;
}

bool has_resolvable(const Poly& p) {
  for (const auto& [m, c] : p)
    for (const auto& f : m)
      if (resolvable(f)) return true;
  return false;
}

Fraction from_poly(Poly p) { return Fraction{std::move(p), one_poly()}; }

Fraction normalize(Fraction f);

Fraction resolve_poly(const Poly& p) {
  Fraction total = from_poly(Poly{});
  for (const auto& [m, c] : p) {
    Monomial rest;
    Fraction term = from_poly(Poly{});
    std::vector<Factor> pending;
    for (const auto& f : m) (resolvable(f) ? pending : rest).push_back(f);
    Poly base;
    add_term(base, c, rest);
    term = from_poly(std::move(base));
    for (const auto& f : pending) {
      const long k = *small_integer(f.exponent);
      if (f.base.is_atom() || f.base.kind() == ExprKind::FloorSqrt) {
        Poly den;
        add_term(den, GrossNumber(1), Monomial{{f.base, Expr::atom(GrossNumber(-k))}});
        term = divide(term, from_poly(std::move(den)));
      } else {
        term = mul(term, power(normal_form(f.base), Expr::atom(GrossNumber(k))));
      }
    }
    total = add(total, term);
  }
  return total;
}

GrossNumber inverse(const GrossNumber& unit) {
  return GrossNumber::term(Rational(1) / unit.leading_coefficient(), -unit.leading_exponent());
}

void fold_constant_denominator(Fraction& f, GrossNumber d) {
  if (is_unit(d)) {
    f.num = scale_poly(f.num, inverse(d));
    f.den = one_poly();
    return;
  }
  if (auto q = divide_coefficients(f.num, d)) {
    f.num = std::move(*q);
    f.den = one_poly();
    return;
  }
  auto coefs = coefficients(f.num);
  coefs.push_back(d);
  const GrossNumber g = gcd(coefs);
  if (g != GrossNumber(1)) {
    f.num = *divide_coefficients(f.num, g);
    d = *try_divide(d, g);
  }
  const UnitSplit u = primitive_split({d});
  f.num = scale_poly(f.num, inverse_unit(u));
  d = d * inverse_unit(u);
  f.den = is_unit(d) ? one_poly() : constant_poly(d);
}

// Cancels a factor of a single-term denominator against every numerator term
// when no numerator exponent would become negative.
void cancel_monomial_factors(Fraction& f) {
  auto [den_m, den_c] = *f.den.begin();
  Monomial kept;
  for (const auto& df : den_m) {
    std::vector<Expr> remaining;
    bool ok = true;
    for (const auto& [m, c] : f.num) {
      const auto it = std::find_if(m.begin(), m.end(), [&](const Factor& nf) { return nf.base == df.base; });
      if (it == m.end()) {
        ok = false;
        break;
      }
      Expr delta = simplify(it->exponent - df.exponent);
      if (!delta.is_atom() || sign(delta.value()) < 0) {
        ok = false;
        break;
      }
      remaining.push_back(std::move(delta));
    }
    if (!ok) {
      kept.push_back(df);
      continue;
    }
    Poly num;
    std::size_t i = 0;
    for (const auto& [m, c] : f.num) {
      Monomial nm;
      for (const auto& nf : m) {
        if (nf.base == df.base) {
          if (!is_atom_value(remaining[i], 0)) nm.push_back({nf.base, remaining[i]});
        } else {
          nm.push_back(nf);
        }
      }
      add_term(num, c, std::move(nm));
      ++i;
    }
    f.num = std::move(num);
  }
  f.den.clear();
  add_term(f.den, den_c, std::move(kept));
}

Fraction normalize(Fraction f) {
  if (f.den.empty()) throw DivisionByZero("division by zero");
  if (has_resolvable(f.num) || has_resolvable(f.den)) {
    const Fraction n = resolve_poly(f.num);
    const Fraction d = resolve_poly(f.den);
    return divide(n, d);
  }
  f.num = collect_families(f.num);
  f.den = collect_families(f.den);
  if (f.den.empty()) throw DivisionByZero("division by zero");
  if (f.num.empty()) return Fraction{Poly{}, one_poly()};
  if (is_one(f.den)) return f;

  if (f.den.size() == 1 && !f.den.begin()->first.empty()) cancel_monomial_factors(f);
  if (f.num.empty()) return Fraction{Poly{}, one_poly()};

  if (is_constant(f.den)) {
    fold_constant_denominator(f, constant_value(f.den));
    return f;
  }

  if (f.den.size() == 1) {
    auto [m, c] = *f.den.begin();
    const UnitSplit u = primitive_split({c});
    f.num = scale_poly(f.num, inverse_unit(u));
    c = c * inverse_unit(u);
    auto coefs = coefficients(f.num);
    coefs.push_back(c);
    const GrossNumber g = gcd(coefs);
    if (g != GrossNumber(1)) {
      f.num = *divide_coefficients(f.num, g);
      c = *try_divide(c, g);
    }
    f.den.clear();
    add_term(f.den, c, m);
    return f;
  }

  const UnitSplit u = primitive_split(coefficients(f.den));
  f.num = scale_poly(f.num, inverse_unit(u));
  f.den = scale_poly(f.den, inverse_unit(u));
  const GrossNumber g = gcd({content(f.num), content(f.den)});
  if (g != GrossNumber(1)) {
    f.num = *divide_coefficients(f.num, g);
    f.den = *divide_coefficients(f.den, g);
  }
  if (f.num.size() == f.den.size()) {
    const auto& [m0, n0] = *f.num.begin();
    const auto& [d0m, d0] = *f.den.begin();
    if (!(MonomialOrder{}(m0, d0m) || MonomialOrder{}(d0m, m0))) {
      if (auto k = try_divide(n0, d0)) {
        bool proportional = true;
        auto it = f.den.begin();
        for (const auto& [m, c] : f.num) {
          if (MonomialOrder{}(m, it->first) || MonomialOrder{}(it->first, m) || c != *k * it->second) {
            proportional = false;
            break;
          }
          ++it;
        }
        if (proportional) return Fraction{constant_poly(*k), one_poly()};
      }
    }
  }
  return f;
}

Fraction constant_fraction(const GrossNumber& c) { return Fraction{constant_poly(c), one_poly()}; }

Fraction single_factor(const Expr& base, const Expr& exponent) {
  Poly p;
  add_term(p, GrossNumber(1), Monomial{{base, exponent}});
  return normalize(from_poly(std::move(p)));
}

// c^E for a nonzero atom c.
Fraction power_atom(const GrossNumber& c, const Expr& exponent) {
  if (c == GrossNumber(1)) return constant_fraction(GrossNumber(1));
  if (!is_unit(c)) return single_factor(Expr::atom(c), exponent);
  const Rational& a = c.leading_coefficient();
  const Rational& p = c.leading_exponent();
  Fraction out = constant_fraction(GrossNumber(1));
  if (!p.is_zero()) out = mul(out, single_factor(Expr::atom(GrossNumber::grossone()), scale_exponent(Expr::atom(p), exponent)));
  if (a != Rational(1)) out = mul(out, single_factor(Expr::atom(GrossNumber(a)), exponent));
  return out;
}

Fraction power_term(const Monomial& m, const GrossNumber& c, const Expr& exponent) {
  Fraction out = power_atom(c, exponent);
  for (const auto& f : m) out = mul(out, single_factor(f.base, scale_exponent(f.exponent, exponent)));
  return out;
}

Fraction power(const Fraction& f, const Expr& exponent) {
  if (exponent.is_atom()) {
    const GrossNumber& e = exponent.value();
    if (e.is_zero()) return constant_fraction(GrossNumber(1));
    if (f.num.empty()) {
      if (sign(e) > 0) return constant_fraction(GrossNumber());
      throw DivisionByZero("zero raised to a negative power");
    }
    if (is_one(f.num) && is_one(f.den)) return f;
    if (e == GrossNumber(1)) return f;
    if (const auto k = small_integer(exponent)) {
      if (is_constant(f.num) && is_one(f.den)) {
        const GrossNumber c = constant_value(f.num);
        if (is_unit(c)) return constant_fraction(unit_power(c, *k));
        if (*k > 0 && *k <= kMaxAtomPower) return constant_fraction(pow_nat(c, static_cast<std::uint64_t>(*k)));
        if (*k < 0 && -*k <= kMaxAtomPower)
          return divide(constant_fraction(GrossNumber(1)), constant_fraction(pow_nat(c, static_cast<std::uint64_t>(-*k))));
        return single_factor(Expr::atom(c), exponent);
      }
      if (std::abs(*k) <= kMaxPolyPower) {
        Fraction r = constant_fraction(GrossNumber(1));
        for (long i = 0; i < std::abs(*k); ++i) r = mul(r, f);
        return *k > 0 ? r : divide(constant_fraction(GrossNumber(1)), r);
      }
    }
  }
  if (f.num.size() == 1 && f.den.size() == 1) {
    const auto& [nm, nc] = *f.num.begin();
    const auto& [dm, dc] = *f.den.begin();
    return divide(power_term(nm, nc, exponent), power_term(dm, dc, exponent));
  }
  return single_factor(to_expr(f), exponent);
}

// Rendering back to trees -----------------------------------------------------

int mul_rank(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Atom: return e.value().is_finite() ? 0 : 2;
    case ExprKind::Pow:
    case ExprKind::FloorSqrt: return 1;
    case ExprKind::Add: return 3;
    default: return 4;
  }
}

Expr make_mul(std::vector<Expr> xs) {
  std::erase_if(xs, [](const Expr& x) { return is_atom_value(x, 1); });
  std::stable_sort(xs.begin(), xs.end(), [](const Expr& a, const Expr& b) {
    const int ra = mul_rank(a), rb = mul_rank(b);
    if (ra != rb) return ra < rb;
    return a < b;
  });
  return Expr::mul(std::move(xs));
}

double log2_abs(const Rational& r) {
  long ne = 0, de = 0;
  const double nm = mpz_get_d_2exp(&ne, r.value().get_num_mpz_t());
  const double dm = mpz_get_d_2exp(&de, r.value().get_den_mpz_t());
  return std::log2(std::fabs(nm)) + static_cast<double>(ne) - std::log2(dm) - static_cast<double>(de);
}

// j != 0 with c == b^j for a unit b, if any.
std::optional<long> exact_log(const GrossNumber& c, const GrossNumber& b) {
  if (!is_unit(c)) return std::nullopt;
  const Rational& cb = c.leading_coefficient();
  const Rational& ce = c.leading_exponent();
  const Rational& bb = b.leading_coefficient();
  const Rational& be = b.leading_exponent();
  std::vector<long> candidates;
  if (!be.is_zero()) {
    const Rational j = ce / be;
    if (!j.is_integer() || !j.numerator().fits_slong_p()) return std::nullopt;
    candidates.push_back(j.numerator().get_si());
  } else {
    if (!ce.is_zero()) return std::nullopt;
    if (bb.abs() == Rational(1)) {
      candidates.push_back(1);
    } else {
      const double est = log2_abs(cb) / log2_abs(bb);
      if (!std::isfinite(est) || std::fabs(est) > 1e7) return std::nullopt;
      const long j = std::lround(est);
      candidates = {j - 1, j, j + 1};
    }
  }
  for (const long j : candidates)
    if (j != 0 && unit_power(b, j) == c) return j;
  return std::nullopt;
}

// Moves powers of a factor's base out of the coefficient into its exponent.
Expr term_expr(GrossNumber c, const Monomial& m, bool split_unit, GrossNumber* unit_den) {
  std::vector<Expr> parts;
  for (const auto& f : m) {
    Expr exponent = f.exponent;
    if (f.base.is_atom() && f.exponent.is_atom() && c != GrossNumber(1)) {
      const GrossNumber& b = f.base.value();
      if (is_unit(b)) {
        if (const auto j = exact_log(c, b)) {
          exponent = Expr::atom(f.exponent.value() + GrossNumber(*j));
          c = GrossNumber(1);
        }
      } else if (!b.is_zero()) {
        long j = 0;
        while (j < kMaxAtomPower) {
          auto q = try_divide(c, b);
          if (!q) break;
          c = std::move(*q);
          ++j;
        }
        if (j > 0) exponent = Expr::atom(f.exponent.value() + GrossNumber(j));
      }
    }
    parts.push_back(is_atom_value(exponent, 1) ? f.base : Expr::pow(f.base, exponent));
  }
  if (split_unit && !m.empty()) {
    const UnitSplit u = primitive_split({c});
    const GrossNumber primitive = c * inverse_unit(u);
    const Rational p = u.exponent;
    const GrossNumber unum = GrossNumber::term(Rational(u.scale.numerator()), p.sign() > 0 ? p : Rational());
    *unit_den = GrossNumber::term(Rational(u.scale.denominator()), p.sign() < 0 ? -p : Rational());
    c = primitive * unum;
  }
  parts.push_back(Expr::atom(c));
  return make_mul(std::move(parts));
}

struct PolyExpr {
  Expr core;
  GrossNumber unit_den{1};
};

PolyExpr poly_expr(const Poly& p) {
  if (p.empty()) return {Expr::atom(GrossNumber())};
  if (p.size() == 1) {
    const auto& [m, c] = *p.begin();
    if (m.empty()) return {Expr::atom(c)};
    PolyExpr out;
    out.core = term_expr(c, m, true, &out.unit_den);
    return out;
  }
  const auto coefs = coefficients(p);
  GrossNumber g = gcd(coefs);
  std::vector<GrossNumber> primitive;
  for (const auto& c : coefs) {
    auto q = try_divide(c, g);
    if (!q) {
      g = GrossNumber(1);
      primitive = coefs;
      break;
    }
    primitive.push_back(std::move(*q));
  }
  const UnitSplit u = primitive_split(primitive);
  std::vector<Expr> terms;
  std::size_t i = 0;
  for (const auto& [m, c] : p) terms.push_back(term_expr(primitive[i++] * inverse_unit(u), m, false, nullptr));
  const Rational e = u.exponent;
  const GrossNumber unum = GrossNumber::term(Rational(u.scale.numerator()), e.sign() > 0 ? e : Rational());
  PolyExpr out;
  out.unit_den = GrossNumber::term(Rational(u.scale.denominator()), e.sign() < 0 ? -e : Rational());
  out.core = make_mul({Expr::atom(g * unum), Expr::add(std::move(terms))});
  return out;
}

}  // namespace

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.empty() != b.empty()) return !a.empty();
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (const auto c = a[i].base <=> b[i].base; c != 0) return c < 0;
    if (const auto c = a[i].exponent <=> b[i].exponent; c != 0) return c > 0;
  }
  return a.size() > b.size();
}

bool is_constant(const Poly& p) { return p.empty() || (p.size() == 1 && p.begin()->first.empty()); }

GrossNumber constant_value(const Poly& p) { return p.empty() ? GrossNumber() : p.begin()->second; }

Fraction add(const Fraction& a, const Fraction& b) {
  if (a.num.empty()) return b;
  if (b.num.empty()) return a;
  if (is_one(a.den) && is_one(b.den)) return normalize(Fraction{add_polys(a.num, b.num), one_poly()});
  if (a.den.size() == b.den.size() && std::equal(a.den.begin(), a.den.end(), b.den.begin(), [](const auto& x, const auto& y) {
        return !MonomialOrder{}(x.first, y.first) && !MonomialOrder{}(y.first, x.first) && x.second == y.second;
      }))
    return normalize(Fraction{add_polys(a.num, b.num), a.den});
  return normalize(Fraction{add_polys(mul_polys(a.num, b.den), mul_polys(b.num, a.den)), mul_polys(a.den, b.den)});
}

Fraction mul(const Fraction& a, const Fraction& b) {
  return normalize(Fraction{mul_polys(a.num, b.num), mul_polys(a.den, b.den)});
}

Fraction divide(const Fraction& a, const Fraction& b) {
  if (b.num.empty()) throw DivisionByZero("division by zero");
  return normalize(Fraction{mul_polys(a.num, b.den), mul_polys(a.den, b.num)});
}

Fraction normal_form(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Atom:
      return constant_fraction(e.value());
    case ExprKind::FloorSqrt:
      return single_factor(e, one_expr());
    case ExprKind::Add: {
      Fraction total = constant_fraction(GrossNumber());
      for (const auto& c : e.children()) total = add(total, normal_form(c));
      return total;
    }
    case ExprKind::Mul: {
      Fraction total = constant_fraction(GrossNumber(1));
      for (const auto& c : e.children()) total = mul(total, normal_form(c));
      return total;
    }
    case ExprKind::Div:
      return divide(normal_form(e.numerator()), normal_form(e.denominator()));
    case ExprKind::Pow:
      return power(normal_form(e.base()), simplify(e.exponent()));
  }
  return constant_fraction(GrossNumber());
}

Expr to_expr(const Fraction& f) {
  const PolyExpr num = poly_expr(f.num);
  if (is_one(f.den)) {
    if (num.unit_den == GrossNumber(1)) return num.core;
    return Expr::div(num.core, Expr::atom(num.unit_den));
  }
  const PolyExpr den = poly_expr(f.den);
  Expr top = num.core;
  if (den.unit_den != GrossNumber(1)) top = make_mul({Expr::atom(den.unit_den), top});
  Expr bottom = den.core;
  if (num.unit_den != GrossNumber(1)) bottom = make_mul({Expr::atom(num.unit_den), bottom});
  return Expr::div(top, bottom);
}

}  // namespace grossone::nf

namespace grossone {

Expr simplify(const Expr& e) { return nf::to_expr(nf::normal_form(e)); }

bool is_simplified(const Expr& e) { return simplify(e) == e; }

}  // namespace grossone
