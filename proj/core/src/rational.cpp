#include "fanowalls/rational.hpp"

#include <cctype>
#include <cmath>

#include "fanowalls/errors.hpp"

namespace fanowalls {

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  std::string digits;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '-') digits.push_back('-');
    ++i;
  }
  const std::size_t num_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits.push_back(text[i++]);
  }
  if (i == num_start) throw ParseError("expected digits", i);
  Integer num(digits, 10);
  Integer den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    const std::size_t den_start = i;
    std::string den_digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      den_digits.push_back(text[i++]);
    }
    if (i == den_start) throw ParseError("expected denominator digits", i);
    den = Integer(den_digits, 10);
    if (den == 0) throw ParseError("zero denominator", den_start);
  }
  if (i != text.size()) {
    throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

double to_double(const Rational& q) { return q.get_d(); }

bool exact_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(q.get_den_mpz_t()) == 0) {
    return false;
  }
  Integer n;
  Integer d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

void sqrt_bracket(const Rational& q, unsigned bits, Rational& lo, Rational& hi) {
  Integer scaled = q.get_num() * q.get_den();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
  Integer s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  Integer denom = q.get_den();
  mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), bits);
  lo = Rational(s, denom);
  lo.canonicalize();
  if (s * s == scaled) {
    hi = lo;
  } else {
    hi = Rational(s + 1, denom);
    hi.canonicalize();
  }
}

namespace {

// sign(a + b*sqrt(p)), p >= 0.
int sign_of_one(const Rational& a, const Rational& b, const Rational& p) {
  const int sb = (sgn(p) == 0) ? 0 : sgn(b);
  const int sa = sgn(a);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const int cmp = sgn(Rational(a * a - b * b * p));
  if (cmp > 0) return sa;
  if (cmp < 0) return sb;
  return 0;
}

}  // namespace

int sign_of(const Rational& a, const Rational& b, const Rational& p,
            const Rational& c, const Rational& r) {
  const int s1 = (sgn(p) == 0) ? 0 : sgn(b);
  const int s2 = (sgn(r) == 0) ? 0 : sgn(c);
  int su = 0;
  if (s1 == 0) {
    su = s2;
  } else if (s2 == 0 || s1 == s2) {
    su = s1;
  } else {
    const int cmp = sgn(Rational(b * b * p - c * c * r));
    su = cmp > 0 ? s1 : (cmp < 0 ? s2 : 0);
  }
  const int sa = sgn(a);
  if (su == 0) return sa;
  if (sa == 0 || sa == su) return su;
  // |a| versus |u| where u = b sqrt(p) + c sqrt(r):
  // a^2 - u^2 = (a^2 - b^2 p - c^2 r) - 2 b c sqrt(p r)
  const int cmp = sign_of_one(Rational(a * a - b * b * p - c * c * r),
                              Rational(-2 * b * c), Rational(p * r));
  if (cmp > 0) return sa;
  if (cmp < 0) return su;
  return 0;
}

bool Surd::is_rational() const {
  if (root_sign == 0 || sgn(radicand) == 0) return true;
  Rational root;
  return exact_sqrt(radicand, root);
}

Rational Surd::rational_lower(unsigned bits) const {
  if (root_sign == 0) return base;
  Rational lo;
  Rational hi;
  sqrt_bracket(radicand, bits, lo, hi);
  return root_sign > 0 ? Rational(base + lo) : Rational(base - hi);
}

Rational Surd::rational_upper(unsigned bits) const {
  if (root_sign == 0) return base;
  Rational lo;
  Rational hi;
  sqrt_bracket(radicand, bits, lo, hi);
  return root_sign > 0 ? Rational(base + hi) : Rational(base - lo);
}

double Surd::approx() const {
  return base.get_d() + root_sign * std::sqrt(radicand.get_d());
}

std::strong_ordering compare(const Surd& x, const Surd& y) {
  const int s = sign_of(Rational(x.base - y.base), Rational(x.root_sign), x.radicand,
                        Rational(-y.root_sign), y.radicand);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const Rational& x, const Surd& y) {
  return compare(Surd::exact(x), y);
}

namespace {

// Simplest rational (smallest denominator, then smallest magnitude numerator)
// in the open interval (lo, hi) with 0 <= lo < hi; hi_infinite marks hi = +inf.
Rational simplest_nonneg(const Rational& lo, const Rational& hi, bool hi_infinite) {
  const Integer fl = floor(lo);
  const Integer next = fl + 1;
  if (hi_infinite || Rational(next) < hi) return Rational(next);
  // No integer strictly inside; both ends share integer part fl (hi may equal fl + 1).
  const Rational lo_frac = lo - fl;
  const Rational hi_frac = hi - fl;
  // Map x -> 1/x: (lo_frac, hi_frac) -> (1/hi_frac, 1/lo_frac).
  const Rational inv_lo = 1 / hi_frac;
  if (sgn(lo_frac) == 0) {
    Rational t = simplest_nonneg(inv_lo, 0, true);
    return Rational(fl) + 1 / t;
  }
  Rational t = simplest_nonneg(inv_lo, Rational(1 / lo_frac), false);
  return Rational(fl) + 1 / t;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (sgn(lo) < 0 && sgn(hi) > 0) return 0;
  if (sgn(hi) <= 0) return -simplest_nonneg(Rational(-hi), Rational(-lo), false);
  return simplest_nonneg(lo, hi, false);
}

}  // namespace

bool rational_between(const Surd& lo, const Surd& hi, Rational& out) {
  if (compare(lo, hi) >= 0) return false;
  for (unsigned bits = 8; bits <= 8192; bits *= 2) {
    const Rational l = lo.rational_upper(bits);
    const Rational h = hi.rational_lower(bits);
    if (l >= h) continue;
    // Endpoints are approximations; the simplest point of a shrunken interval
    // is verified against the exact bounds.
    Rational candidate = simplest_between(l, h);
    if (compare(candidate, lo) == std::strong_ordering::greater &&
        compare(candidate, hi) == std::strong_ordering::less) {
      out = candidate;
      return true;
    }
    candidate = (l + h) / 2;
    if (compare(candidate, lo) == std::strong_ordering::greater &&
        compare(candidate, hi) == std::strong_ordering::less) {
      out = candidate;
      return true;
    }
  }
  return false;
}

}  // namespace fanowalls
