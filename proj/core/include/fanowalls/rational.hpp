#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace fanowalls {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "n", "-n", "p/q" (no decimal point, no whitespace). The result is
/// canonicalized. Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical decimal-free text: "n" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

/// num/den in lowest terms. The two-argument mpq_class constructor does not
/// reduce, and unreduced values break equality.
inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
bool is_integer(const Rational& q);

/// Converts to double with 53-bit rounding. Display use only.
double to_double(const Rational& q);

/// Exact square root when q is the square of a rational; false otherwise.
bool exact_sqrt(const Rational& q, Rational& root);

/// Rational bracket lo <= sqrt(q) <= hi with hi - lo <= 2^-bits. q >= 0.
void sqrt_bracket(const Rational& q, unsigned bits, Rational& lo, Rational& hi);

/// Sign of a + b*sqrt(p) + c*sqrt(r) for p, r >= 0, decided exactly.
int sign_of(const Rational& a, const Rational& b, const Rational& p,
            const Rational& c, const Rational& r);

/// A real number of the form base + s*sqrt(radicand) with s in {-1, 0, 1}.
/// Used for wall endpoints, which are quadratic irrationals in general.
struct Surd {
  Rational base;
  int root_sign = 0;
  Rational radicand;

  static Surd exact(const Rational& q) { return Surd{q, 0, 0}; }

  bool is_rational() const;
  Rational rational_lower(unsigned bits) const;
  Rational rational_upper(unsigned bits) const;
  double approx() const;
};

std::strong_ordering compare(const Surd& x, const Surd& y);
std::strong_ordering compare(const Rational& x, const Surd& y);

/// A rational strictly between lo and hi, or false if lo >= hi.
bool rational_between(const Surd& lo, const Surd& hi, Rational& out);

}  // namespace fanowalls
