#pragma once

// Exact Chern-character arithmetic on an index-2, Picard-rank-1 Fano threefold.
//
// Cohomology in even degrees is spanned by 1, H, H^2, H^3, so a numerical
// class is four rationals: ch(E) = a0 + a1 H + a2 H^2 + a3 H^3. Integration
// sends H^3 to the degree d; the point class is H^3 / d.

#include <array>
#include <compare>
#include <iosfwd>
#include <string>

#include "fanowalls/errors.hpp"
#include "fanowalls/rational.hpp"

namespace fanowalls::numclass {

class FanoContext {
 public:
  /// Throws DomainError unless 1 <= degree <= 5.
  explicit FanoContext(int degree);

  int degree() const noexcept { return degree_; }

  /// H^3 = d.
  int h_cubed() const noexcept { return degree_; }
  /// c1 = 2H, stored as its H-coefficient.
  static constexpr int c1_coefficient = 2;
  /// H . c2 = 12, forced by chi(O_Y) = 1 and c1 = 2H.
  static constexpr int h_dot_c2 = 12;

  /// Weights (t0, t1, t2, t3) with chi(E) = t0 a3 + t1 a2 + t2 a1 + t3 a0.
  const std::array<Rational, 4>& todd_weights() const noexcept { return todd_; }

  bool operator==(const FanoContext& other) const { return degree_ == other.degree_; }

 private:
  int degree_;
  std::array<Rational, 4> todd_;
};

struct ChernCharacter {
  std::array<Rational, 4> a{0, 0, 0, 0};

  ChernCharacter() = default;
  ChernCharacter(Rational a0, Rational a1, Rational a2, Rational a3)
      : a{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}

  const Rational& operator[](std::size_t i) const { return a[i]; }
  Rational& operator[](std::size_t i) { return a[i]; }

  static ChernCharacter unit() { return {1, 0, 0, 0}; }
  static ChernCharacter zero() { return {}; }

  bool is_zero() const;

  ChernCharacter& operator+=(const ChernCharacter& o);
  ChernCharacter& operator-=(const ChernCharacter& o);
  friend ChernCharacter operator+(ChernCharacter x, const ChernCharacter& y) { return x += y; }
  friend ChernCharacter operator-(ChernCharacter x, const ChernCharacter& y) { return x -= y; }
  friend ChernCharacter operator-(const ChernCharacter& x);
  friend ChernCharacter operator*(const Rational& c, const ChernCharacter& x);

  friend bool operator==(const ChernCharacter& x, const ChernCharacter& y) { return x.a == y.a; }
};

/// Lexicographic on (a0, a1, a2, a3); used for canonical tie-breaking.
std::strong_ordering lex_compare(const ChernCharacter& x, const ChernCharacter& y);

std::ostream& operator<<(std::ostream& os, const ChernCharacter& e);
std::string to_string(const ChernCharacter& e);

/// ch(O_p) = H^3 / d.
ChernCharacter point_class(const FanoContext& ctx);
/// ch(O_Y(k)) = e^{kH}.
ChernCharacter line_bundle(int k);

/// Z-basis of the numerical Grothendieck group N(Y): the classes of O_Y, of a
/// hyperplane section O_H, of a line O_l and of a point O_p.
std::array<ChernCharacter, 4> numerical_lattice_basis(const FanoContext& ctx);

/// e^{-beta H} . E
ChernCharacter twist(const ChernCharacter& e, const Rational& beta);
/// E . e^{kH}
ChernCharacter tensor_line(const ChernCharacter& e, long k);
ChernCharacter dual(const ChernCharacter& e);
/// Cup product truncated above H^3.
ChernCharacter product(const ChernCharacter& e, const ChernCharacter& f);

/// Hirzebruch-Riemann-Roch.
Rational chi(const FanoContext& ctx, const ChernCharacter& e);
/// chi(E, F) = chi(E^dual . F).
Rational euler_pairing(const FanoContext& ctx, const ChernCharacter& e, const ChernCharacter& f);

/// P(t) = p[3] t^3 + p[2] t^2 + p[1] t + p[0].
struct HilbertPolynomial {
  std::array<Rational, 4> p{0, 0, 0, 0};

  Rational operator()(const Rational& t) const;
  /// Index of the highest nonzero coefficient, -1 for the zero polynomial.
  int degree() const;

  friend bool operator==(const HilbertPolynomial& x, const HilbertPolynomial& y) {
    return x.p == y.p;
  }
};

std::string to_string(const HilbertPolynomial& poly);

HilbertPolynomial hilbert_polynomial(const FanoContext& ctx, const ChernCharacter& e);

/// Inverts hilbert_polynomial on classes supported in dimension `dim`
/// (a_i = 0 for i < 3 - dim). Throws DomainError("inconsistent-dimension")
/// when no such class has Hilbert polynomial P.
ChernCharacter class_from_hilbert(const FanoContext& ctx, const HilbertPolynomial& poly, int dim);

/// Compares reduced Hilbert polynomials P_E / lead(P_E) lexicographically from
/// the top coefficient down. Throws DomainError("undefined-order") when a
/// leading coefficient is not positive.
std::weak_ordering compare_reduced_hilbert(const FanoContext& ctx, const ChernCharacter& e,
                                           const ChernCharacter& f);

/// Advisory integrality check: a_i * denominators[i] must be integral.
struct IntegralityGate {
  std::array<Integer, 4> denominators{1, 1, 2, 6};
  bool enabled = true;

  bool passes(const ChernCharacter& e) const;
  /// Parses "1,1,2,6" or "off"; throws ParseError.
  static IntegralityGate parse(const std::string& spec);
};

}  // namespace fanowalls::numclass
