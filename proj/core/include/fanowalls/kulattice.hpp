#pragma once

// The rank-2 numerical lattice of the Kuznetsov component, spanned by
//   kappa1 = 1 - H^2/d,   kappa2 = H - H^2/2 - (6-d)/(6d) H^3.
// Classes are integer column vectors (x, y) = x kappa1 + y kappa2 and
// operators act on the left.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fanowalls/numclass.hpp"

namespace fanowalls::kulattice {

using numclass::ChernCharacter;
using numclass::FanoContext;

struct KuClass {
  long x = 0;
  long y = 0;

  friend KuClass operator+(KuClass a, KuClass b) { return {a.x + b.x, a.y + b.y}; }
  friend KuClass operator-(KuClass a, KuClass b) { return {a.x - b.x, a.y - b.y}; }
  friend KuClass operator-(KuClass a) { return {-a.x, -a.y}; }
  friend KuClass operator*(long k, KuClass a) { return {k * a.x, k * a.y}; }
  friend bool operator==(const KuClass&, const KuClass&) = default;
  friend auto operator<=>(const KuClass&, const KuClass&) = default;
};

std::string to_string(const KuClass& k);

/// 2x2 rational matrix, m[row][col].
struct Matrix2 {
  std::array<std::array<Rational, 2>, 2> m{};

  static Matrix2 identity();
  static Matrix2 of(Rational a, Rational b, Rational c, Rational d);

  Rational det() const;
  Matrix2 transpose() const;
  /// Throws DomainError("singular-matrix").
  Matrix2 inverse() const;
  Matrix2 pow(int n) const;

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y);
  friend Matrix2 operator-(const Matrix2& x);
  friend bool operator==(const Matrix2& x, const Matrix2& y) { return x.m == y.m; }
};

std::string to_string(const Matrix2& m);

struct LatticeOperator {
  std::string name;
  Matrix2 matrix;

  /// Throws DomainError("non-integral-image") if the image leaves the lattice.
  KuClass apply(const KuClass& k) const;
};

ChernCharacter kappa1(const FanoContext& ctx);
ChernCharacter kappa2(const FanoContext& ctx);
ChernCharacter embed(const FanoContext& ctx, const KuClass& k);

/// Coordinates of a class in the kappa basis; empty if it is not an integral
/// combination of kappa1, kappa2.
std::optional<KuClass> resolve(const FanoContext& ctx, const ChernCharacter& e);

/// [[-1, -1], [1-d, -d]], entry (i, j) = chi(kappa_i, kappa_j).
Matrix2 euler_matrix(int degree);
long euler_form_ku(int degree, const KuClass& a, const KuClass& b);

/// g - chi(e, g) e. Throws DomainError("non-exceptional") unless chi(e, e) = 1.
ChernCharacter left_mutation(const FanoContext& ctx, const ChernCharacter& e,
                             const ChernCharacter& g);

/// R = L_O(- (x) O(1)) evaluated on kappa1, kappa2. Throws
/// DomainError("basis-resolution") if an image leaves the kappa span.
LatticeOperator rotation(const FanoContext& ctx);

/// E^-1 E^T, characterised by chi(a, b) = chi(b, S a).
LatticeOperator serre_operator(int degree);

/// All (x, y) with |x|, |y| <= box and chi((x,y), (x,y)) = -1, sorted.
/// Throws DomainError("invalid-box") for box < 2.
std::vector<KuClass> minus_one_classes(int degree, long box);

struct Orbit {
  std::vector<KuClass> classes;
  /// Absent when the start class did not recur within max_steps.
  std::optional<long> period;
};

Orbit rotation_orbit(const FanoContext& ctx, const KuClass& start, long max_steps = 64);

}  // namespace fanowalls::kulattice
