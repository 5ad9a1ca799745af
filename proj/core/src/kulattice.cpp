#include "fanowalls/kulattice.hpp"

#include <sstream>

namespace fanowalls::kulattice {

std::string to_string(const KuClass& k) {
  std::ostringstream os;
  os << '(' << k.x << ',' << k.y << ')';
  return os.str();
}

Matrix2 Matrix2::identity() { return of(1, 0, 0, 1); }

Matrix2 Matrix2::of(Rational a, Rational b, Rational c, Rational d) {
  Matrix2 r;
  r.m = {{{std::move(a), std::move(b)}, {std::move(c), std::move(d)}}};
  return r;
}

Rational Matrix2::det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

Matrix2 Matrix2::transpose() const { return of(m[0][0], m[1][0], m[0][1], m[1][1]); }

Matrix2 Matrix2::inverse() const {
  const Rational dt = det();
  if (sgn(dt) == 0) throw DomainError("singular-matrix", "matrix is not invertible");
  return of(m[1][1] / dt, -m[0][1] / dt, -m[1][0] / dt, m[0][0] / dt);
}

Matrix2 Matrix2::pow(int n) const {
  Matrix2 base = n < 0 ? inverse() : *this;
  Matrix2 out = identity();
  for (int i = 0; i < (n < 0 ? -n : n); ++i) out = out * base;
  return out;
}

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
  Matrix2 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r.m[i][j] = x.m[i][0] * y.m[0][j] + x.m[i][1] * y.m[1][j];
  }
  return r;
}

Matrix2 operator-(const Matrix2& x) { return Matrix2::of(-x.m[0][0], -x.m[0][1], -x.m[1][0], -x.m[1][1]); }

std::string to_string(const Matrix2& m) {
  std::ostringstream os;
  os << "[[" << fanowalls::to_string(m.m[0][0]) << ',' << fanowalls::to_string(m.m[0][1]) << "],["
     << fanowalls::to_string(m.m[1][0]) << ',' << fanowalls::to_string(m.m[1][1]) << "]]";
  return os.str();
}

KuClass LatticeOperator::apply(const KuClass& k) const {
  const Rational x = matrix.m[0][0] * k.x + matrix.m[0][1] * k.y;
  const Rational y = matrix.m[1][0] * k.x + matrix.m[1][1] * k.y;
  if (!is_integer(x) || !is_integer(y)) {
    throw DomainError("non-integral-image", name + " maps " + to_string(k) + " outside the lattice");
  }
  return {x.get_num().get_si(), y.get_num().get_si()};
}

ChernCharacter kappa1(const FanoContext& ctx) {
  return {1, 0, frac(-1, ctx.degree()), 0};
}

ChernCharacter kappa2(const FanoContext& ctx) {
  const int d = ctx.degree();
  Rational a3 = frac(-(6 - d), 6 * d);
  return {0, 1, frac(-1, 2), a3};
}

ChernCharacter embed(const FanoContext& ctx, const KuClass& k) {
  return Rational(k.x) * kappa1(ctx) + Rational(k.y) * kappa2(ctx);
}

std::optional<KuClass> resolve(const FanoContext& ctx, const ChernCharacter& e) {
  // kappa1 and kappa2 have (a0, a1) = (1, 0) and (0, 1).
  if (!is_integer(e[0]) || !is_integer(e[1])) return std::nullopt;
  const KuClass k{e[0].get_num().get_si(), e[1].get_num().get_si()};
  if (embed(ctx, k) != e) return std::nullopt;
  return k;
}

Matrix2 euler_matrix(int degree) {
  const FanoContext ctx(degree);
  return Matrix2::of(-1, -1, 1 - degree, -degree);
}

long euler_form_ku(int degree, const KuClass& a, const KuClass& b) {
  const Matrix2 e = euler_matrix(degree);
  const Rational v = a.x * (e.m[0][0] * b.x + e.m[0][1] * b.y) + a.y * (e.m[1][0] * b.x + e.m[1][1] * b.y);
  return v.get_num().get_si();
}

ChernCharacter left_mutation(const FanoContext& ctx, const ChernCharacter& e, const ChernCharacter& g) {
  const Rational self = numclass::euler_pairing(ctx, e, e);
  if (self != 1) {
    throw DomainError("non-exceptional",
                      "chi(e, e) = " + fanowalls::to_string(self) + ", expected 1 for " + numclass::to_string(e));
  }
  return g - numclass::euler_pairing(ctx, e, g) * e;
}

LatticeOperator rotation(const FanoContext& ctx) {
  const ChernCharacter o = ChernCharacter::unit();
  Matrix2 m;
  const std::array<ChernCharacter, 2> basis{kappa1(ctx), kappa2(ctx)};
  for (int j = 0; j < 2; ++j) {
    const ChernCharacter image = left_mutation(ctx, o, numclass::tensor_line(basis[j], 1));
    const auto k = resolve(ctx, image);
    if (!k) {
      throw DomainError("basis-resolution",
                        "R(kappa" + std::to_string(j + 1) + ") = " + numclass::to_string(image) +
                            " is not in the kappa span");
    }
    m.m[0][j] = k->x;
    m.m[1][j] = k->y;
  }
  return {"R", m};
}

LatticeOperator serre_operator(int degree) {
  const Matrix2 e = euler_matrix(degree);
  return {"S", e.inverse() * e.transpose()};
}

std::vector<KuClass> minus_one_classes(int degree, long box) {
  if (box < 2) throw DomainError("invalid-box", "box must be at least 2");
  std::vector<KuClass> out;
  for (long x = -box; x <= box; ++x) {
    for (long y = -box; y <= box; ++y) {
      const KuClass k{x, y};
      if (euler_form_ku(degree, k, k) == -1) out.push_back(k);
    }
  }
  return out;
}

Orbit rotation_orbit(const FanoContext& ctx, const KuClass& start, long max_steps) {
  const LatticeOperator r = rotation(ctx);
  Orbit orbit;
  orbit.classes.push_back(start);
  KuClass cur = start;
  for (long step = 1; step <= max_steps; ++step) {
    cur = r.apply(cur);
    if (cur == start) {
      orbit.period = step;
      return orbit;
    }
    orbit.classes.push_back(cur);
  }
  return orbit;
}

}  // namespace fanowalls::kulattice
