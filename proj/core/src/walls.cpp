#include "fanowalls/walls.hpp"

#include <sstream>

namespace fanowalls::walls {

Truncation truncate(const FanoContext& ctx, const ChernCharacter& v) {
  const int d = ctx.degree();
  return {d * v[0], d * v[1], d * v[2]};
}

Wall Wall::vertical(Rational beta0) { return Wall(Kind::vertical, std::move(beta0), 0); }

Wall Wall::semicircle(Rational center, Rational radius_sq) {
  if (sgn(radius_sq) <= 0) {
    throw DomainError("degenerate-wall", "semicircle radius^2 must be positive, got " +
                                             fanowalls::to_string(radius_sq));
  }
  return Wall(Kind::semicircle, std::move(center), std::move(radius_sq));
}

bool Wall::contains(const Rational& s, const Rational& beta) const {
  if (is_vertical()) return beta == center_;
  const Rational dx = beta - center_;
  return s + dx * dx == radius_sq_;
}

bool display_before(const Wall& x, const Wall& y) {
  if (x.is_vertical() != y.is_vertical()) return x.is_vertical();
  if (x.radius_sq_ != y.radius_sq_) return x.radius_sq_ > y.radius_sq_;
  return x.center_ < y.center_;
}

std::string Wall::to_string() const {
  std::ostringstream os;
  if (is_vertical()) {
    os << "vertical beta0=" << fanowalls::to_string(center_);
  } else {
    os << "semicircle center=" << fanowalls::to_string(center_)
       << " radius_sq=" << fanowalls::to_string(radius_sq_);
  }
  return os.str();
}

std::string to_string(const WallLocus& locus) {
  if (const auto* w = std::get_if<Wall>(&locus)) return w->to_string();
  if (std::holds_alternative<Everywhere>(locus)) return "everywhere";
  return "nowhere";
}

WallLocus numerical_wall(const FanoContext& ctx, const ChernCharacter& v, const ChernCharacter& u) {
  const Truncation tv = truncate(ctx, v);
  const Truncation tu = truncate(ctx, u);
  const Rational a = tv.r * tu.c - tu.r * tv.c;
  const Rational b = tv.e * tu.r - tu.e * tv.r;
  const Rational c = tu.e * tv.c - tv.e * tu.c;
  if (sgn(a) != 0) {
    // s + (beta - x)^2 = x^2 - 2C/A with x = -B/A.
    const Rational center = -b / a;
    const Rational radius_sq = center * center - 2 * c / a;
    if (sgn(radius_sq) <= 0) return Nowhere{};
    return Wall::semicircle(center, radius_sq);
  }
  if (sgn(b) != 0) return Wall::vertical(Rational(-c / b));
  if (sgn(c) == 0) return Everywhere{};
  return Nowhere{};
}

Rational slope_equality_residual(const FanoContext& ctx, const ChernCharacter& v,
                                 const ChernCharacter& u, const Rational& s, const Rational& beta) {
  const int d = ctx.degree();
  const auto charge = [&](const ChernCharacter& x) {
    const ChernCharacter tw = numclass::twist(x, beta);
    return weakstab::ChargeValue{-d * tw[2] + s * d * tw[0] / 2, d * tw[1]};
  };
  const auto zv = charge(v);
  const auto zu = charge(u);
  return zv.re * zu.im - zu.re * zv.im;
}

}  // namespace fanowalls::walls
