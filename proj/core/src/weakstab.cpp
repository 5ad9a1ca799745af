#include "fanowalls/weakstab.hpp"

#include <algorithm>

namespace fanowalls::weakstab {

TiltPoint::TiltPoint(Rational s, Rational beta) : s_(std::move(s)), beta_(std::move(beta)) {
  if (sgn(s_) <= 0) {
    throw DomainError("invalid-tilt-point", "alpha^2 must be positive, got " + fanowalls::to_string(s_));
  }
}

SlopeValue SlopeValue::of(const ChargeValue& z) {
  if (sgn(z.im) == 0) return sgn(z.re) == 0 ? degenerate() : plus_infinity();
  return finite(Rational(-z.re / z.im));
}

const Rational& SlopeValue::value() const {
  if (kind_ != Kind::finite) throw DomainError("infinite-slope", "slope is not finite");
  return value_;
}

std::partial_ordering operator<=>(const SlopeValue& x, const SlopeValue& y) {
  using K = SlopeValue::Kind;
  if (x.kind_ == K::degenerate || y.kind_ == K::degenerate) return std::partial_ordering::unordered;
  if (x.kind_ == K::plus_infinity || y.kind_ == K::plus_infinity) {
    if (x.kind_ == y.kind_) return std::partial_ordering::equivalent;
    return x.kind_ == K::plus_infinity ? std::partial_ordering::greater : std::partial_ordering::less;
  }
  const int c = cmp(x.value_, y.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::string SlopeValue::to_string() const {
  switch (kind_) {
    case Kind::finite:
      return fanowalls::to_string(value_);
    case Kind::plus_infinity:
      return "+inf";
    case Kind::degenerate:
      break;
  }
  return "degenerate";
}

std::partial_ordering compare_slopes(const ChargeValue& x, const ChargeValue& y) {
  const bool x_zero = sgn(x.re) == 0 && sgn(x.im) == 0;
  const bool y_zero = sgn(y.re) == 0 && sgn(y.im) == 0;
  if (x_zero || y_zero) return std::partial_ordering::unordered;
  const bool x_inf = sgn(x.im) == 0;
  const bool y_inf = sgn(y.im) == 0;
  if (x_inf || y_inf) {
    if (x_inf && y_inf) return std::partial_ordering::equivalent;
    return x_inf ? std::partial_ordering::greater : std::partial_ordering::less;
  }
  // -re_x/im_x - (-re_y/im_y) = (re_y im_x - re_x im_y) / (im_x im_y)
  const int s = sgn(Rational(y.re * x.im - x.re * y.im)) * sgn(x.im) * sgn(y.im);
  if (s < 0) return std::partial_ordering::less;
  if (s > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

ChargeValue z_mumford(const FanoContext& ctx, const ChernCharacter& e) {
  const int d = ctx.degree();
  return {-d * e[1], d * e[0]};
}

SlopeValue slope_mumford(const FanoContext& ctx, const ChernCharacter& e) {
  return SlopeValue::of(z_mumford(ctx, e));
}

ChargeValue z_tilt(const FanoContext& ctx, const ChernCharacter& e, const TiltPoint& p) {
  const int d = ctx.degree();
  const ChernCharacter tw = numclass::twist(e, p.beta());
  return {-d * tw[2] + p.s() * d * tw[0] / 2, d * tw[1]};
}

ChargeValue rotate(const ChargeValue& z) { return {z.im, -z.re}; }

ChargeValue z_zero(const FanoContext& ctx, const ChernCharacter& e, const TiltPoint& p) {
  return rotate(z_tilt(ctx, e, p));
}

SlopeValue mu_tilt(const FanoContext& ctx, const ChernCharacter& e, const TiltPoint& p) {
  return SlopeValue::of(z_tilt(ctx, e, p));
}

SlopeValue mu_zero(const FanoContext& ctx, const ChernCharacter& e, const TiltPoint& p) {
  return SlopeValue::of(z_zero(ctx, e, p));
}

Rational q_form(const FanoContext& ctx, const ChernCharacter& e, const Rational& beta) {
  const int d = ctx.degree();
  const ChernCharacter tw = numclass::twist(e, beta);
  const Rational c = d * tw[1];
  return c * c - 2 * (d * tw[2]) * (d * tw[0]);
}

Rational bms_inequality(const FanoContext& ctx, const ChernCharacter& e, const Rational& s,
                        const Rational& beta) {
  if (sgn(s) < 0) throw DomainError("invalid-tilt-point", "alpha^2 must be nonnegative");
  const int d = ctx.degree();
  const ChernCharacter tw = numclass::twist(e, beta);
  const Rational h_ch2 = d * tw[2];
  return s * q_form(ctx, e, beta) + 4 * h_ch2 * h_ch2 - 6 * (d * tw[1]) * (d * tw[3]);
}

Ch3Bound bms_ch3_bound(const FanoContext& ctx, const ChernCharacter& e, const Rational& s,
                       const Rational& beta) {
  // Raising a3 by x raises ch3^beta by x and leaves the lower terms alone, so
  // value(a3 + x) = value(a3) - 6 d^2 ch1^beta x.
  const int d = ctx.degree();
  ChernCharacter base = e;
  base[3] = 0;
  const Rational at_zero = bms_inequality(ctx, base, s, beta);
  const Rational slope = -6 * d * d * numclass::twist(e, beta)[1];
  if (sgn(slope) == 0) {
    return {sgn(at_zero) >= 0 ? Ch3Bound::Kind::always : Ch3Bound::Kind::never, 0};
  }
  const Rational root = -at_zero / slope;
  return {sgn(slope) < 0 ? Ch3Bound::Kind::at_most : Ch3Bound::Kind::at_least, root};
}

bool in_region_v(const TiltPoint& p) {
  const Rational& b = p.beta();
  if (!(b > -1 && sgn(b) < 0)) return false;
  const Rational left = b * b;
  const Rational right = (b + 1) * (b + 1);
  return p.s() < std::min(left, right);
}

}  // namespace fanowalls::weakstab
