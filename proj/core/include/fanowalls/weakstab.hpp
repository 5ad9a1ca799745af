#pragma once

// Central charges and slopes of the weak stability conditions used on the
// threefold: Mumford slope, tilt stability Z_{alpha,beta} and its rotation
// Z0 = -i Z. Parameters carry s = alpha^2 so everything stays rational.

#include <compare>
#include <optional>
#include <string>

#include "fanowalls/numclass.hpp"

namespace fanowalls::weakstab {

using numclass::ChernCharacter;
using numclass::FanoContext;

class TiltPoint {
 public:
  /// Throws DomainError unless s > 0.
  TiltPoint(Rational s, Rational beta);

  const Rational& s() const noexcept { return s_; }
  const Rational& beta() const noexcept { return beta_; }

  friend bool operator==(const TiltPoint&, const TiltPoint&) = default;

 private:
  Rational s_;
  Rational beta_;
};

struct ChargeValue {
  Rational re;
  Rational im;

  friend bool operator==(const ChargeValue&, const ChargeValue&) = default;
};

/// Slope -Re/Im, +infinity when Im = 0, and a separate degenerate marker for
/// the zero charge, which is not ordered against anything.
class SlopeValue {
 public:
  enum class Kind { finite, plus_infinity, degenerate };

  static SlopeValue finite(Rational v) { return SlopeValue(Kind::finite, std::move(v)); }
  static SlopeValue plus_infinity() { return SlopeValue(Kind::plus_infinity, 0); }
  static SlopeValue degenerate() { return SlopeValue(Kind::degenerate, 0); }
  static SlopeValue of(const ChargeValue& z);

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }
  bool is_infinite() const noexcept { return kind_ == Kind::plus_infinity; }
  /// Only valid for finite slopes.
  const Rational& value() const;

  friend bool operator==(const SlopeValue& x, const SlopeValue& y) {
    return x.kind_ == y.kind_ && (x.kind_ != Kind::finite || x.value_ == y.value_);
  }
  friend std::partial_ordering operator<=>(const SlopeValue& x, const SlopeValue& y);

  std::string to_string() const;

 private:
  SlopeValue(Kind k, Rational v) : kind_(k), value_(std::move(v)) {}
  Kind kind_;
  Rational value_;
};

/// Orders the slopes of two charges by cross-multiplication, without
/// dividing. Zero charges are unordered.
std::partial_ordering compare_slopes(const ChargeValue& x, const ChargeValue& y);

/// sigma_M: Z = -H^2 ch1 + i H^3 ch0.
ChargeValue z_mumford(const FanoContext& ctx, const ChernCharacter& e);
SlopeValue slope_mumford(const FanoContext& ctx, const ChernCharacter& e);

/// Z_{alpha,beta}(E) = -H ch2^beta + (s/2) H^3 ch0 + i H^2 ch1^beta.
ChargeValue z_tilt(const FanoContext& ctx, const ChernCharacter& e, const TiltPoint& p);
/// Z0 = -i Z, i.e. (re0, im0) = (im, -re).
ChargeValue z_zero(const FanoContext& ctx, const ChernCharacter& e, const TiltPoint& p);
ChargeValue rotate(const ChargeValue& z);

SlopeValue mu_tilt(const FanoContext& ctx, const ChernCharacter& e, const TiltPoint& p);
SlopeValue mu_zero(const FanoContext& ctx, const ChernCharacter& e, const TiltPoint& p);

/// Bogomolov form (H^2 ch1^beta)^2 - 2 (H ch2^beta)(H^3 ch0). Independent of beta.
Rational q_form(const FanoContext& ctx, const ChernCharacter& e, const Rational& beta = 0);

/// s Q(E) + 4 (H ch2^beta)^2 - 6 (H^2 ch1^beta) ch3^beta. Accepts s = 0.
/// Throws DomainError if s < 0.
Rational bms_inequality(const FanoContext& ctx, const ChernCharacter& e, const Rational& s,
                        const Rational& beta);

/// The BMS expression is affine in a3 (all other components fixed). Describes
/// the set of a3 values for which it is nonnegative.
struct Ch3Bound {
  enum class Kind { at_most, at_least, always, never };
  Kind kind;
  Rational threshold;  // meaningful for at_most / at_least
};

Ch3Bound bms_ch3_bound(const FanoContext& ctx, const ChernCharacter& e, const Rational& s,
                       const Rational& beta);

/// The parameter region V: -1 < beta < 0 and 0 < alpha < min(-beta, beta + 1).
bool in_region_v(const TiltPoint& p);

}  // namespace fanowalls::weakstab
