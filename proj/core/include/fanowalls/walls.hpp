#pragma once

// Wall-and-chamber geometry for tilt stability in the (beta, alpha) half-plane.
//
// A numerical wall of v with respect to u is the locus where the tilt slopes
// of v and u agree. In truncated coordinates (r, c, e) = (H^3 ch0, H^2 ch1,
// H ch2) it reads
//
//   (A/2)(s + beta^2) + B beta + C = 0,
//   A = r_v c_u - r_u c_v,  B = e_v r_u - e_u r_v,  C = e_u c_v - e_v c_u,
//
// so it is a semicircle centred on the beta-axis when A != 0 and a vertical
// half-line otherwise. All walls here are candidate (numerical) walls; no
// categorical certification is attempted.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fanowalls/numclass.hpp"
#include "fanowalls/weakstab.hpp"

namespace fanowalls::walls {

using numclass::ChernCharacter;
using numclass::FanoContext;

/// (H^3 ch0, H^2 ch1, H ch2).
struct Truncation {
  Rational r;
  Rational c;
  Rational e;
};

Truncation truncate(const FanoContext& ctx, const ChernCharacter& v);

class Wall {
 public:
  enum class Kind { vertical, semicircle };

  static Wall vertical(Rational beta0);
  /// Throws DomainError("degenerate-wall") unless radius_sq > 0.
  static Wall semicircle(Rational center, Rational radius_sq);

  Kind kind() const noexcept { return kind_; }
  bool is_vertical() const noexcept { return kind_ == Kind::vertical; }
  /// beta0 for vertical walls, the centre for semicircles.
  const Rational& center() const noexcept { return center_; }
  const Rational& beta0() const noexcept { return center_; }
  /// Zero for vertical walls.
  const Rational& radius_sq() const noexcept { return radius_sq_; }

  /// Does the wall pass through (s, beta)?
  bool contains(const Rational& s, const Rational& beta) const;

  friend bool operator==(const Wall& x, const Wall& y) {
    return x.kind_ == y.kind_ && x.center_ == y.center_ && x.radius_sq_ == y.radius_sq_;
  }
  /// Vertical walls first, then by decreasing radius, then by centre.
  friend bool display_before(const Wall& x, const Wall& y);

  std::string to_string() const;

 private:
  Wall(Kind k, Rational c, Rational r) : kind_(k), center_(std::move(c)), radius_sq_(std::move(r)) {}
  Kind kind_;
  Rational center_;
  Rational radius_sq_;
};

struct Everywhere {
  friend bool operator==(Everywhere, Everywhere) { return true; }
};
struct Nowhere {
  friend bool operator==(Nowhere, Nowhere) { return true; }
};

using WallLocus = std::variant<Wall, Everywhere, Nowhere>;

std::string to_string(const WallLocus& locus);

WallLocus numerical_wall(const FanoContext& ctx, const ChernCharacter& v, const ChernCharacter& u);

/// Left side of the cross-multiplied slope identity Re_v Im_u - Re_u Im_v at
/// (s, beta). Zero exactly on the numerical wall.
Rational slope_equality_residual(const FanoContext& ctx, const ChernCharacter& v,
                                 const ChernCharacter& u, const Rational& s, const Rational& beta);

/// Open box beta_min < beta < beta_max, 0 < s < s_max (no s bound when empty).
struct Window {
  Rational beta_min;
  Rational beta_max;
  std::optional<Rational> s_max;
};

struct Bounds {
  long max_rank = 4;         // |a0| of the destabilizer
  long max_c1_span = 8;      // |a1| of the destabilizer
  long ch2_denominator = 2;  // H.ch2 ranges over (1/ch2_denominator)Z
};

struct ScanOptions {
  unsigned jobs = 1;
  /// Visit ranks in a seeded shuffled order; output must not depend on it.
  std::optional<unsigned long long> shuffle_seed;
};

struct CandidateWall {
  Wall wall;
  ChernCharacter destabilizer;
  ChernCharacter cowall_class;
  Rational q_sub;
  Rational q_quot;
  /// A rational point of the wall inside the window where the Im test passed.
  Rational sample_beta;
  Rational sample_s;
};

struct ScanResult {
  std::vector<CandidateWall> candidates;
  /// True when the bounds provably cover every semicircular candidate that
  /// can meet the window.
  bool complete = false;
  /// Minimal radius^2 of a semicircular wall of v meeting the window; absent
  /// when walls of v accumulate inside the window.
  std::optional<Rational> min_radius_sq;
  std::optional<long> certified_max_rank;
  std::optional<long> certified_max_c1;
  std::vector<std::string> warnings;
};

/// Enumerates lattice classes u within `bounds` whose wall meets `window` and
/// passes the numerical destabilizer filters: 0 < Im Z(u) < Im Z(v) on the
/// wall (v oriented so Im Z(v) > 0 there), Q(u) >= 0, Q(v - u) >= 0 and
/// Q(u) + Q(v - u) <= Q(v). Deduplicated by wall, vertical first, then by
/// decreasing radius.
ScanResult scan_candidates(const FanoContext& ctx, const ChernCharacter& v, const Window& window,
                           const Bounds& bounds, const ScanOptions& options = {});

struct MinimalityEvidence {
  Rational beta;
  /// |Im Z(v)| at beta; v is negated when its imaginary part is negative.
  Rational im_v;
  bool v_negated = false;
  /// Smallest positive value of Im Z on the lattice at beta: d / den(beta).
  Rational lattice_step;
};

struct StripReport {
  enum class Status { empty, not_empty, inconclusive };

  Status status = Status::inconclusive;
  /// Absent when the minimality precondition fails (see `not_applicable`).
  std::optional<MinimalityEvidence> minimality;
  std::optional<std::string> not_applicable;
  ScanResult scan;
};

StripReport verify_strip_empty(const FanoContext& ctx, const ChernCharacter& v,
                               const Rational& beta_left, const Rational& beta_right,
                               const Bounds& bounds = {}, const ScanOptions& options = {});

enum class Side { left, right, both };

struct LargestWallResult {
  std::optional<CandidateWall> wall;
  bool complete = false;
  /// Window of the last scan performed.
  Window window;
  std::vector<std::string> warnings;
};

/// Finds the largest semicircular candidate wall of v on the chosen side of
/// its vertical wall by scanning windows that widen towards the accumulation
/// point of the wall family.
LargestWallResult largest_wall(const FanoContext& ctx, const ChernCharacter& v,
                               const Bounds& bounds = {}, Side side = Side::both,
                               const ScanOptions& options = {});

struct RenderStyle {
  double width = 640;
  double height = 400;
  std::string title;
};

struct RenderedWall {
  Wall wall;
  std::string label;
};

/// Deterministic SVG of walls over the window; beta runs horizontally,
/// alpha vertically. Duplicate walls are drawn once.
std::string render_walls(const std::vector<RenderedWall>& walls, const Window& window,
                         const RenderStyle& style = {});

}  // namespace fanowalls::walls
