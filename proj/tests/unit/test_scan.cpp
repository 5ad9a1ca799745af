#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "fanowalls/kulattice.hpp"
#include "fanowalls/walls.hpp"
#include "support/generators.hpp"

namespace fanowalls {
namespace {

using numclass::ChernCharacter;
using numclass::FanoContext;
using walls::Bounds;
using walls::ScanResult;
using walls::Wall;
using walls::Window;

struct Trunc {
  Rational r, c, e;
};

Trunc trunc(int d, const ChernCharacter& x) { return {d * x[0], d * x[1], d * x[2]}; }
Rational q(const Trunc& t) { return t.c * t.c - 2 * t.e * t.r; }
Rational im(const Trunc& t, const Rational& beta) { return t.c - beta * t.r; }

// Every reported candidate must satisfy the filters when re-checked from
// scratch at its own sample point.
void expect_valid(const FanoContext& ctx, const ChernCharacter& v, const Window& window,
                  const ScanResult& result) {
  const int d = ctx.degree();
  const Trunc tv = trunc(d, v);
  for (const auto& cand : result.candidates) {
    const Trunc tu = trunc(d, cand.destabilizer);
    const Trunc tq = trunc(d, v - cand.destabilizer);
    EXPECT_EQ(cand.cowall_class, v - cand.destabilizer);
    EXPECT_EQ(cand.q_sub, q(tu));
    EXPECT_EQ(cand.q_quot, q(tq));
    EXPECT_GE(q(tu), 0);
    EXPECT_GE(q(tq), 0);
    EXPECT_LE(q(tu) + q(tq), q(tv));
    EXPECT_GT(cand.sample_beta, window.beta_min);
    EXPECT_LT(cand.sample_beta, window.beta_max);
    EXPECT_GT(cand.sample_s, 0);
    if (window.s_max) EXPECT_LT(cand.sample_s, *window.s_max);
    EXPECT_TRUE(cand.wall.contains(cand.sample_s, cand.sample_beta)) << cand.wall.to_string();
    EXPECT_EQ(walls::slope_equality_residual(ctx, v, cand.destabilizer, cand.sample_s, cand.sample_beta), 0);
    if (!cand.wall.is_vertical()) {
      const Rational ratio = im(tu, cand.sample_beta) / im(tv, cand.sample_beta);
      EXPECT_GT(ratio, 0);
      EXPECT_LT(ratio, 1);
    }
  }
}

// Brute force over the same box with a grid test for the Im filter. Any wall
// found here must appear in a complete scan.
std::set<std::pair<double, double>> brute_force(const FanoContext& ctx, const ChernCharacter& v,
                                                const Window& window, const Bounds& b) {
  const int d = ctx.degree();
  const Trunc tv = trunc(d, v);
  std::set<std::pair<double, double>> out;
  for (long a0 = -b.max_rank; a0 <= b.max_rank; ++a0) {
    for (long a1 = -b.max_c1_span; a1 <= b.max_c1_span; ++a1) {
      for (long j = -60; j <= 60; ++j) {
        const Trunc tu{Rational(d * a0), Rational(d * a1), frac(j, b.ch2_denominator)};
        const Trunc tq{tv.r - tu.r, tv.c - tu.c, tv.e - tu.e};
        if (q(tu) < 0 || q(tq) < 0 || q(tu) + q(tq) > q(tv)) continue;
        const Rational A = tv.r * tu.c - tu.r * tv.c;
        if (sgn(A) == 0) continue;
        const Rational B = tv.e * tu.r - tu.e * tv.r;
        const Rational C = tu.e * tv.c - tv.e * tu.c;
        const Rational center = -B / A;
        const Rational rsq = center * center - 2 * C / A;
        if (sgn(rsq) <= 0) continue;
        const double c = center.get_d(), rho = std::sqrt(rsq.get_d());
        const double lo = std::max(c - rho, window.beta_min.get_d());
        const double hi = std::min(c + rho, window.beta_max.get_d());
        if (!(lo < hi)) continue;
        for (int k = 1; k < 400; ++k) {
          Rational beta(lo + (hi - lo) * k / 400.0);
          const Rational s = rsq - (beta - center) * (beta - center);
          if (sgn(s) <= 0 || beta <= window.beta_min || beta >= window.beta_max) continue;
          const Rational iv = im(tv, beta);
          if (sgn(iv) == 0) continue;
          const Rational ratio = im(tu, beta) / iv;
          if (sgn(ratio) > 0 && ratio < 1) {
            out.insert({center.get_d(), rsq.get_d()});
            break;
          }
        }
      }
    }
  }
  return out;
}

std::set<std::pair<double, double>> semicircles(const ScanResult& r) {
  std::set<std::pair<double, double>> out;
  for (const auto& c : r.candidates) {
    if (!c.wall.is_vertical()) out.insert({c.wall.center().get_d(), c.wall.radius_sq().get_d()});
  }
  return out;
}

TEST(Scan, MinusKappa1FullPicture) {
  const FanoContext ctx(1);
  const ChernCharacter v = -kulattice::kappa1(ctx);
  const Window window{-3, 1, std::nullopt};
  const ScanResult r = walls::scan_candidates(ctx, v, window, Bounds{});
  ASSERT_GE(r.candidates.size(), 2u);
  EXPECT_EQ(r.candidates[0].wall, Wall::vertical(0));
  EXPECT_EQ(r.candidates[1].wall, Wall::semicircle(frac(-3, 2), frac(1, 4)));
  // Lex-minimal representative of the O(-1) wall: two copies of O(-1)[1],
  // truncated to (ch0, ch1, ch2).
  EXPECT_EQ(r.candidates[1].destabilizer, ChernCharacter(-2, 2, -1, 0));
  EXPECT_FALSE(r.complete);
  expect_valid(ctx, v, window, r);
}

TEST(Scan, CompleteScanContainsBruteForceWalls) {
  struct Case {
    int d;
    ChernCharacter v;
    Window window;
  };
  std::vector<Case> cases;
  for (int d = 1; d <= 5; ++d) {
    const FanoContext ctx(d);
    cases.push_back({d, kulattice::kappa1(ctx), Window{-4, frac(-3, 2), std::nullopt}});
    cases.push_back({d, -kulattice::kappa1(ctx), Window{-1, frac(-1, 10), std::nullopt}});
    cases.push_back({d, numclass::line_bundle(1) - numclass::numerical_lattice_basis(ctx)[3],
                     Window{-2, frac(1, 2), std::nullopt}});
  }
  for (const auto& c : cases) {
    const FanoContext ctx(c.d);
    const Bounds bounds{};
    const ScanResult r = walls::scan_candidates(ctx, c.v, c.window, bounds);
    expect_valid(ctx, c.v, c.window, r);
    const auto found = semicircles(r);
    if (!r.complete) continue;
    for (const auto& w : brute_force(ctx, c.v, c.window, bounds)) {
      EXPECT_TRUE(found.count(w)) << "d=" << c.d << " v=" << numclass::to_string(c.v) << " missing wall centre "
                                  << w.first << " radius^2 " << w.second;
    }
  }
}

TEST(Scan, StructureSheafHasNoWalls) {
  // Q(O_Y) = 0 forces Q(u) = Q(v - u) = 0; brute force agrees that no
  // semicircle survives the filters.
  for (int d = 1; d <= 5; ++d) {
    const FanoContext ctx(d);
    const ChernCharacter v = ChernCharacter::unit();
    const Window window{-3, 3, std::nullopt};
    const ScanResult r = walls::scan_candidates(ctx, v, window, Bounds{});
    EXPECT_TRUE(r.complete);
    EXPECT_TRUE(r.candidates.empty());
    EXPECT_TRUE(brute_force(ctx, v, window, Bounds{}).empty());
  }
}

TEST(Scan, NegativeBogomolovIsEmptyWithWarning) {
  const FanoContext ctx(2);
  const ChernCharacter v(1, 0, 1, 0);
  const ScanResult r = walls::scan_candidates(ctx, v, Window{-1, 1, std::nullopt}, Bounds{});
  EXPECT_TRUE(r.complete);
  EXPECT_TRUE(r.candidates.empty());
  ASSERT_FALSE(r.warnings.empty());
  EXPECT_NE(r.warnings[0].find("Q(v) < 0"), std::string::npos);
}

TEST(Scan, RankZeroWarning) {
  const FanoContext ctx(1);
  const ChernCharacter v = numclass::numerical_lattice_basis(ctx)[1];
  const ScanResult r = walls::scan_candidates(ctx, v, Window{-2, 1, std::nullopt}, Bounds{});
  ASSERT_FALSE(r.warnings.empty());
  EXPECT_NE(r.warnings[0].find("rank-0"), std::string::npos);
}

TEST(Scan, IndependentOfWorkersAndOrder) {
  const FanoContext ctx(2);
  const ChernCharacter v = Rational(2) * -kulattice::kappa1(ctx);
  const Window window{-3, 1, std::nullopt};
  const Bounds bounds{5, 10, 2};
  const ScanResult base = walls::scan_candidates(ctx, v, window, bounds);
  for (unsigned jobs : {2u, 3u, 8u}) {
    for (unsigned long long seed : {1ULL, 99ULL}) {
      walls::ScanOptions opt;
      opt.jobs = jobs;
      opt.shuffle_seed = seed;
      const ScanResult r = walls::scan_candidates(ctx, v, window, bounds, opt);
      ASSERT_EQ(r.candidates.size(), base.candidates.size());
      for (std::size_t i = 0; i < r.candidates.size(); ++i) {
        EXPECT_EQ(r.candidates[i].wall, base.candidates[i].wall);
        EXPECT_EQ(r.candidates[i].destabilizer, base.candidates[i].destabilizer);
        EXPECT_EQ(r.candidates[i].sample_beta, base.candidates[i].sample_beta);
      }
      EXPECT_EQ(r.warnings, base.warnings);
    }
  }
}

TEST(Scan, DeduplicatesProportionalDestabilizers) {
  const FanoContext ctx(1);
  const ScanResult r =
      walls::scan_candidates(ctx, -kulattice::kappa1(ctx), Window{-3, 1, std::nullopt}, Bounds{6, 12, 2});
  std::set<std::pair<double, double>> seen;
  for (const auto& c : r.candidates) {
    EXPECT_TRUE(seen.insert({c.wall.center().get_d(), c.wall.radius_sq().get_d()}).second) << c.wall.to_string();
  }
}

TEST(Scan, RejectsBadInput) {
  const FanoContext ctx(1);
  const ChernCharacter v = -kulattice::kappa1(ctx);
  EXPECT_THROW(walls::scan_candidates(ctx, v, Window{0, 0, std::nullopt}, Bounds{}), DomainError);
  EXPECT_THROW(walls::scan_candidates(ctx, v, Window{-1, 0, Rational(0)}, Bounds{}), DomainError);
  EXPECT_THROW(walls::scan_candidates(ctx, v, Window{-1, 0, std::nullopt}, Bounds{-1, 2, 2}), DomainError);
  EXPECT_THROW(walls::scan_candidates(ctx, v, Window{-1, 0, std::nullopt}, Bounds{1, 2, 0}), DomainError);
}

TEST(Scan, AlphaBoundHidesLargeWalls) {
  const FanoContext ctx(1);
  const ChernCharacter v = -kulattice::kappa1(ctx);
  const Window low{-3, frac(-1, 2), frac(1, 8)};
  const ScanResult r = walls::scan_candidates(ctx, v, low, Bounds{});
  for (const auto& c : r.candidates) EXPECT_LT(c.sample_s, frac(1, 8));
  expect_valid(ctx, v, low, r);
}

TEST(Strip, MinusKappa1) {
  // Walls of -kappa1 accumulate at -sqrt(2/d), which lies inside the strip
  // once d >= 2; only degree 1 can be certified empty.
  for (int d = 1; d <= 5; ++d) {
    const FanoContext ctx(d);
    const auto report = walls::verify_strip_empty(ctx, -kulattice::kappa1(ctx), -1, 0);
    if (d == 1) {
      EXPECT_EQ(report.status, walls::StripReport::Status::empty);
    } else {
      EXPECT_NE(report.status, walls::StripReport::Status::empty) << "d=" << d;
      EXPECT_FALSE(report.scan.complete);
    }
    ASSERT_TRUE(report.minimality.has_value());
    EXPECT_EQ(report.minimality->im_v, d);
    EXPECT_EQ(report.minimality->lattice_step, d);
    EXPECT_TRUE(report.minimality->v_negated);
  }
}

TEST(Strip, MinimalityFailsAwayFromIntegerBeta) {
  const FanoContext ctx(1);
  const auto report = walls::verify_strip_empty(ctx, Rational(-2) * kulattice::kappa1(ctx), frac(-1, 2), 0);
  EXPECT_FALSE(report.minimality.has_value());
  EXPECT_TRUE(report.not_applicable.has_value());
}

TEST(LargestWall, MinusKappa1LeftSide) {
  const FanoContext ctx(1);
  const auto res = walls::largest_wall(ctx, -kulattice::kappa1(ctx), Bounds{}, walls::Side::left);
  ASSERT_TRUE(res.wall.has_value());
  EXPECT_EQ(res.wall->wall, Wall::semicircle(frac(-3, 2), frac(1, 4)));
}

TEST(LargestWall, StructureSheafHasNone) {
  const FanoContext ctx(3);
  const auto res = walls::largest_wall(ctx, ChernCharacter::unit());
  EXPECT_FALSE(res.wall.has_value());
  EXPECT_TRUE(res.complete);
}

}  // namespace
}  // namespace fanowalls
