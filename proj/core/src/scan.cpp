#include <algorithm>
#include <exception>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "fanowalls/walls.hpp"

namespace fanowalls::walls {

namespace {

Rational q_of(const Truncation& t) { return t.c * t.c - 2 * t.e * t.r; }

// Im Z at beta, in truncated coordinates.
Rational im_at(const Truncation& t, const Rational& beta) { return t.c - beta * t.r; }

Rational re_at(const Truncation& t, const Rational& s, const Rational& beta) {
  const Rational e_beta = t.e - beta * t.c + beta * beta * t.r / 2;
  return -e_beta + s * t.r / 2;
}

Truncation minus(const Truncation& x, const Truncation& y) {
  return {x.r - y.r, x.c - y.c, x.e - y.e};
}

Rational abs_q(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

const Surd& max_surd(const Surd& x, const Surd& y) { return is_gt(compare(x, y)) ? x : y; }
const Surd& min_surd(const Surd& x, const Surd& y) { return is_lt(compare(x, y)) ? x : y; }

// Open interval with optional rational ends; an absent end is infinite.
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  bool empty = false;

  // Restricts to {beta : sign * (c - beta r) > 0}.
  void require_positive(const Rational& c, const Rational& r, int sign) {
    const Rational cc = sign * c;
    const Rational rr = sign * r;
    if (sgn(rr) == 0) {
      if (sgn(cc) <= 0) empty = true;
      return;
    }
    const Rational root = cc / rr;
    if (sgn(rr) > 0) {
      if (!hi || root < *hi) hi = root;
    } else {
      if (!lo || root > *lo) lo = root;
    }
  }
};

struct Piece {
  Surd lo;
  Surd hi;
};

// Minimal radius^2 of a semicircular wall of v meeting the open beta-window.
struct Reach {
  enum class Kind { none, bounded, accumulates } kind = Kind::none;
  Rational rho_sq;
  std::optional<Surd> accumulation;
};

void merge_reach(Reach& acc, const Reach& r) {
  if (acc.kind == Reach::Kind::accumulates) return;
  if (r.kind == Reach::Kind::accumulates) {
    acc = r;
  } else if (r.kind == Reach::Kind::bounded) {
    if (acc.kind == Reach::Kind::none || r.rho_sq < acc.rho_sq) acc = r;
  }
}

// Wall of the family through (s=0, beta=b): its squared radius.
Reach reach_through(const Rational& mu, const Rational& q, const Rational& b) {
  const Rational x = (mu * mu - q - b * b) / (2 * (mu - b));
  const Rational dx = b - x;
  return {Reach::Kind::bounded, dx * dx, std::nullopt};
}

// Family of walls on one side of the vertical wall mu, accumulating at
// mu -+ sqrt(q).
Reach family_reach(const Rational& mu, const Rational& q, const Window& w, bool left) {
  const Surd p{mu, left ? -1 : 1, q};
  if (!is_gt(compare(w.beta_min, p)) && !is_lt(compare(w.beta_max, p))) {
    return {Reach::Kind::accumulates, 0, p};
  }
  if (left) {
    if (is_gt(compare(w.beta_min, p))) {
      if (w.beta_min >= mu) return {};
      return reach_through(mu, q, w.beta_min);
    }
    return reach_through(mu, q, w.beta_max);
  }
  if (is_lt(compare(w.beta_max, p))) {
    if (w.beta_max <= mu) return {};
    return reach_through(mu, q, w.beta_max);
  }
  return reach_through(mu, q, w.beta_min);
}

Reach wall_reach(const Truncation& tv, const Rational& qv, const Window& w) {
  if (sgn(tv.r) == 0) {
    // Concentric family centred at e/c.
    const Rational x0 = tv.e / tv.c;
    if (x0 >= w.beta_min && x0 <= w.beta_max) return {Reach::Kind::accumulates, 0, Surd::exact(x0)};
    const Rational dist = x0 < w.beta_min ? Rational(w.beta_min - x0) : Rational(x0 - w.beta_max);
    return {Reach::Kind::bounded, dist * dist, std::nullopt};
  }
  const Rational mu = tv.c / tv.r;
  const Rational q = qv / (tv.r * tv.r);
  Reach acc;
  merge_reach(acc, family_reach(mu, q, w, true));
  merge_reach(acc, family_reach(mu, q, w, false));
  return acc;
}

// Closed e-interval allowed by Q(u) >= 0, Q(v-u) >= 0 and B(u, v-u) >= 0.
bool e_interval(const Truncation& tv, const Rational& r, const Rational& c, Rational& lo,
                Rational& hi) {
  std::optional<Rational> l, h;
  const auto add = [&](const Rational& coef, const Rational& rhs) {
    // coef * e >= rhs
    if (sgn(coef) == 0) return sgn(rhs) <= 0;
    const Rational t = rhs / coef;
    if (sgn(coef) > 0) {
      if (!l || t > *l) l = t;
    } else {
      if (!h || t < *h) h = t;
    }
    return true;
  };
  const Rational dc = tv.c - c;
  if (!add(-2 * r, -c * c)) return false;
  if (!add(2 * (tv.r - r), 2 * tv.e * (tv.r - r) - dc * dc)) return false;
  if (!add(2 * r - tv.r, tv.e * r - c * dc)) return false;
  if (!l || !h) throw DomainError("internal", "unbounded ch2 range in wall scan");
  lo = *l;
  hi = *h;
  return *l <= *h;
}

struct Job {
  const FanoContext& ctx;
  const ChernCharacter& v;
  const Truncation& tv;
  const Window& window;
  const Bounds& bounds;
  Rational qv;
  bool vertical_in_window;
};

std::vector<Piece> admissible_pieces(const Wall& wall, const Window& w) {
  std::vector<Piece> pieces;
  const Surd left{wall.center(), -1, wall.radius_sq()};
  const Surd right{wall.center(), 1, wall.radius_sq()};
  std::vector<Piece> raw;
  Rational tau_sq = 0;
  if (w.s_max) tau_sq = wall.radius_sq() - *w.s_max;
  if (sgn(tau_sq) <= 0) {
    raw.push_back({left, right});
  } else {
    raw.push_back({left, Surd{wall.center(), -1, tau_sq}});
    raw.push_back({Surd{wall.center(), 1, tau_sq}, right});
  }
  const Surd wmin = Surd::exact(w.beta_min);
  const Surd wmax = Surd::exact(w.beta_max);
  for (const auto& p : raw) {
    Piece q{max_surd(p.lo, wmin), min_surd(p.hi, wmax)};
    if (is_lt(compare(q.lo, q.hi))) pieces.push_back(q);
  }
  return pieces;
}

// A rational beta on the wall inside the window where Im Z(u) / Im Z(v) is
// in (0, 1).
bool semicircle_sample(const Wall& wall, const Window& w, const Truncation& tv,
                       const Truncation& tu, Rational& beta, Rational& s) {
  const Truncation tq = minus(tv, tu);
  const auto pieces = admissible_pieces(wall, w);
  for (const auto& piece : pieces) {
    for (int sign : {1, -1}) {
      Interval iv;
      iv.require_positive(tv.c, tv.r, sign);
      iv.require_positive(tu.c, tu.r, sign);
      iv.require_positive(tq.c, tq.r, sign);
      if (iv.empty) continue;
      Surd lo = piece.lo;
      Surd hi = piece.hi;
      if (iv.lo) lo = max_surd(lo, Surd::exact(*iv.lo));
      if (iv.hi) hi = min_surd(hi, Surd::exact(*iv.hi));
      Rational b;
      if (!rational_between(lo, hi, b)) continue;
      const Rational dx = b - wall.center();
      beta = b;
      s = wall.radius_sq() - dx * dx;
      return true;
    }
  }
  return false;
}

// Along a vertical wall Im vanishes for both classes; the filter compares
// real parts instead at a few fixed heights.
bool vertical_sample(const Wall& wall, const Window& w, const Truncation& tv, const Truncation& tu,
                     Rational& s) {
  static const long denominators[] = {1, 2, 4, 8, 16, 64, 256, 1024};
  const Rational top = w.s_max ? *w.s_max : Rational(2);
  for (long den : denominators) {
    const Rational cand = top / (2 * den);
    const Rational rv = re_at(tv, cand, wall.beta0());
    if (sgn(rv) == 0) continue;
    const Rational ratio = re_at(tu, cand, wall.beta0()) / rv;
    if (sgn(ratio) > 0 && ratio < 1) {
      s = cand;
      return true;
    }
  }
  return false;
}

void scan_rank(const Job& job, long a0, long c_lo_excl, long c_hi_excl,
               std::vector<CandidateWall>& out) {
  const int d = job.ctx.degree();
  const long den = job.bounds.ch2_denominator;
  const Rational r = Rational(d) * a0;
  for (long a1 = c_lo_excl + 1; a1 < c_hi_excl; ++a1) {
    const Rational c = Rational(d) * a1;
    if (sgn(r) == 0 && sgn(job.tv.r) == 0) continue;  // no semicircle, no vertical
    Rational e_lo, e_hi;
    if (!e_interval(job.tv, r, c, e_lo, e_hi)) continue;
    const Integer j_lo = fanowalls::ceil(Rational(e_lo * den));
    const Integer j_hi = fanowalls::floor(Rational(e_hi * den));
    for (Integer j = j_lo; j <= j_hi; ++j) {
      const Rational e(j, den);
      Rational e_norm = e;
      e_norm.canonicalize();
      const Truncation tu{r, c, e_norm};
      const Truncation tq = minus(job.tv, tu);
      const Rational q_sub = q_of(tu);
      const Rational q_quot = q_of(tq);
      if (sgn(q_sub) < 0 || sgn(q_quot) < 0 || q_sub + q_quot > job.qv) continue;
      ChernCharacter u{Rational(a0), Rational(a1), Rational(e_norm / d), Rational(0)};
      const WallLocus locus = numerical_wall(job.ctx, job.v, u);
      const Wall* wall = std::get_if<Wall>(&locus);
      if (!wall) continue;
      Rational beta, s;
      if (wall->is_vertical()) {
        if (!job.vertical_in_window || !vertical_sample(*wall, job.window, job.tv, tu, s)) continue;
        beta = wall->beta0();
      } else if (!semicircle_sample(*wall, job.window, job.tv, tu, beta, s)) {
        continue;
      }
      out.push_back({*wall, u, job.v - u, q_sub, q_quot, beta, s});
    }
  }
}

struct WallKey {
  Wall wall;
  bool operator<(const WallKey& o) const {
    if (wall.is_vertical() != o.wall.is_vertical()) return wall.is_vertical();
    if (wall.radius_sq() != o.wall.radius_sq()) return wall.radius_sq() > o.wall.radius_sq();
    return wall.center() < o.wall.center();
  }
};

std::string rat(const Rational& q) { return fanowalls::to_string(q); }

}  // namespace

ScanResult scan_candidates(const FanoContext& ctx, const ChernCharacter& v, const Window& window,
                           const Bounds& bounds, const ScanOptions& options) {
  if (!(window.beta_min < window.beta_max)) {
    throw DomainError("empty-window", "beta_min must be smaller than beta_max");
  }
  if (window.s_max && sgn(*window.s_max) <= 0) {
    throw DomainError("empty-window", "alpha^2 bound must be positive");
  }
  if (bounds.max_rank < 0 || bounds.max_c1_span < 0 || bounds.ch2_denominator < 1) {
    throw DomainError("invalid-bounds", "bounds must be nonnegative and ch2_denominator positive");
  }

  ScanResult result;
  const int d = ctx.degree();
  const Truncation tv = truncate(ctx, v);
  const Rational qv = q_of(tv);

  if (sgn(tv.r) == 0 && sgn(tv.c) != 0) {
    result.warnings.push_back("rank-0 class: all semicircular walls are centred at beta=" +
                              rat(tv.e / tv.c));
  }
  if (sgn(qv) < 0) {
    result.warnings.push_back("Q(v) < 0: no class with this truncation is tilt-semistable");
    result.complete = true;
    return result;
  }
  if (sgn(qv) == 0) {
    // Q-additivity forces Q(u) = Q(v-u) = B(u, v-u) = 0, hence proportional
    // truncations and no wall.
    result.complete = true;
    return result;
  }

  const Reach reach = wall_reach(tv, qv, window);
  long a0_lo = -bounds.max_rank;
  long a0_hi = bounds.max_rank;
  bool certified = false;
  if (reach.kind == Reach::Kind::accumulates) {
    std::ostringstream os;
    os << "walls of v accumulate at beta~" << reach.accumulation->approx()
       << " inside the window; enumeration cannot be certified";
    result.warnings.push_back(os.str());
  } else if (reach.kind == Reach::Kind::none) {
    certified = true;
    result.certified_max_rank = 0;
    result.certified_max_c1 = 0;
    a0_lo = 1;
    a0_hi = 0;
  } else {
    result.min_radius_sq = reach.rho_sq;
    // (|r_u| + |r_v - r_u|)^2 <= r_v^2 + Q(v)/rho^2 on every wall of v.
    const Rational k = tv.r * tv.r + qv / reach.rho_sq;
    Rational sk_lo, sk_hi;
    sqrt_bracket(k, 8, sk_lo, sk_hi);
    const long c_lo = fanowalls::ceil(Rational((tv.r - sk_hi) / (2 * d))).get_si();
    const long c_hi = fanowalls::floor(Rational((tv.r + sk_hi) / (2 * d))).get_si();
    long cert_lo = c_hi + 1, cert_hi = c_lo - 1;
    for (long a0 = c_lo; a0 <= c_hi; ++a0) {
      const Rational r = Rational(d) * a0;
      const Rational span = abs_q(r) + abs_q(Rational(tv.r - r));
      if (span * span <= k) {
        cert_lo = std::min(cert_lo, a0);
        cert_hi = std::max(cert_hi, a0);
      }
    }
    certified = true;
    result.certified_max_rank = std::max(std::abs(cert_lo), std::abs(cert_hi));
    if (cert_lo > cert_hi) result.certified_max_rank = 0;
    a0_lo = std::max(a0_lo, cert_lo);
    a0_hi = std::min(a0_hi, cert_hi);
    if (cert_lo < -bounds.max_rank || cert_hi > bounds.max_rank) certified = false;
  }

  // Im Z(u) lies strictly between 0 and Im Z(v) at the sample point, so a1 is
  // confined by the values at the window ends.
  const auto c_range = [&](long a0, long& lo_excl, long& hi_excl) {
    const Rational r = Rational(d) * a0;
    std::optional<Rational> lo, hi;
    for (const Rational* b : {&window.beta_min, &window.beta_max}) {
      const Rational imv = im_at(tv, *b);
      const Rational low = *b * r + (sgn(imv) < 0 ? imv : Rational(0));
      const Rational high = *b * r + (sgn(imv) > 0 ? imv : Rational(0));
      if (!lo || low < *lo) lo = low;
      if (!hi || high > *hi) hi = high;
    }
    lo_excl = fanowalls::floor(Rational(*lo / d)).get_si();
    hi_excl = fanowalls::ceil(Rational(*hi / d)).get_si();
  };

  std::vector<long> ranks;
  long max_c1_needed = 0;
  for (long a0 = a0_lo; a0 <= a0_hi; ++a0) {
    long lo, hi;
    c_range(a0, lo, hi);
    if (hi - lo >= 2) max_c1_needed = std::max({max_c1_needed, std::abs(lo + 1), std::abs(hi - 1)});
    ranks.push_back(a0);
  }
  if (result.certified_max_rank) {
    result.certified_max_c1 = max_c1_needed;
    if (max_c1_needed > bounds.max_c1_span) certified = false;
  }
  result.complete = certified;
  if (!certified && reach.kind == Reach::Kind::bounded) {
    std::ostringstream os;
    os << "bounds too small: a complete scan needs |a0| <= " << *result.certified_max_rank
       << " and |a1| <= " << max_c1_needed;
    result.warnings.push_back(os.str());
  }

  bool vertical_in_window = false;
  if (sgn(tv.r) != 0) {
    const Rational mu = tv.c / tv.r;
    vertical_in_window = mu > window.beta_min && mu < window.beta_max;
    if (vertical_in_window) {
      result.warnings.push_back("vertical wall at beta=" + rat(mu) +
                                " lies in the window; its candidates are not certified");
    }
  }

  if (options.shuffle_seed) {
    std::mt19937_64 rng(*options.shuffle_seed);
    std::shuffle(ranks.begin(), ranks.end(), rng);
  }

  const Job job{ctx, v, tv, window, bounds, qv, vertical_in_window};
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, ranks.size() ? ranks.size() : 1));
  std::vector<std::vector<CandidateWall>> found(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  const auto work = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < ranks.size(); i += jobs) {
        long lo, hi;
        c_range(ranks[i], lo, hi);
        lo = std::max(lo, -bounds.max_c1_span - 1);
        hi = std::min(hi, bounds.max_c1_span + 1);
        scan_rank(job, ranks[i], lo, hi, found[w]);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::map<WallKey, CandidateWall> by_wall;
  for (auto& bucket : found) {
    for (auto& cand : bucket) {
      WallKey key{cand.wall};
      auto it = by_wall.find(key);
      if (it == by_wall.end()) {
        by_wall.emplace(key, std::move(cand));
      } else if (is_lt(numclass::lex_compare(cand.destabilizer, it->second.destabilizer))) {
        it->second = std::move(cand);
      }
    }
  }
  for (auto& [key, cand] : by_wall) result.candidates.push_back(std::move(cand));
  return result;
}

StripReport verify_strip_empty(const FanoContext& ctx, const ChernCharacter& v,
                               const Rational& beta_left, const Rational& beta_right,
                               const Bounds& bounds, const ScanOptions& options) {
  StripReport report;
  const Truncation tv = truncate(ctx, v);
  const Rational im = im_at(tv, beta_left);
  Rational step(Integer(ctx.degree()), beta_left.get_den());
  step.canonicalize();
  if (sgn(im) == 0) {
    report.not_applicable = "Im Z(v) vanishes at beta=" + rat(beta_left);
  } else if (abs_q(im) != step) {
    report.not_applicable = "|Im Z(v)| = " + rat(abs_q(im)) + " at beta=" + rat(beta_left) +
                            " is not the lattice step " + rat(step);
  } else {
    report.minimality = MinimalityEvidence{beta_left, abs_q(im), sgn(im) < 0, step};
  }
  report.scan = scan_candidates(ctx, v, Window{beta_left, beta_right, std::nullopt}, bounds, options);
  if (!report.scan.candidates.empty()) {
    report.status = StripReport::Status::not_empty;
  } else if (report.scan.complete) {
    report.status = StripReport::Status::empty;
  } else {
    report.status = StripReport::Status::inconclusive;
  }
  return report;
}

namespace {

constexpr int kMaxWidening = 48;

struct SideResult {
  std::optional<CandidateWall> wall;
  bool complete = false;
  Window window;
  std::vector<std::string> warnings;
};

std::optional<CandidateWall> largest_of(const std::vector<CandidateWall>& cands) {
  std::optional<CandidateWall> best;
  for (const auto& c : cands) {
    if (c.wall.is_vertical()) continue;
    if (!best || c.wall.radius_sq() > best->wall.radius_sq()) best = c;
  }
  return best;
}

template <class WindowAt>
SideResult widen(const FanoContext& ctx, const ChernCharacter& v, const Bounds& bounds,
                 const ScanOptions& options, WindowAt window_at) {
  SideResult out;
  for (int k = 1; k <= kMaxWidening; ++k) {
    out.window = window_at(k);
    ScanResult scan = scan_candidates(ctx, v, out.window, bounds, options);
    auto best = largest_of(scan.candidates);
    if (best || !scan.complete) {
      out.wall = std::move(best);
      out.complete = scan.complete;
      out.warnings = std::move(scan.warnings);
      return out;
    }
  }
  out.warnings.push_back("no wall found before the accumulation point; smaller walls not excluded");
  return out;
}

}  // namespace

LargestWallResult largest_wall(const FanoContext& ctx, const ChernCharacter& v, const Bounds& bounds,
                               Side side, const ScanOptions& options) {
  LargestWallResult result;
  const int d = ctx.degree();
  const Truncation tv = truncate(ctx, v);
  const Rational qv = q_of(tv);
  if (sgn(qv) <= 0) {
    if (sgn(qv) < 0) result.warnings.push_back("Q(v) < 0: no walls");
    result.complete = true;
    return result;
  }

  std::vector<SideResult> sides;
  if (sgn(tv.r) == 0) {
    // Concentric walls of radius at most |c_v| / 2d.
    result.warnings.push_back("rank-0 class: walls are concentric, side is ignored");
    const Rational x0 = tv.e / tv.c;
    const Rational reach = abs_q(tv.c) / (2 * d) + 1;
    sides.push_back(widen(ctx, v, bounds, options, [&](int k) {
      Rational delta = reach;
      delta /= Rational(Integer(1) << k);
      return Window{x0 - reach, x0 - delta, std::nullopt};
    }));
  } else {
    const Rational mu = tv.c / tv.r;
    Rational root, root_hi;
    sqrt_bracket(qv / (tv.r * tv.r), 32, root, root_hi);
    const auto gap = [&](int k) {
      Rational g = root;
      g -= root / Rational(Integer(1) << k);
      return g;
    };
    if (side != Side::right) {
      sides.push_back(widen(ctx, v, bounds, options,
                            [&](int k) { return Window{mu - gap(k), mu, std::nullopt}; }));
    }
    if (side != Side::left) {
      sides.push_back(widen(ctx, v, bounds, options,
                            [&](int k) { return Window{mu, mu + gap(k), std::nullopt}; }));
    }
  }

  result.complete = true;
  for (auto& s : sides) {
    result.complete = result.complete && s.complete;
    result.window = s.window;
    for (auto& w : s.warnings) result.warnings.push_back(std::move(w));
    if (s.wall && (!result.wall || s.wall->wall.radius_sq() > result.wall->wall.radius_sq())) {
      result.wall = s.wall;
    }
  }
  return result;
}

}  // namespace fanowalls::walls
