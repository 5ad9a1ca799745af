#include "fanowalls/cli/acceptance.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "fanowalls/cli/json_io.hpp"
#include "fanowalls/kulattice.hpp"
#include "fanowalls/numclass.hpp"
#include "fanowalls/specseq.hpp"
#include "fanowalls/walls.hpp"
#include "fanowalls/weakstab.hpp"

namespace fanowalls::cli {

namespace {

using kulattice::KuClass;
using kulattice::Matrix2;
using numclass::ChernCharacter;
using numclass::FanoContext;
using specseq::Dim;
using specseq::PageTable;

// Collects failures for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  bool passed() const { return failures_.empty(); }
  std::string detail() const {
    if (failures_.empty()) return std::to_string(count_) + " assertions";
    std::string out;
    for (std::size_t i = 0; i < failures_.size(); ++i) {
      if (i == 4) {
        out += "; ... " + std::to_string(failures_.size() - 4) + " more";
        break;
      }
      if (i) out += "; ";
      out += failures_[i];
    }
    return out;
  }

 private:
  long count_ = 0;
  std::vector<std::string> failures_;
};

std::string str(const Rational& q) { return fanowalls::to_string(q); }

Rational random_rational(std::mt19937_64& rng, long num, long den) {
  std::uniform_int_distribution<long> n(-num, num);
  std::uniform_int_distribution<long> d(1, den);
  Rational q(n(rng), d(rng));
  q.canonicalize();
  return q;
}

ChernCharacter random_class(std::mt19937_64& rng) {
  return {random_rational(rng, 6, 3), random_rational(rng, 6, 3), random_rational(rng, 12, 6),
          random_rational(rng, 12, 12)};
}

// --- spectral sequence tables -------------------------------------------

PageTable ideal_sheaf_first_page() {
  PageTable t;
  t.set(-1, 3, 2);
  t.set(0, 3, 1);
  t.set(-1, 2, 1);
  t.set(0, 2, 3);
  t.set(0, 1, 5);
  t.set(1, 1, 1);
  t.set(0, 0, 2);
  t.set(1, 0, 2);
  t.notes[{0, 1}] = "2+3";
  t.notes[{0, 0}] = "1+1";
  return t;
}

specseq::DifferentialSpec ideal_sheaf_differentials() {
  specseq::DifferentialSpec d;
  d.ranks[{-1, 3}] = Dim::unknown(0);
  d.ranks[{-1, 2}] = 1;
  d.ranks[{0, 1}] = 1;
  d.ranks[{0, 0}] = 1;
  return d;
}

PageTable gx_first_page() {
  PageTable t;
  t.set(-1, 2, 1);
  t.set(0, 2, Dim::unknown(0));
  t.set(0, 1, 2);
  t.set(0, 0, 2);
  t.set(1, 0, 1);
  t.notes[{0, 1}] = "0+2";
  t.notes[{0, 0}] = "1+1";
  return t;
}

// --- criteria --------------------------------------------------------------

void criterion_euler_matrix(Check& c) {
  for (int d = 1; d <= 5; ++d) {
    const FanoContext ctx(d);
    const std::array<ChernCharacter, 2> k{kulattice::kappa1(ctx), kulattice::kappa2(ctx)};
    const Rational expected[2][2] = {{-1, -1}, {1 - d, -d}};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const Rational got = numclass::euler_pairing(ctx, k[i], k[j]);
        c.expect(got == expected[i][j], "d=" + std::to_string(d) + " chi(k" + std::to_string(i + 1) + ",k" +
                                            std::to_string(j + 1) + ")=" + str(got));
      }
    }
  }
}

void criterion_sections(Check& c) {
  const FanoContext ctx(1);
  const Rational one = numclass::chi(ctx, numclass::line_bundle(1));
  const Rational two = numclass::chi(ctx, numclass::line_bundle(2));
  c.expect(one == 3, "chi(O(1))=" + str(one));
  c.expect(two == 7, "chi(O(2))=" + str(two));
}

void criterion_ideal_class(Check& c) {
  numclass::HilbertPolynomial line;
  line.p = {1, 1, 0, 0};
  for (int d = 1; d <= 5; ++d) {
    const FanoContext ctx(d);
    const ChernCharacter ideal = ChernCharacter::unit() - numclass::class_from_hilbert(ctx, line, 1);
    c.expect(ideal == kulattice::kappa1(ctx), "d=" + std::to_string(d) + ": " + numclass::to_string(ideal));
  }
}

void criterion_ideal_point(Check& c) {
  const FanoContext ctx(1);
  const Rational v = numclass::euler_pairing(ctx, kulattice::kappa1(ctx), numclass::point_class(ctx));
  c.expect(v == 1, "chi(I_Z, O_p)=" + str(v));
}

void criterion_wall_geometry(Check& c) {
  const FanoContext ctx(1);
  const ChernCharacter v = -kulattice::kappa1(ctx);
  const auto semi = walls::numerical_wall(ctx, v, numclass::line_bundle(-1));
  const auto* w = std::get_if<walls::Wall>(&semi);
  c.expect(w && !w->is_vertical() && w->center() == Rational(-3, 2) && w->radius_sq() == Rational(1, 4),
           "wall vs O(-1): " + walls::to_string(semi));
  const auto vert = walls::numerical_wall(ctx, v, ChernCharacter::unit());
  const auto* u = std::get_if<walls::Wall>(&vert);
  c.expect(u && u->is_vertical() && sgn(u->beta0()) == 0, "wall vs O_Y: " + walls::to_string(vert));
}

void criterion_strip(Check& c) {
  const FanoContext ctx(1);
  const ChernCharacter v = -kulattice::kappa1(ctx);
  const walls::Bounds bounds;
  const auto scan = walls::scan_candidates(ctx, v, {-1, 0, Rational(4)}, bounds);
  c.expect(scan.candidates.empty(), std::to_string(scan.candidates.size()) + " candidates in (-1,0)");
  c.expect(scan.complete, "scan over (-1,0) not certified complete");
  const auto report = walls::verify_strip_empty(ctx, v, -1, 0, bounds);
  c.expect(report.status == walls::StripReport::Status::empty, "strip report not empty");
  c.expect(report.minimality.has_value(), "minimality: " + report.not_applicable.value_or("missing"));
  if (report.minimality) {
    c.expect(report.minimality->im_v == 1, "|Im Z(v)| at -1 = " + str(report.minimality->im_v));
    c.expect(report.minimality->lattice_step == 1, "lattice step " + str(report.minimality->lattice_step));
  }
}

void criterion_bms(Check& c) {
  const FanoContext ctx(1);
  const ChernCharacter f{1, 0, -1, 0};
  const auto half = weakstab::bms_ch3_bound(ctx, f, 0, Rational(-1, 2));
  c.expect(half.kind == weakstab::Ch3Bound::Kind::at_most && half.threshold == Rational(3, 2),
           "beta=-1/2 threshold " + str(half.threshold));
  const auto one = weakstab::bms_ch3_bound(ctx, f, 0, -1);
  c.expect(one.kind == weakstab::Ch3Bound::Kind::at_most && one.threshold == 1,
           "beta=-1 threshold " + str(one.threshold));
  // The threshold itself is the boundary case of the inequality.
  ChernCharacter edge = f;
  edge[3] = Rational(3, 2);
  c.expect(sgn(weakstab::bms_inequality(ctx, edge, 0, Rational(-1, 2))) == 0, "value at m=3/2 is not 0");
  edge[3] = Rational(3, 2) + Rational(1, 1000);
  c.expect(sgn(weakstab::bms_inequality(ctx, edge, 0, Rational(-1, 2))) < 0, "m>3/2 not excluded");
}

void criterion_rotation(Check& c) {
  const Matrix2 printed = Matrix2::of(0, -1, 1, 1);
  for (int d = 1; d <= 5; ++d) {
    const FanoContext ctx(d);
    const auto r = kulattice::rotation(ctx);
    const std::string tag = "d=" + std::to_string(d) + ": ";
    c.expect(r.matrix == printed, tag + "R=" + kulattice::to_string(r.matrix));
    const KuClass k2{0, 1}, k2_minus_k1{-1, 1};
    c.expect(r.apply(k2) == k2_minus_k1, tag + "R(k2)=" + kulattice::to_string(r.apply(k2)));
    c.expect(r.apply(k2_minus_k1) == KuClass{-1, 0},
             tag + "R(k2-k1)=" + kulattice::to_string(r.apply(k2_minus_k1)));
    // [M_p] = L_O(I_p(1)).
    const ChernCharacter ip = ChernCharacter::unit() - numclass::point_class(ctx);
    const ChernCharacter mp = kulattice::left_mutation(ctx, ChernCharacter::unit(), numclass::tensor_line(ip, 1));
    c.expect(mp == kulattice::embed(ctx, {-d, 1}), tag + "[M_p]=" + numclass::to_string(mp));
  }
}

void criterion_orbit(Check& c) {
  const FanoContext ctx(1);
  const auto orbit = kulattice::rotation_orbit(ctx, {1, 0});
  c.expect(orbit.period == 6, "period " + (orbit.period ? std::to_string(*orbit.period) : std::string("none")));
  std::vector<KuClass> expected{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
  std::sort(expected.begin(), expected.end());
  std::vector<KuClass> seen = orbit.classes;
  std::sort(seen.begin(), seen.end());
  c.expect(seen == expected, "orbit set differs from the six (-1)-classes");
  const auto minus_one = kulattice::minus_one_classes(1, 50);
  c.expect(minus_one == expected, std::to_string(minus_one.size()) + " (-1)-classes in box 50");
}

void criterion_serre(Check& c) {
  const FanoContext ctx(1);
  const auto s = kulattice::serre_operator(1);
  const auto r = kulattice::rotation(ctx);
  c.expect(s.matrix.inverse() == -(r.matrix * r.matrix),
           "S^-1=" + kulattice::to_string(s.matrix.inverse()) + " vs -R^2");
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<long> coord(-30, 30);
  for (int i = 0; i < 100; ++i) {
    const KuClass a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)};
    const KuClass sa = s.apply(a);
    const Rational lhs = numclass::euler_pairing(ctx, kulattice::embed(ctx, a), kulattice::embed(ctx, b));
    const Rational rhs = numclass::euler_pairing(ctx, kulattice::embed(ctx, b), kulattice::embed(ctx, sa));
    c.expect(lhs == rhs, "chi(a,b) != chi(b,Sa) at a=" + kulattice::to_string(a) + " b=" + kulattice::to_string(b));
  }
}

void criterion_spectral(Check& c) {
  const PageTable e1 = ideal_sheaf_first_page();
  const PageTable e2 = specseq::next_page(e1, ideal_sheaf_differentials());
  const int printed[4][3] = {{0, 1, 1}, {0, 4, 0}, {0, 2, 0}, {-1, -1, 0}};  // rows q = 0..3, -1 = unknown
  for (int q = 0; q < 4; ++q) {
    for (int p = -1; p <= 1; ++p) {
      const Dim got = e2.at(p, q);
      const int want = printed[q][p + 1];
      const bool ok = want < 0 ? !got.is_known() : (got.is_known() && got.value() == want);
      c.expect(ok, "E2(" + std::to_string(p) + "," + std::to_string(q) + ")=" + got.to_string());
    }
  }
  const Dim ext1 = specseq::abutment_dims(e2)[1];
  c.expect(ext1 == Dim(5), "ext1(I_Z,I_Z)=" + ext1.to_string());
  const Dim chi1 = specseq::euler_check(e1);
  const Dim chi2 = specseq::euler_check(e2);
  c.expect(chi1 == chi2, "alternating sum changed: " + chi1.to_string() + " -> " + chi2.to_string());
  const FanoContext ctx(1);
  const Rational chi = numclass::euler_pairing(ctx, kulattice::kappa1(ctx), kulattice::kappa1(ctx));
  c.expect(chi1.is_known() && Rational(chi1.value()) == chi, "alternating sum " + chi1.to_string() + " vs chi " + str(chi));

  const PageTable g1 = gx_first_page();
  specseq::DifferentialSpec bottom;
  bottom.ranks[{0, 0}] = 1;
  const PageTable g2 = specseq::next_page(g1, bottom);
  const Dim g_ext1 = specseq::abutment_dims(g2)[1];
  c.expect(g_ext1 == Dim(3), "ext1(G_x,G_x)=" + g_ext1.to_string());
  c.expect(specseq::euler_check(g1) == specseq::euler_check(g2), "G_x alternating sum changed");
}

// Exact test for transversal intersection of two semicircles on the axis.
bool transversal(const walls::Wall& a, const walls::Wall& b) {
  const Rational dist = a.center() - b.center();
  const Rational d2 = dist * dist;
  const Rational prod = a.radius_sq() * b.radius_sq();
  const Rational sum = a.radius_sq() + b.radius_sq();
  // (rho_a - rho_b)^2 < d2 < (rho_a + rho_b)^2
  const bool inside_outer = sign_of(Rational(sum - d2), 2, prod, 0, 0) > 0;
  const bool outside_inner = sign_of(Rational(d2 - sum), 2, prod, 0, 0) > 0;
  return inside_outer && outside_inner;
}

bool same_candidates(const std::vector<walls::CandidateWall>& x, const std::vector<walls::CandidateWall>& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i].wall == y[i].wall) || x[i].destabilizer != y[i].destabilizer ||
        x[i].sample_beta != y[i].sample_beta || x[i].sample_s != y[i].sample_s) {
      return false;
    }
  }
  return true;
}

template <class T, class Dec>
bool round_trips(const T& value, Dec decode) {
  const std::string text = io::encode(value).dump();
  return decode(io::Json::parse(text)) == value && io::encode(decode(io::Json::parse(text))).dump() == text;
}

void criterion_properties(Check& c) {
  std::mt19937_64 rng(0x5eed1234ULL);

  // Twist group law.
  for (int i = 0; i < 200; ++i) {
    const ChernCharacter e = random_class(rng);
    const Rational b1 = random_rational(rng, 7, 4), b2 = random_rational(rng, 7, 4);
    c.expect(numclass::twist(numclass::twist(e, b1), b2) == numclass::twist(e, b1 + b2),
             "twist law fails for " + numclass::to_string(e));
  }

  // Q is independent of beta.
  std::uniform_int_distribution<int> degree(1, 5);
  for (int i = 0; i < 50; ++i) {
    const FanoContext ctx(degree(rng));
    const ChernCharacter e = random_class(rng);
    const Rational q0 = weakstab::q_form(ctx, e, 0);
    for (int j = 0; j < 20; ++j) {
      const Rational b = random_rational(rng, 9, 5);
      c.expect(weakstab::q_form(ctx, e, b) == q0, "Q depends on beta for " + numclass::to_string(e));
    }
  }

  // Scan outputs: nesting and order independence.
  struct ScanCase {
    int d;
    ChernCharacter v;
    walls::Window window;
  };
  const FanoContext d1(1);
  std::vector<ScanCase> cases{{1, -kulattice::kappa1(d1), {-2, 0, Rational(4)}},
                              {1, ChernCharacter{2, -1, 0, 0}, {-3, Rational(-1, 2), std::nullopt}},
                              {2, ChernCharacter{1, 0, -1, 0}, {-2, 0, std::nullopt}},
                              {3, ChernCharacter{-1, 1, 0, 0}, {-1, 3, std::nullopt}}};
  walls::Bounds small;
  small.max_rank = 3;
  small.max_c1_span = 6;
  for (const auto& sc : cases) {
    const FanoContext ctx(sc.d);
    const auto base = walls::scan_candidates(ctx, sc.v, sc.window, small);
    const std::string tag = "v=" + numclass::to_string(sc.v) + " d=" + std::to_string(sc.d);
    const Rational r = sc.d * sc.v[0];
    for (std::size_t i = 0; i < base.candidates.size(); ++i) {
      for (std::size_t j = i + 1; j < base.candidates.size(); ++j) {
        const auto& a = base.candidates[i].wall;
        const auto& b = base.candidates[j].wall;
        if (a.is_vertical() || b.is_vertical()) continue;
        if (sgn(r) != 0) {
          const Rational mu = sc.v[1] / sc.v[0];
          if ((a.center() < mu) != (b.center() < mu)) continue;
        }
        c.expect(!transversal(a, b), tag + ": walls " + a.to_string() + " and " + b.to_string() + " cross");
      }
      // Apex identity at the sample point.
      const auto& cand = base.candidates[i];
      c.expect(sgn(walls::slope_equality_residual(ctx, sc.v, cand.destabilizer, cand.sample_s, cand.sample_beta)) == 0,
               tag + ": sample point off the wall");
    }
    walls::ScanOptions shuffled{4, 7};
    walls::ScanOptions other{3, 11};
    c.expect(same_candidates(base.candidates, walls::scan_candidates(ctx, sc.v, sc.window, small, shuffled).candidates),
             tag + ": scan depends on traversal order");
    c.expect(same_candidates(base.candidates, walls::scan_candidates(ctx, sc.v, sc.window, small, other).candidates),
             tag + ": scan depends on worker count");

    for (const auto& cand : base.candidates) {
      const std::string text = io::encode(cand).dump();
      const auto back = io::decode_candidate(io::Json::parse(text));
      c.expect(io::encode(back).dump() == text, tag + ": candidate JSON round trip");
    }
  }

  // JSON round trips.
  for (int i = 0; i < 100; ++i) {
    const ChernCharacter e = random_class(rng);
    c.expect(round_trips(e, io::decode_chern), "ChernCharacter JSON round trip " + numclass::to_string(e));
    const KuClass k{static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 41) - 20};
    c.expect(round_trips(k, io::decode_ku_class), "KuClass JSON round trip");
    const Rational center = random_rational(rng, 20, 7);
    const Rational rad = abs(random_rational(rng, 20, 7)) + Rational(1, 9);
    const auto w = walls::Wall::semicircle(center, rad);
    c.expect(round_trips(w, io::decode_wall), "Wall JSON round trip " + w.to_string());
    const auto vw = walls::Wall::vertical(center);
    c.expect(round_trips(vw, io::decode_wall), "vertical Wall JSON round trip");
  }
  for (int i = 0; i < 30; ++i) {
    PageTable t;
    t.page = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < 6; ++j) {
      const int p = static_cast<int>(rng() % 5) - 2, q = static_cast<int>(rng() % 5);
      Dim dim = static_cast<long>(rng() % 6);
      if (rng() % 4 == 0) dim += Dim::unknown(static_cast<int>(rng() % 3));
      t.set(p, q, dim);
    }
    c.expect(round_trips(t, io::decode_page), "PageTable JSON round trip");
  }

  // Embedding against the Euler matrix.
  std::uniform_int_distribution<long> coord(-25, 25);
  for (int d = 1; d <= 5; ++d) {
    const FanoContext ctx(d);
    for (int i = 0; i < 200; ++i) {
      const KuClass a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)};
      const Rational direct = numclass::euler_pairing(ctx, kulattice::embed(ctx, a), kulattice::embed(ctx, b));
      c.expect(direct == kulattice::euler_form_ku(d, a, b),
               "d=" + std::to_string(d) + " embed cross-check at " + kulattice::to_string(a));
    }
  }
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Check&)> run;
};

}  // namespace

std::vector<CheckResult> run_acceptance() {
  const std::vector<Criterion> criteria{
      {1, "Euler matrix [[-1,-1],[1-d,-d]] for d=1..5", criterion_euler_matrix},
      {2, "chi(O(1))=3 and chi(O(2))=7 for d=1", criterion_sections},
      {3, "unit - class_from_hilbert(t+1, 1) = kappa1 for all d", criterion_ideal_class},
      {4, "chi(I_Z, O_p) = 1 for d=1", criterion_ideal_point},
      {5, "walls of -kappa1: O(-1) semicircle and vertical beta=0", criterion_wall_geometry},
      {6, "no candidate walls of -kappa1 in -1<beta<0", criterion_strip},
      {7, "BMS thresholds ch3 <= 3/2 and ch3 <= 1", criterion_bms},
      {8, "rotation matrix [[0,-1],[1,1]] for every d and [M_p]", criterion_rotation},
      {9, "rotation orbit and (-1)-classes for d=1", criterion_orbit},
      {10, "Serre operator S^-1 = -R^2 for d=1", criterion_serre},
      {11, "spectral sequences: ext1(I_Z,I_Z)=5, ext1(G_x,G_x)=3", criterion_spectral},
      {12, "randomized property suites", criterion_properties},
  };
  std::vector<CheckResult> out;
  for (const auto& crit : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.run(check);
    } catch (const Error& e) {
      check.expect(false, "error[" + e.kind() + "]: " + e.what());
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    out.push_back({crit.id, crit.title, check.passed(), check.detail(), took.count()});
  }
  return out;
}

bool print_results(std::ostream& os, const std::vector<CheckResult>& results) {
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(3) << r.seconds << "s";
    os << "criterion " << std::setw(2) << r.id << ' ' << (r.passed ? "PASS" : "FAIL") << "  " << r.title << "  ["
       << secs.str() << "]  " << r.detail << '\n';
  }
  return all;
}

}  // namespace fanowalls::cli
