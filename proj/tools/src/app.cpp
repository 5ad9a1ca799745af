#include "fanowalls/cli/app.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "fanowalls/cli/acceptance.hpp"
#include "fanowalls/cli/expr.hpp"
#include "fanowalls/cli/json_io.hpp"

namespace fanowalls::cli {

namespace {

using numclass::ChernCharacter;
using numclass::FanoContext;

struct Request {
  int degree = 0;
  std::string cls;
  std::string vs;
  std::string beta_min;
  std::string beta_max;
  std::string alpha2_max;
  long max_rank = 4;
  long max_c1 = 8;
  long ch2_denom = 2;
  std::string format = "text";
  unsigned jobs = 1;
  std::string output;
  long box = 10;
  long max_steps = 64;
};

class Session {
 public:
  Session(const Request& req, std::ostream& out, std::ostream& err) : req_(req), out_(out), err_(err) {
    // Off unless FANO_WALLS_DENOM_GATE is set.
    gate_.enabled = false;
    if (const char* env = std::getenv("FANO_WALLS_DENOM_GATE")) gate_ = numclass::IntegralityGate::parse(env);
  }

  FanoContext context() const { return FanoContext(req_.degree); }

  ChernCharacter parse(const FanoContext& ctx, const std::string& text, const char* flag) {
    if (text.empty()) throw Error("missing-argument", std::string(flag) + " is required");
    ChernCharacter e = parse_class(ctx, text);
    if (gate_.enabled && !gate_.passes(e)) {
      std::ostringstream dens;
      for (std::size_t i = 0; i < 4; ++i) dens << (i ? "," : "") << gate_.denominators[i];
      err_ << "warning: " << numclass::to_string(e) << " fails the integrality gate (" << dens.str() << ")\n";
    }
    return e;
  }

  walls::Window window() const {
    if (req_.beta_min.empty() || req_.beta_max.empty()) {
      throw Error("missing-argument", "--beta-min and --beta-max are required");
    }
    walls::Window w{parse_rational(req_.beta_min), parse_rational(req_.beta_max), std::nullopt};
    if (!req_.alpha2_max.empty()) w.s_max = parse_rational(req_.alpha2_max);
    return w;
  }

  walls::Bounds bounds() const {
    walls::Bounds b;
    b.max_rank = req_.max_rank;
    b.max_c1_span = req_.max_c1;
    b.ch2_denominator = req_.ch2_denom;
    return b;
  }

  void emit(const std::string& text) {
    if (req_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(req_.output, std::ios::binary);
    if (!file) throw Error("io-error", "cannot write " + req_.output);
    file << text;
  }

  void emit_json(const io::Json& j) { emit(j.dump(2) + "\n"); }

  bool json() const { return req_.format == "json"; }

  const Request& req() const { return req_; }

 private:
  const Request& req_;
  std::ostream& out_;
  std::ostream& err_;
  numclass::IntegralityGate gate_;
};

std::string str(const Rational& q) { return fanowalls::to_string(q); }

int cmd_chi(Session& s) {
  const FanoContext ctx = s.context();
  const ChernCharacter e = s.parse(ctx, s.req().cls, "--class");
  if (!s.req().vs.empty()) {
    const ChernCharacter f = s.parse(ctx, s.req().vs, "--vs");
    const Rational v = numclass::euler_pairing(ctx, e, f);
    if (s.json()) {
      s.emit_json({{"degree", ctx.degree()}, {"class", io::encode(e)}, {"vs", io::encode(f)}, {"chi", io::encode(v)}});
    } else {
      s.emit("chi(" + numclass::to_string(e) + ", " + numclass::to_string(f) + ") = " + str(v) + "\n");
    }
    return 0;
  }
  const Rational v = numclass::chi(ctx, e);
  if (s.json()) {
    s.emit_json({{"degree", ctx.degree()}, {"class", io::encode(e)}, {"chi", io::encode(v)}});
  } else {
    s.emit("chi(" + numclass::to_string(e) + ") = " + str(v) + "\n");
  }
  return 0;
}

int cmd_euler_matrix(Session& s) {
  const FanoContext ctx = s.context();
  const auto m = kulattice::euler_matrix(ctx.degree());
  if (s.json()) {
    s.emit_json({{"degree", ctx.degree()}, {"matrix", io::encode(m)}});
  } else {
    s.emit(kulattice::to_string(m) + "\n");
  }
  return 0;
}

int cmd_hilbert(Session& s) {
  const FanoContext ctx = s.context();
  const ChernCharacter e = s.parse(ctx, s.req().cls, "--class");
  const auto p = numclass::hilbert_polynomial(ctx, e);
  if (s.json()) {
    s.emit_json({{"degree", ctx.degree()}, {"class", io::encode(e)}, {"hilbert", io::encode(p)}});
  } else {
    s.emit("P(t) = " + numclass::to_string(p) + "\n");
  }
  return 0;
}

int cmd_wall(Session& s) {
  const FanoContext ctx = s.context();
  const ChernCharacter v = s.parse(ctx, s.req().cls, "--class");
  const ChernCharacter u = s.parse(ctx, s.req().vs, "--vs");
  const auto locus = walls::numerical_wall(ctx, v, u);
  if (s.json()) {
    io::Json j = io::encode(locus);
    if (std::holds_alternative<walls::Wall>(locus)) j["destabilizer"] = io::encode(u);
    s.emit_json(j);
  } else {
    s.emit(walls::to_string(locus) + "\n");
  }
  return 0;
}

std::string scan_text(const walls::ScanResult& r) {
  std::ostringstream os;
  for (const auto& c : r.candidates) {
    os << c.wall.to_string() << "  destabilizer " << numclass::to_string(c.destabilizer) << "  Q(u)=" << str(c.q_sub)
       << " Q(v-u)=" << str(c.q_quot) << "  at beta=" << str(c.sample_beta) << " alpha^2=" << str(c.sample_s) << '\n';
  }
  os << r.candidates.size() << " candidate wall(s); " << (r.complete ? "complete" : "incomplete");
  if (r.certified_max_rank) os << " (certified |a0| <= " << *r.certified_max_rank << ", |a1| <= " << *r.certified_max_c1 << ")";
  os << '\n';
  for (const auto& w : r.warnings) os << "warning: " << w << '\n';
  return os.str();
}

std::vector<walls::RenderedWall> atlas(const FanoContext& ctx, const ChernCharacter& v, const walls::Window& w,
                                       const walls::ScanResult& r) {
  std::vector<walls::RenderedWall> out;
  const auto t = walls::truncate(ctx, v);
  if (sgn(t.r) != 0) {
    const Rational mu = t.c / t.r;
    if (mu >= w.beta_min && mu <= w.beta_max) out.push_back({walls::Wall::vertical(mu), "vertical wall"});
  }
  for (const auto& c : r.candidates) out.push_back({c.wall, numclass::to_string(c.destabilizer)});
  return out;
}

int cmd_scan(Session& s, bool render) {
  const FanoContext ctx = s.context();
  const ChernCharacter v = s.parse(ctx, s.req().cls, "--class");
  const walls::Window w = s.window();
  walls::ScanOptions opts;
  opts.jobs = s.req().jobs;
  const auto result = walls::scan_candidates(ctx, v, w, s.bounds(), opts);
  const std::string& fmt = s.req().format;
  if (render || fmt == "svg") {
    if (fmt == "json") {
      io::Json list = io::Json::array();
      for (const auto& rw : atlas(ctx, v, w, result)) {
        io::Json j = io::encode(rw.wall);
        j["label"] = rw.label;
        list.push_back(j);
      }
      s.emit_json({{"walls", list}, {"complete", result.complete}});
      return 0;
    }
    walls::RenderStyle style;
    style.title = "candidate walls of " + numclass::to_string(v) + " (d=" + std::to_string(ctx.degree()) + ")";
    s.emit(walls::render_walls(atlas(ctx, v, w, result), w, style));
    return 0;
  }
  if (s.json()) {
    io::Json j = io::encode(result);
    j["class"] = io::encode(v);
    j["degree"] = ctx.degree();
    s.emit_json(j);
  } else {
    s.emit(scan_text(result));
  }
  return 0;
}

kulattice::KuClass ku_class(const FanoContext& ctx, const ChernCharacter& e) {
  const auto k = kulattice::resolve(ctx, e);
  if (!k) throw DomainError("not-in-ku-lattice", numclass::to_string(e) + " is not an integral combination of k1, k2");
  return *k;
}

int cmd_orbit(Session& s) {
  const FanoContext ctx = s.context();
  const auto start = ku_class(ctx, s.parse(ctx, s.req().cls, "--class"));
  const auto orbit = kulattice::rotation_orbit(ctx, start, s.req().max_steps);
  if (s.json()) {
    io::Json list = io::Json::array();
    for (const auto& k : orbit.classes) list.push_back(io::encode(k));
    s.emit_json({{"degree", ctx.degree()},
                 {"start", io::encode(start)},
                 {"orbit", list},
                 {"period", orbit.period ? io::Json(*orbit.period) : io::Json(nullptr)}});
    return 0;
  }
  std::ostringstream os;
  for (const auto& k : orbit.classes) os << kulattice::to_string(k) << '\n';
  if (orbit.period) {
    os << "period " << *orbit.period << '\n';
  } else {
    os << "no return within " << s.req().max_steps << " steps\n";
  }
  s.emit(os.str());
  return 0;
}

int cmd_minus_one(Session& s) {
  const FanoContext ctx = s.context();
  const auto classes = kulattice::minus_one_classes(ctx.degree(), s.req().box);
  if (s.json()) {
    io::Json list = io::Json::array();
    for (const auto& k : classes) list.push_back(io::encode(k));
    s.emit_json({{"degree", ctx.degree()}, {"box", s.req().box}, {"classes", list}});
    return 0;
  }
  std::ostringstream os;
  for (const auto& k : classes) os << kulattice::to_string(k) << '\n';
  os << classes.size() << " class(es)\n";
  s.emit(os.str());
  return 0;
}

int cmd_verify(Session& s, std::ostream& out) {
  const auto results = run_acceptance();
  if (s.json()) {
    io::Json list = io::Json::array();
    bool all = true;
    for (const auto& r : results) {
      all = all && r.passed;
      list.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    }
    s.emit_json({{"passed", all}, {"checks", list}});
    return all ? 0 : 1;
  }
  std::ostringstream os;
  const bool all = print_results(os, results);
  os << (all ? "all checks passed" : "some checks FAILED") << '\n';
  if (s.req().output.empty()) {
    out << os.str();
  } else {
    s.emit(os.str());
  }
  return all ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Request req;
  CLI::App app{"Exact numerical stability data on index-2 Fano threefolds", "fano-walls"};
  app.require_subcommand(1);

  const auto degree = [&](CLI::App* sub) {
    sub->add_option("--degree", req.degree, "degree d = H^3")->required()->check(CLI::Range(1, 5));
  };
  const auto format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", req.format, "output format")->check(CLI::IsMember(std::move(allowed)));
    sub->add_option("--output", req.output, "write output to this file");
  };
  const auto klass = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--class", req.cls, "class expression, e.g. \"-k1\" or \"ch(1,0,-1,0)\"");
    if (required) o->required();
  };
  const auto scan_flags = [&](CLI::App* sub) {
    sub->add_option("--beta-min", req.beta_min, "left end of the beta window")->required();
    sub->add_option("--beta-max", req.beta_max, "right end of the beta window")->required();
    sub->add_option("--alpha2-max", req.alpha2_max, "upper bound for alpha^2");
    sub->add_option("--max-rank", req.max_rank, "largest |ch0| of a destabilizer")->capture_default_str();
    sub->add_option("--max-c1", req.max_c1, "largest |ch1| of a destabilizer")->capture_default_str();
    sub->add_option("--ch2-denom", req.ch2_denom, "H.ch2 runs over (1/n)Z")->capture_default_str();
    sub->add_option("--jobs", req.jobs, "worker threads")->capture_default_str();
  };

  auto* chi = app.add_subcommand("chi", "Euler characteristic, or Euler pairing with --vs");
  degree(chi);
  klass(chi, true);
  chi->add_option("--vs", req.vs, "second class for chi(class, vs)");
  format(chi, {"text", "json"});

  auto* euler = app.add_subcommand("euler-matrix", "Euler form on kappa1, kappa2");
  degree(euler);
  format(euler, {"text", "json"});

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert polynomial chi(E(t))");
  degree(hilbert);
  klass(hilbert, true);
  format(hilbert, {"text", "json"});

  auto* wall = app.add_subcommand("wall", "numerical wall of --class with respect to --vs");
  degree(wall);
  klass(wall, true);
  wall->add_option("--vs", req.vs, "destabilizing class")->required();
  format(wall, {"text", "json"});

  auto* scan = app.add_subcommand("scan", "enumerate candidate walls in a window");
  degree(scan);
  klass(scan, true);
  scan_flags(scan);
  format(scan, {"text", "json", "svg"});

  auto* orbit = app.add_subcommand("orbit", "orbit of a Kuznetsov class under rotation");
  degree(orbit);
  klass(orbit, true);
  orbit->add_option("--max-steps", req.max_steps, "iteration limit")->capture_default_str();
  format(orbit, {"text", "json"});

  auto* minus_one = app.add_subcommand("minus-one", "(-1)-classes of the Kuznetsov lattice in a box");
  degree(minus_one);
  minus_one->add_option("--box", req.box, "coordinate bound")->capture_default_str();
  format(minus_one, {"text", "json"});

  auto* render = app.add_subcommand("render", "SVG atlas of candidate walls");
  degree(render);
  klass(render, true);
  scan_flags(render);
  format(render, {"svg", "json"});

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  format(verify, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error[usage]: " << e.what() << '\n';
    return 2;
  }

  try {
    Session session(req, out, err);
    if (chi->parsed()) return cmd_chi(session);
    if (euler->parsed()) return cmd_euler_matrix(session);
    if (hilbert->parsed()) return cmd_hilbert(session);
    if (wall->parsed()) return cmd_wall(session);
    if (scan->parsed()) return cmd_scan(session, false);
    if (orbit->parsed()) return cmd_orbit(session);
    if (minus_one->parsed()) return cmd_minus_one(session);
    if (render->parsed()) return cmd_scan(session, true);
    if (verify->parsed()) return cmd_verify(session, out);
  } catch (const Error& e) {
    err << "error[" << e.kind() << "]: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace fanowalls::cli
