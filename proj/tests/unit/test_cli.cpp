#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <vector>

#include "fanowalls/cli/app.hpp"
#include "fanowalls/cli/expr.hpp"
#include "fanowalls/cli/json_io.hpp"
#include "fanowalls/kulattice.hpp"
#include "support/generators.hpp"

namespace fanowalls {
namespace {

using numclass::ChernCharacter;
using numclass::FanoContext;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "fano-walls");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Expr, ParsesNamedClassesAndArithmetic) {
  const FanoContext ctx(2);
  EXPECT_EQ(cli::parse_class(ctx, "k1"), kulattice::kappa1(ctx));
  EXPECT_EQ(cli::parse_class(ctx, "-k1"), -kulattice::kappa1(ctx));
  EXPECT_EQ(cli::parse_class(ctx, "2*k1 - k2"), Rational(2) * kulattice::kappa1(ctx) - kulattice::kappa2(ctx));
  EXPECT_EQ(cli::parse_class(ctx, "O(-1)"), numclass::line_bundle(-1));
  EXPECT_EQ(cli::parse_class(ctx, "O(0) - pt"), ChernCharacter::unit() - numclass::point_class(ctx));
  EXPECT_EQ(cli::parse_class(ctx, "ch(1,0,-1/2,1/3)"), ChernCharacter(1, 0, frac(-1, 2), frac(1, 3)));
  EXPECT_EQ(cli::parse_class(ctx, "3/2*(k1+k2)"), frac(3, 2) * (kulattice::kappa1(ctx) + kulattice::kappa2(ctx)));
}

TEST(Expr, ReportsErrorPosition) {
  const FanoContext ctx(1);
  try {
    cli::parse_class(ctx, "k1 + ?");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(cli::parse_class(ctx, "O(1"), ParseError);
  EXPECT_THROW(cli::parse_class(ctx, "k3"), ParseError);
  EXPECT_THROW(cli::parse_class(ctx, ""), ParseError);
}

TEST(Json, ChernRoundTrip) {
  auto rng = testing::make_rng(60);
  for (int i = 0; i < 200; ++i) {
    const ChernCharacter e = testing::chern(rng);
    EXPECT_EQ(io::decode_chern(io::Json::parse(io::encode(e).dump())), e);
  }
}

TEST(Json, CandidateAndPageRoundTrip) {
  const FanoContext ctx(1);
  const auto r = walls::scan_candidates(ctx, -kulattice::kappa1(ctx), walls::Window{-3, 1, std::nullopt}, {});
  ASSERT_FALSE(r.candidates.empty());
  for (const auto& c : r.candidates) {
    const auto back = io::decode_candidate(io::Json::parse(io::encode(c).dump()));
    EXPECT_EQ(back.wall, c.wall);
    EXPECT_EQ(back.destabilizer, c.destabilizer);
    EXPECT_EQ(back.sample_beta, c.sample_beta);
    EXPECT_EQ(back.sample_s, c.sample_s);
  }
  specseq::PageTable t;
  t.set(0, 1, specseq::Dim(2) + specseq::Dim::unknown(1));
  t.set(1, 0, 3);
  t.notes[{0, 1}] = "2+3";
  const auto back = io::decode_page(io::Json::parse(io::encode(t).dump()));
  EXPECT_EQ(back, t);
  EXPECT_EQ(back.notes, t.notes);
}

TEST(Json, RejectsMalformedInput) {
  EXPECT_THROW(io::decode_rational(io::Json::parse("1.5")), Error);
  EXPECT_THROW(io::decode_chern(io::Json::parse("{\"a0\":\"1\"}")), Error);
  EXPECT_THROW(io::decode_page(io::Json::parse("{\"page\":1,\"entries\":[[0,0]]}")), Error);
}

TEST(App, ChiOfLineBundle) {
  const auto r = run({"chi", "--degree", "1", "--class", "O(2)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("= 7"), std::string::npos) << r.out;
}

TEST(App, EulerPairingWithVs) {
  const auto r = run({"chi", "--degree", "1", "--class", "O(0)-pt", "--vs", "pt"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("= 1"), std::string::npos) << r.out;
}

TEST(App, ErrorsExitWithCodeTwo) {
  auto r = run({"chi", "--degree", "9", "--class", "k1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error[usage]"), std::string::npos);
  r = run({"chi", "--degree", "1", "--class", "O(1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error[parse-error]"), std::string::npos);
  r = run({"scan", "--degree", "1", "--class", "k1", "--beta-min", "0", "--beta-max", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error[empty-window]"), std::string::npos);
}

TEST(App, ScanJsonIsParseableAndDeterministic) {
  const std::vector<std::string> args{"scan", "--degree", "1", "--class", "-k1", "--beta-min", "-3",
                                      "--beta-max", "1", "--format", "json", "--jobs", "3"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = io::Json::parse(a.out);
  EXPECT_EQ(j.at("candidates").size(), 3u);
  EXPECT_FALSE(j.at("complete").get<bool>());
}

TEST(App, OrbitAndMinusOne) {
  auto r = run({"orbit", "--degree", "1", "--class", "k1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("period 6"), std::string::npos);
  r = run({"minus-one", "--degree", "1", "--box", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("6 class(es)"), std::string::npos);
}

TEST(App, DenominatorGateIsOptIn) {
  auto r = run({"chi", "--degree", "3", "--class", "k1"});
  EXPECT_EQ(r.err, "");
  ::setenv("FANO_WALLS_DENOM_GATE", "1,1,2,6", 1);
  r = run({"chi", "--degree", "3", "--class", "k1"});
  ::unsetenv("FANO_WALLS_DENOM_GATE");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("integrality gate"), std::string::npos);
}

TEST(App, RenderSvg) {
  const auto r = run({"render", "--degree", "1", "--class", "-k1", "--beta-min", "-3", "--beta-max", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("<?xml", 0), 0u);
  EXPECT_NE(r.out.find("</svg>"), std::string::npos);
}

}  // namespace
}  // namespace fanowalls
