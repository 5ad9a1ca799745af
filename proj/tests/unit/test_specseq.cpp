#include <gtest/gtest.h>

#include "fanowalls/specseq.hpp"
#include "support/generators.hpp"

namespace fanowalls {
namespace {

using specseq::Dim;
using specseq::DifferentialSpec;
using specseq::PageTable;

TEST(Dim, FormatAndParse) {
  EXPECT_EQ(Dim(5).to_string(), "5");
  EXPECT_EQ(Dim::unknown(0).to_string(), "*0");
  EXPECT_EQ((Dim(2) - Dim::unknown(0)).to_string(), "2-*0");
  EXPECT_EQ((Dim(1) + Dim::unknown(2) + Dim::unknown(2) + Dim::unknown(2)).to_string(), "1+3*2");
  EXPECT_EQ(Dim::parse("1+3*2"), Dim(1) + Dim::unknown(2) + Dim::unknown(2) + Dim::unknown(2));
  EXPECT_EQ(Dim::parse("+*1"), Dim::unknown(1));
  EXPECT_EQ(Dim::parse("-4"), Dim(-4));
  EXPECT_THROW(Dim::parse(""), ParseError);
  EXPECT_THROW(Dim::parse("3*"), ParseError);
  EXPECT_THROW(Dim::parse("3 4"), ParseError);
  EXPECT_THROW(static_cast<void>(Dim::unknown(0).value()), DomainError);
}

TEST(Dim, RandomRoundTrip) {
  auto rng = testing::make_rng(40);
  for (int i = 0; i < 500; ++i) {
    Dim d(testing::uniform(rng, -9, 9));
    for (int k = 0; k < 3; ++k) {
      const long c = testing::uniform(rng, -3, 3);
      for (long n = 0; n < (c < 0 ? -c : c); ++n) {
        if (c > 0) d += Dim::unknown(k);
        else d -= Dim::unknown(k);
      }
    }
    EXPECT_EQ(Dim::parse(d.to_string()), d) << d.to_string();
  }
}

TEST(PageTable, SetDropsZeroAndRejectsNegative) {
  PageTable t;
  t.set(0, 0, 3);
  t.set(0, 0, 0);
  EXPECT_TRUE(t.entries.empty());
  EXPECT_THROW(t.set(1, 1, -1), DomainError);
  EXPECT_EQ(t.at(5, 5), Dim(0));
}

TEST(NextPage, TargetsAndRankBookkeeping) {
  PageTable t;
  t.page = 2;
  t.set(0, 1, 4);
  t.set(2, 0, 3);
  EXPECT_EQ(specseq::target(t, {0, 1}), (specseq::Position{2, 0}));
  DifferentialSpec d;
  d.ranks[{0, 1}] = 2;
  const PageTable n = specseq::next_page(t, d);
  EXPECT_EQ(n.page, 3);
  EXPECT_EQ(n.at(0, 1), Dim(2));
  EXPECT_EQ(n.at(2, 0), Dim(1));
  d.ranks[{0, 1}] = 4;
  EXPECT_THROW(specseq::next_page(t, d), DomainError);
}

TEST(NextPage, EulerCharacteristicIsInvariant) {
  auto rng = testing::make_rng(41);
  for (int i = 0; i < 200; ++i) {
    PageTable t;
    t.page = static_cast<int>(testing::uniform(rng, 1, 3));
    for (int k = 0; k < 8; ++k) {
      t.set(static_cast<int>(testing::uniform(rng, -2, 2)), static_cast<int>(testing::uniform(rng, 0, 4)),
            testing::uniform(rng, 0, 6));
    }
    DifferentialSpec d;
    for (const auto& [src, dim] : t.entries) {
      const auto tgt = specseq::target(t, src);
      const long room = std::min(dim.value(), t.at(tgt.first, tgt.second).value());
      if (room > 0) d.ranks[src] = testing::uniform(rng, 0, room);
    }
    PageTable n;
    try {
      n = specseq::next_page(t, d);
    } catch (const DomainError&) {
      continue;  // two differentials hit the same entry too hard
    }
    EXPECT_EQ(specseq::euler_check(n), specseq::euler_check(t));
  }
}

TEST(NextPage, SymbolicRanksPropagate) {
  PageTable t;
  t.set(-1, 3, 2);
  t.set(0, 3, 1);
  DifferentialSpec d;
  d.ranks[{-1, 3}] = Dim::unknown(0);
  const PageTable n = specseq::next_page(t, d);
  EXPECT_EQ(n.at(-1, 3).to_string(), "2-*0");
  EXPECT_EQ(n.at(0, 3).to_string(), "1-*0");
  EXPECT_EQ(specseq::euler_check(n), specseq::euler_check(t));
}

TEST(Abutment, SumsAntidiagonals) {
  PageTable t;
  t.set(0, 1, 4);
  t.set(1, 0, 2);
  t.set(0, 0, 1);
  const auto dims = specseq::abutment_dims(t);
  EXPECT_EQ(dims.at(1), Dim(6));
  EXPECT_EQ(dims.at(0), Dim(1));
}

TEST(Render, ShowsRowsTopDown) {
  PageTable t;
  t.set(0, 0, 2);
  t.set(1, 1, Dim::unknown(0));
  const std::string text = specseq::render(t);
  EXPECT_NE(text.find("E_1"), std::string::npos);
  EXPECT_LT(text.find("q=1"), text.find("q=0"));
  EXPECT_NE(text.find("*0"), std::string::npos);
  EXPECT_EQ(specseq::render(PageTable{}), "(empty page 1)\n");
}

}  // namespace
}  // namespace fanowalls
