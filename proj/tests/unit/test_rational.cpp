#include <gtest/gtest.h>

#include <cmath>

#include "fanowalls/rational.hpp"
#include "support/generators.hpp"

namespace fanowalls {
namespace {

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("6/4"), frac(3, 2));
  EXPECT_EQ(parse_rational("-7"), -7);
  EXPECT_EQ(to_string(parse_rational("-10/4")), "-5/2");
  EXPECT_EQ(to_string(frac(8, 4)), "2");
  for (const char* bad : {"", "1/0", "1.5", " 1", "1/", "/2", "--1", "1/-2x"}) {
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
  }
}

TEST(Rational, FracCanonicalizes) {
  const Rational a = frac(-24, 24);
  EXPECT_EQ(a, -1);
  EXPECT_EQ(a.get_den(), 1);
  EXPECT_EQ(frac(3, -6), frac(-1, 2));
}

TEST(Rational, FloorCeilAgainstDouble) {
  auto rng = testing::make_rng(50);
  for (int i = 0; i < 500; ++i) {
    const Rational q = testing::rational(rng, 100, 13);
    EXPECT_EQ(floor(q).get_si(), static_cast<long>(std::floor(q.get_d())));
    EXPECT_EQ(ceil(q).get_si(), static_cast<long>(std::ceil(q.get_d())));
    EXPECT_EQ(is_integer(q), floor(q) == ceil(q));
  }
}

TEST(Sqrt, ExactSquares) {
  Rational root;
  EXPECT_TRUE(exact_sqrt(frac(9, 4), root));
  EXPECT_EQ(root, frac(3, 2));
  EXPECT_FALSE(exact_sqrt(2, root));
  EXPECT_FALSE(exact_sqrt(frac(1, 2), root));
  EXPECT_TRUE(exact_sqrt(0, root));
  EXPECT_EQ(root, 0);
}

TEST(Sqrt, BracketIsTight) {
  for (long n : {2L, 3L, 5L, 1000003L}) {
    Rational lo, hi;
    sqrt_bracket(Rational(n), 40, lo, hi);
    EXPECT_LE(lo * lo, n);
    EXPECT_GE(hi * hi, n);
    EXPECT_LE(hi - lo, Rational(1, 1UL << 40));
  }
}

TEST(SignOf, MatchesHighPrecisionEvaluation) {
  auto rng = testing::make_rng(51);
  for (int i = 0; i < 2000; ++i) {
    const Rational a = testing::rational(rng, 20, 5);
    const Rational b = testing::rational(rng, 5, 3);
    const Rational c = testing::rational(rng, 5, 3);
    const Rational p(testing::uniform(rng, 0, 12));
    const Rational r(testing::uniform(rng, 0, 12));
    mpf_class x(a, 256), y(p, 256), z(r, 256);
    x += mpf_class(b, 256) * sqrt(y) + mpf_class(c, 256) * sqrt(z);
    const int expected = std::abs(x.get_d()) < 1e-40 ? 0 : sgn(x);
    if (expected == 0) continue;
    EXPECT_EQ(sign_of(a, b, p, c, r), expected);
  }
  EXPECT_EQ(sign_of(-3, 1, 2, 1, 2), -1);
  EXPECT_EQ(sign_of(0, 2, 2, -1, 8), 0);
  EXPECT_EQ(sign_of(-5, 1, 4, 1, 9), 0);
  EXPECT_EQ(sign_of(0, 1, 2, -1, 3), -1);
}

TEST(Surd, CompareAndBetween) {
  const Surd root2{0, 1, 2};
  const Surd minus_root2{0, -1, 2};
  EXPECT_EQ(compare(minus_root2, root2), std::strong_ordering::less);
  EXPECT_EQ(compare(Rational(frac(141, 100)), root2), std::strong_ordering::less);
  EXPECT_EQ(compare(Rational(frac(142, 100)), root2), std::strong_ordering::greater);
  EXPECT_EQ(compare(Surd{1, 1, 4}, Surd::exact(3)), std::strong_ordering::equal);
  Rational q;
  ASSERT_TRUE(rational_between(Surd::exact(frac(141, 100)), root2, q));
  EXPECT_GT(q, frac(141, 100));
  EXPECT_EQ(compare(q, root2), std::strong_ordering::less);
  EXPECT_FALSE(rational_between(root2, root2, q));
  EXPECT_FALSE(rational_between(root2, Surd::exact(1), q));
  EXPECT_TRUE(Surd::exact(2).is_rational());
  EXPECT_TRUE((Surd{1, 1, 9}).is_rational());
  EXPECT_FALSE(root2.is_rational());
  EXPECT_LE(root2.rational_lower(30), root2.rational_upper(30));
}

}  // namespace
}  // namespace fanowalls
