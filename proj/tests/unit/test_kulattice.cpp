#include <gtest/gtest.h>

#include "fanowalls/kulattice.hpp"
#include "support/generators.hpp"

namespace fanowalls {
namespace {

using kulattice::KuClass;
using kulattice::Matrix2;
using numclass::ChernCharacter;
using numclass::FanoContext;

TEST(Kappa, OrthogonalToTheExceptionalPair) {
  // Ku(Y) is the right orthogonal of <O, O(1)>: chi(O(k), kappa) = 0 for k = 0, 1.
  for (int d = 1; d <= 5; ++d) {
    const FanoContext ctx(d);
    for (const auto& k : {kulattice::kappa1(ctx), kulattice::kappa2(ctx)}) {
      EXPECT_EQ(numclass::euler_pairing(ctx, numclass::line_bundle(0), k), 0) << "d=" << d;
      EXPECT_EQ(numclass::euler_pairing(ctx, numclass::line_bundle(1), k), 0) << "d=" << d;
    }
  }
}

TEST(Kappa, Kappa1IsTheIdealSheafOfALine) {
  for (int d = 1; d <= 5; ++d) {
    const FanoContext ctx(d);
    EXPECT_EQ(kulattice::kappa1(ctx), ChernCharacter::unit() - numclass::numerical_lattice_basis(ctx)[2]);
  }
}

TEST(EulerMatrix, AgreesWithEmbeddedPairing) {
  auto rng = testing::make_rng(30);
  for (int d = 1; d <= 5; ++d) {
    const FanoContext ctx(d);
    const Matrix2 e = kulattice::euler_matrix(d);
    EXPECT_EQ(e, Matrix2::of(-1, -1, 1 - d, -d));
    for (int i = 0; i < 300; ++i) {
      const KuClass a = testing::ku_class(rng, 30);
      const KuClass b = testing::ku_class(rng, 30);
      EXPECT_EQ(numclass::euler_pairing(ctx, kulattice::embed(ctx, a), kulattice::embed(ctx, b)),
                kulattice::euler_form_ku(d, a, b));
    }
  }
}

TEST(Resolve, InvertsEmbed) {
  auto rng = testing::make_rng(31);
  for (int d = 1; d <= 5; ++d) {
    const FanoContext ctx(d);
    for (int i = 0; i < 50; ++i) {
      const KuClass k = testing::ku_class(rng);
      EXPECT_EQ(kulattice::resolve(ctx, kulattice::embed(ctx, k)), k);
    }
    EXPECT_FALSE(kulattice::resolve(ctx, ChernCharacter::unit()).has_value());
  }
}

TEST(Matrix2, Algebra) {
  const Matrix2 m = Matrix2::of(2, 1, 7, 4);
  EXPECT_EQ(m.det(), 1);
  EXPECT_EQ(m * m.inverse(), Matrix2::identity());
  EXPECT_EQ(m.pow(3), m * m * m);
  EXPECT_EQ(m.pow(-2), m.inverse() * m.inverse());
  EXPECT_EQ(m.pow(0), Matrix2::identity());
  EXPECT_EQ(m.transpose(), Matrix2::of(2, 7, 1, 4));
  EXPECT_THROW(Matrix2::of(1, 2, 2, 4).inverse(), DomainError);
  EXPECT_EQ(kulattice::to_string(Matrix2::of(frac(1, 2), 0, -1, 3)), "[[1/2,0],[-1,3]]");
}

TEST(Rotation, PreservesTheEulerForm) {
  auto rng = testing::make_rng(32);
  for (int d = 1; d <= 5; ++d) {
    const FanoContext ctx(d);
    const auto r = kulattice::rotation(ctx);
    for (int i = 0; i < 100; ++i) {
      const KuClass a = testing::ku_class(rng);
      const KuClass b = testing::ku_class(rng);
      EXPECT_EQ(kulattice::euler_form_ku(d, r.apply(a), r.apply(b)), kulattice::euler_form_ku(d, a, b));
    }
  }
}

TEST(Rotation, DegreeOneMatrixAndOrder) {
  const FanoContext ctx(1);
  const Matrix2 r = kulattice::rotation(ctx).matrix;
  EXPECT_EQ(r, Matrix2::of(0, -1, 1, 1));
  EXPECT_EQ(r.pow(6), Matrix2::identity());
  EXPECT_EQ(r.pow(3), -Matrix2::identity());
}

TEST(Rotation, GeneralDegreeMatrix) {
  // Computed from the mutation directly: R = [[1 - d, -d], [1, 1]].
  for (int d = 1; d <= 5; ++d) {
    EXPECT_EQ(kulattice::rotation(FanoContext(d)).matrix, Matrix2::of(1 - d, -d, 1, 1));
  }
}

TEST(Serre, DefiningIdentityAndRelationToRotation) {
  auto rng = testing::make_rng(33);
  for (int d = 1; d <= 5; ++d) {
    const auto s = kulattice::serre_operator(d);
    for (int i = 0; i < 100; ++i) {
      const KuClass a = testing::ku_class(rng);
      const KuClass b = testing::ku_class(rng);
      EXPECT_EQ(kulattice::euler_form_ku(d, a, b), kulattice::euler_form_ku(d, b, s.apply(a)));
    }
    const Matrix2 r = kulattice::rotation(FanoContext(d)).matrix;
    EXPECT_EQ(s.matrix.inverse(), -(r * r)) << "d=" << d;
  }
}

TEST(Mutation, RequiresExceptionalObject) {
  const FanoContext ctx(2);
  EXPECT_THROW(kulattice::left_mutation(ctx, kulattice::kappa1(ctx), ChernCharacter::unit()), DomainError);
  const ChernCharacter m = kulattice::left_mutation(ctx, ChernCharacter::unit(), numclass::line_bundle(1));
  EXPECT_EQ(numclass::euler_pairing(ctx, ChernCharacter::unit(), m), 0);
}

TEST(MinusOne, BruteForceAgreement) {
  for (int d = 1; d <= 5; ++d) {
    const auto found = kulattice::minus_one_classes(d, 6);
    std::size_t count = 0;
    for (long x = -6; x <= 6; ++x) {
      for (long y = -6; y <= 6; ++y) {
        // -x^2 - d x y - d y^2 written out.
        if (-x * x - d * x * y - d * y * y == -1) {
          ++count;
          EXPECT_TRUE(std::binary_search(found.begin(), found.end(), KuClass{x, y}));
        }
      }
    }
    EXPECT_EQ(found.size(), count);
  }
  EXPECT_THROW(kulattice::minus_one_classes(1, 1), DomainError);
}

TEST(Orbit, DegreeOnePeriodSix) {
  const FanoContext ctx(1);
  const auto orbit = kulattice::rotation_orbit(ctx, {1, 0});
  ASSERT_TRUE(orbit.period.has_value());
  EXPECT_EQ(*orbit.period, 6);
  const std::vector<KuClass> expected{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
  EXPECT_EQ(orbit.classes, expected);
  auto sorted = expected;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(kulattice::minus_one_classes(1, 2), sorted);
}

TEST(Orbit, StopsAtMaxSteps) {
  const FanoContext ctx(4);
  const auto orbit = kulattice::rotation_orbit(ctx, {1, 0}, 3);
  EXPECT_EQ(orbit.classes.size(), 4u);
  EXPECT_FALSE(orbit.period.has_value());
}

}  // namespace
}  // namespace fanowalls
