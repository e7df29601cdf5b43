#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hsckit/curvature.hpp"
#include "hsckit/sphere.hpp"

using namespace hsckit;
using hsckit::testing::random_frame_point;
using hsckit::testing::random_tensor;

namespace {

Direction dir(std::initializer_list<cplx> xs) {
  Direction v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs)
    v[i++] = x;
  return v;
}

const cplx I(0, 1);
const double kRootHalf = std::sqrt(0.5);

double max_entry_diff(const KahlerCurvatureTensor& a, const KahlerCurvatureTensor& b) {
  double d = 0;
  for (std::size_t p = 0; p < a.entries().data().size(); ++p)
    d = std::max(d, std::abs(a.entries().data()[p] - b.entries().data()[p]));
  return d;
}

} // namespace

TEST(Validate, ConstantTensorIsSymmetric) {
  EXPECT_TRUE(validate(constant_hsc_tensor(2, -1.0)).ok());
  EXPECT_TRUE(validate(assemble_einstein_surface({-1.0, 0.25, 0.0})).ok());
  EXPECT_TRUE(validate(assemble_einstein_surface({-2.0, 0.0, cplx(0.3, -0.7)})).ok());
}

TEST(Validate, ReportsInjectedDefect) {
  CurvatureArray a = constant_hsc_tensor(2, -1.0).entries();
  a(0, 1, 0, 1) += 1e-3;
  const auto report = validate(a, 1e-9);
  ASSERT_FALSE(report.ok());
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].orbit, (TensorIndex{0, 1, 0, 1}));
  EXPECT_NEAR(report.violations[0].magnitude, 5e-4, 1e-12);
  EXPECT_TRUE(validate(a, 1e-3).ok());
}

TEST(Canonicalize, RecordsAsymmetry) {
  CurvatureArray a(2);
  a(0, 0, 0, 0) = cplx(1.0, 2.0);
  const auto t = KahlerCurvatureTensor::canonicalize(a);
  EXPECT_DOUBLE_EQ(t(0, 0, 0, 0).real(), 1.0);
  EXPECT_DOUBLE_EQ(t(0, 0, 0, 0).imag(), 0.0);
  EXPECT_DOUBLE_EQ(t.asymmetry(), 2.0);
}

TEST(Hsc, ConstantTensorAnyDirection) {
  Rng rng(1);
  for (double c : {-2.0, 0.5, 3.0}) {
    const auto t = constant_hsc_tensor(3, c);
    for (int s = 0; s < 20; ++s)
      EXPECT_NEAR(hsc(t, random_direction(3, rng)), c, 1e-13);
  }
}

TEST(Hsc, Examples) {
  const auto t = assemble_einstein_surface({-1.0, 0.25, 0.0});
  EXPECT_NEAR(hsc(t, dir({kRootHalf, kRootHalf})), -0.25, 1e-14);
  // Unnormalized input gives the same value.
  EXPECT_NEAR(hsc(t, dir({1.0, 1.0})), -0.25, 1e-14);

  Rng rng(2);
  const auto r = random_tensor(3, rng);
  EXPECT_NEAR(hsc(r, dir({1.0, 0.0, 0.0})), r(0, 0, 0, 0).real(), 1e-15);
  EXPECT_NEAR(hsc(r, dir({0.0, 0.0, 1.0})), r(2, 2, 2, 2).real(), 1e-15);
}

TEST(Hsc, DimensionMismatch) {
  EXPECT_THROW(hsc(constant_hsc_tensor(3, 1.0), dir({1.0, 0.0})), DimensionMismatch);
}

TEST(Hsc, ScaleInvariant) {
  Rng rng(3);
  const auto t = random_tensor(4, rng);
  for (int s = 0; s < 50; ++s) {
    const Direction v = random_direction(4, rng);
    const cplx lambda = std::polar(0.01 + 10.0 * std::uniform_real_distribution<>()(rng),
                                   std::uniform_real_distribution<>(0, 6.28)(rng));
    EXPECT_NEAR(hsc(t, lambda * v), hsc(t, v), 1e-12);
  }
}

TEST(QuarticGradient, MatchesFiniteDifferences) {
  Rng rng(4);
  const auto t = random_tensor(3, rng);
  const Direction v = random_direction(3, rng);
  const Direction g = quartic_gradient(t, v);
  const double h = 1e-6;
  for (int m = 0; m < 3; ++m)
    for (cplx e : {cplx(1, 0), I}) {
      Direction vp = v, vm = v;
      vp[m] += h * e;
      vm[m] -= h * e;
      const double fd = (quartic_form(t, vp).real() - quartic_form(t, vm).real()) / (2 * h);
      // Directional derivative along e at slot m is Re(conj(g_m) e).
      EXPECT_NEAR(fd, (std::conj(g[m]) * e).real(), 1e-7);
    }
}

TEST(Ricci, ConstantTensor) {
  for (int n : {1, 2, 3, 5}) {
    const double c = -1.5;
    const auto ric = ricci(constant_hsc_tensor(n, c));
    const ComplexMatrix expected = ComplexMatrix::Identity(n, n) * (c * (n + 1) / 2);
    EXPECT_LT((ric - expected).cwiseAbs().maxCoeff(), 1e-14);
  }
  EXPECT_NEAR(scalar(constant_hsc_tensor(2, 0.7)), 3 * 0.7, 1e-14);
}

TEST(Ricci, ZeroTensor) {
  const auto z = KahlerCurvatureTensor::zero(3);
  EXPECT_EQ(ricci(z).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(scalar(z), 0.0);
}

TEST(Ricci, HermitianForRandomTensors) {
  Rng rng(5);
  for (int n : {2, 3, 4}) {
    const auto ric = ricci(random_tensor(n, rng));
    EXPECT_LT((ric - ric.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(TransformFrame, IdentityAndRoundTrip) {
  Rng rng(6);
  const auto t = random_tensor(3, rng);
  EXPECT_LT(max_entry_diff(transform_frame(t, ComplexMatrix::Identity(3, 3)), t), 1e-15);
  const ComplexMatrix u = random_unitary(3, rng);
  const auto back = transform_frame(transform_frame(t, u), u.adjoint());
  EXPECT_LT(max_entry_diff(back, t), 1e-12);
}

TEST(TransformFrame, ConstantTensorIsUnitarilyInvariant) {
  Rng rng(7);
  const auto c = constant_hsc_tensor(2, -0.8);
  const auto rotated = transform_frame(c, random_unitary(2, rng));
  EXPECT_LT(max_entry_diff(rotated, c), 1e-14);
}

TEST(TransformFrame, RejectsNonUnitary) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(0, 1) = 0.1;
  EXPECT_THROW(transform_frame(constant_hsc_tensor(2, 1.0), m), NotUnitary);
  EXPECT_THROW(transform_frame(constant_hsc_tensor(2, 1.0), ComplexMatrix::Identity(3, 3)),
               DimensionMismatch);
}

TEST(TransformFrame, PreservesInvariants) {
  Rng rng(8);
  for (int n : {2, 3, 4}) {
    const auto t = random_tensor(n, rng);
    const ComplexMatrix u = random_unitary(n, rng);
    const auto r = transform_frame(t, u);
    EXPECT_TRUE(validate(r).ok());
    EXPECT_NEAR(scalar(r), scalar(t), 1e-10);
    EXPECT_LT((ricci_eigenvalues(r) - ricci_eigenvalues(t)).cwiseAbs().maxCoeff(), 1e-10);
    // hsc transforms as a function: hsc_r(v) = hsc_t(U v).
    for (int s = 0; s < 10; ++s) {
      const Direction v = random_direction(n, rng);
      EXPECT_NEAR(hsc(r, v), hsc(t, u * v), 1e-10);
    }
  }
}

TEST(Assemble, Examples) {
  EXPECT_LT(max_entry_diff(assemble_einstein_surface({-1.0, -0.5, 0.0}),
                           constant_hsc_tensor(2, -1.0)),
            1e-15);
  EXPECT_LT(max_entry_diff(assemble_einstein_surface({0.0, 0.0, 0.0}),
                           KahlerCurvatureTensor::zero(2)),
            0.0 + 1e-300);
  const auto t = assemble_einstein_surface({-1.0, 0.25, 0.0});
  EXPECT_NEAR(hsc(t, dir({kRootHalf, kRootHalf})), -0.25, 1e-14);
}

TEST(Assemble, RejectsFrameViolation) {
  EXPECT_THROW(assemble_einstein_surface({0.0, -0.1, 0.0}), FrameConstraintViolated);
  EXPECT_THROW(assemble_einstein_surface({-1.0, 0.0, 1.5}), FrameConstraintViolated);
}

TEST(Assemble, IsEinsteinWithLambdaHPlusA) {
  Rng rng(9);
  for (int s = 0; s < 50; ++s) {
    const auto p = random_frame_point(rng);
    const auto ric = ricci(assemble_einstein_surface(p));
    const ComplexMatrix expected = ComplexMatrix::Identity(2, 2) * p.lambda();
    EXPECT_LT((ric - expected).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(ClosedForm, Examples) {
  Rng rng(10);
  for (int s = 0; s < 10; ++s)
    EXPECT_NEAR(hsc_surface_closed_form({-1.0, -0.5, 0.0}, random_direction(2, rng)), -1.0,
                1e-15);
  EXPECT_NEAR(hsc_surface_closed_form({-1.0, 0.25, 0.0}, dir({kRootHalf, kRootHalf})), -0.25,
              1e-15);
  EXPECT_NEAR(hsc_surface_closed_form({-2.0, 0.0, 1.0}, dir({kRootHalf, kRootHalf * I})), -1.5,
              1e-15);
}

TEST(ClosedForm, AgreesWithContraction) {
  Rng rng(11);
  for (int s = 0; s < 200; ++s) {
    const auto p = random_frame_point(rng);
    const auto t = assemble_einstein_surface(p);
    for (int d = 0; d < 10; ++d) {
      const Direction v = random_direction(2, rng);
      EXPECT_NEAR(hsc(t, v), hsc_surface_closed_form(p, v), 1e-10);
    }
  }
}

TEST(MaxHscSurface, Examples) {
  auto e = max_hsc_surface({-1.0, -0.5, 0.0});
  EXPECT_DOUBLE_EQ(e.max, -1.0);
  EXPECT_DOUBLE_EQ(e.min, -1.0);
  EXPECT_TRUE(e.negative);

  e = max_hsc_surface({-1.0, 0.25, 0.0});
  EXPECT_DOUBLE_EQ(e.max, -0.25);
  EXPECT_TRUE(e.negative);

  e = max_hsc_surface({-2.0, 0.0, 1.0});
  EXPECT_DOUBLE_EQ(e.max, -0.5);
  EXPECT_TRUE(e.negative);

  e = max_hsc_surface({-1.0, 0.26, 0.9});
  EXPECT_NEAR(e.max, 0.21, 1e-15);
  EXPECT_FALSE(e.negative);
}

TEST(MaxHscSurface, BoundsDenseDirectionGrid) {
  // Grid over z = v1 conj(v2): |z| = sin(2t)/2, arg z = phi.
  Rng rng(12);
  for (int s = 0; s < 30; ++s) {
    const auto p = random_frame_point(rng);
    const auto e = max_hsc_surface(p);
    double lo = 1e300, hi = -1e300;
    for (int a = 0; a <= 200; ++a)
      for (int b = 0; b < 200; ++b) {
        const double t = a * std::numbers::pi / 400;
        const double phi = b * 2 * std::numbers::pi / 200;
        const Direction v = dir({std::cos(t), std::sin(t) * std::polar(1.0, -phi)});
        const double h = hsc_surface_closed_form(p, v);
        lo = std::min(lo, h);
        hi = std::max(hi, h);
      }
    EXPECT_GE(lo, e.min - 1e-12);
    EXPECT_LE(hi, e.max + 1e-12);
    EXPECT_NEAR(lo, e.min, 1e-12);
    EXPECT_NEAR(hi, e.max, 5e-3 * (1 + std::abs(e.max)));
  }
}

TEST(ChernWeil, Examples) {
  auto cw = chern_weil({-1.0, -0.5, 0.0});
  EXPECT_DOUBLE_EQ(cw.gamma1, -1.5);
  EXPECT_DOUBLE_EQ(cw.gamma2, 0.75);
  EXPECT_NEAR(cw.gamma1 * cw.gamma1, 3 * cw.gamma2, 1e-15);

  cw = chern_weil({-2.0, 0.0, 1.0});
  EXPECT_DOUBLE_EQ(cw.gamma1, -2.0);
  EXPECT_DOUBLE_EQ(cw.gamma2, 2.5);

  cw = chern_weil({0.0, 0.0, 0.0});
  EXPECT_EQ(cw.gamma1, 0.0);
  EXPECT_EQ(cw.gamma2, 0.0);
}

TEST(ChernWeil, MiyaokaYauDefectIdentity) {
  Rng rng(13);
  for (int s = 0; s < 1000; ++s) {
    const auto p = random_frame_point(rng);
    const auto [g1, g2] = chern_weil(p);
    const double rhs = 0.5 * (p.H - 2 * p.A) * (p.H - 2 * p.A) + 1.5 * std::norm(p.B);
    EXPECT_NEAR(3 * g2 - g1 * g1, rhs, 1e-12);
    EXPECT_GE(3 * g2 - g1 * g1, -1e-12);
  }
}

TEST(SufficientNegativity, Examples) {
  EXPECT_TRUE(sufficient_negativity({-1.0, -0.5, 0.0}));
  EXPECT_TRUE(sufficient_negativity({-2.0, 0.0, 1.0}));
  const EinsteinFramePoint p{-1.0, 0.26, 0.9};
  EXPECT_NEAR(chern_weil(p).gamma1, -0.74, 1e-15);
  EXPECT_NEAR(chern_weil(p).gamma2, 0.9726, 1e-12);
  EXPECT_FALSE(sufficient_negativity(p));
  EXPECT_FALSE(max_hsc_surface(p).negative);
}

TEST(SufficientNegativity, RegimeViolation) {
  EXPECT_THROW(sufficient_negativity({0.0, 0.0, 0.0}), RegimeViolation);
  EXPECT_THROW(sufficient_negativity({-1.0, 1.0, 0.0}), RegimeViolation);
}

TEST(ProductTensor, Examples) {
  const auto one = constant_hsc_tensor(1, 1.0);
  EXPECT_EQ(one(0, 0, 0, 0), cplx(1.0));
  const auto prod = product_tensor(one, one);
  EXPECT_NEAR(hsc(prod, dir({kRootHalf, kRootHalf})), 0.5, 1e-15);

  Rng rng(14);
  const auto t1 = random_tensor(2, rng);
  const auto t2 = random_tensor(3, rng);
  const auto p = product_tensor(t1, t2);
  for (int s = 0; s < 10; ++s) {
    const Direction v = random_direction(2, rng);
    Direction w = Direction::Zero(5);
    w.head(2) = v;
    EXPECT_NEAR(hsc(p, w), hsc(t1, v), 1e-13);
  }
}

TEST(ProductTensor, MatchesProductFormula) {
  Rng rng(15);
  const auto t1 = random_tensor(2, rng);
  const auto t2 = random_tensor(2, rng);
  const auto p = product_tensor(t1, t2);
  for (int s = 0; s < 50; ++s) {
    const Direction v = random_direction(2, rng);
    const Direction w = random_direction(2, rng) * 0.7;
    Direction vw(4);
    vw << v, w;
    const double nv = v.squaredNorm(), nw = w.squaredNorm();
    const double expected =
        (nv * nv * hsc(t1, v) + nw * nw * hsc(t2, w)) / ((nv + nw) * (nv + nw));
    EXPECT_NEAR(hsc(p, vw), expected, 1e-12);
  }
}
