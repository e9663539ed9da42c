#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures/prox_fixtures.hpp"
#include "helpers.hpp"
#include "hsu/prox.hpp"
#include "hsu/spatial_ops.hpp"
#include "tv_certificate.hpp"

namespace hsu {
namespace {

Matrix row(std::initializer_list<double> v) {
  Matrix m(1, static_cast<Index>(v.size()));
  Index i = 0;
  for (double x : v) m(0, i++) = x;
  return m;
}

TEST(SoftThreshold, Examples) {
  EXPECT_EQ(soft_threshold(row({2, -0.5, 0}), 1.0), row({1, 0, 0}));
  EXPECT_EQ(soft_threshold(row({3}), 5.0), row({0}));
  std::mt19937_64 rng(1);
  const Matrix m = test::random_matrix(3, 5, rng);
  EXPECT_EQ(soft_threshold(m, 0.0), m);
  EXPECT_THROW(soft_threshold(m, -1.0), Error);
}

TEST(GroupShrink, Examples) {
  EXPECT_EQ(group_shrink_rows(row({3, 4}), 5.0), row({0, 0}));
  EXPECT_LE((group_shrink_rows(row({3, 4}), 2.5) - row({1.5, 2})).norm(), 1e-15);
  std::mt19937_64 rng(2);
  const Matrix m = test::random_matrix(4, 3, rng);
  EXPECT_EQ(group_shrink_rows(m, 0.0), m);
  EXPECT_THROW(group_shrink_rows(m, -0.1), Error);
}

TEST(GroupShrink, RowsAreIndependent) {
  Matrix m(2, 2);
  m << 3, 4, 0.3, 0.4;
  const Matrix out = group_shrink_rows(m, 1.0);
  EXPECT_LE((out.row(0) - row({2.4, 3.2})).norm(), 1e-15);
  EXPECT_TRUE(out.row(1).isZero());
}

TEST(ProjectNonnegative, Examples) {
  EXPECT_EQ(project_nonnegative(row({-1, 2})), row({0, 2}));
  const Matrix p = row({0.5, 0, 7});
  EXPECT_EQ(project_nonnegative(p), p);
  const Matrix z = project_nonnegative(row({-0.0}));
  EXPECT_EQ(z(0, 0), 0.0);
  EXPECT_FALSE(std::signbit(z(0, 0)));
}

TEST(Tv1d, Examples) {
  EXPECT_EQ(tv1d(Vector::Constant(3, 5.0), 3.0), Vector::Constant(3, 5.0));
  Vector y(2);
  y << 0, 4;
  Vector expected(2);
  expected << 1, 3;
  EXPECT_LE((tv1d(y, 1.0) - expected).norm(), 1e-15);
  EXPECT_LE((tv1d(y, 3.0) - Vector::Constant(2, 2.0)).norm(), 1e-15);
}

TEST(Tv1d, EdgeCases) {
  Vector one(1);
  one << 4.2;
  EXPECT_EQ(tv1d(one, 10.0), one);
  Vector y(4);
  y << 1, -2, 3, 0.5;
  EXPECT_EQ(tv1d(y, 0.0), y);
  EXPECT_THROW(tv1d(y, -1.0), Error);
  EXPECT_THROW(tv1d(Vector(), 1.0), Error);
  // Large kappa collapses to the mean.
  EXPECT_LE((tv1d(y, 100.0) - Vector::Constant(4, y.mean())).norm(), 1e-14);
}

TEST(Tv1d, InPlaceSpanCall) {
  std::vector<double> buf = {0, 4, 4, 0};
  tv1d(std::span<const double>(buf), std::span<double>(buf), 1.0);
  Vector z = Eigen::Map<Vector>(buf.data(), 4);
  Vector y(4);
  y << 0, 4, 4, 0;
  const auto c = test::tv_certificate(y, z, 1.0);
  EXPECT_LE(c.bound, 1e-12);
  EXPECT_LE(c.mean, 1e-12);
}

TEST(Tv1d, CertificateOnRandomSignals) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> len(1, 64);
  std::uniform_real_distribution<double> kap(0.0, 3.0);
  for (int t = 0; t < 1000; ++t) {
    const Index n = len(rng);
    Vector y = test::random_matrix(n, 1, rng, 2.0);
    // Piecewise structure on some signals so plateaus of both signs occur.
    if (t % 3 == 0) {
      for (Index k = 0; k < n; ++k) y(k) += (k / 8) % 2 == 0 ? 3.0 : -3.0;
    }
    const double kappa = kap(rng);
    const Vector z = tv1d(y, kappa);
    const auto c = test::tv_certificate(y, z, kappa);
    EXPECT_LE(c.bound, 1e-9) << "t=" << t;
    EXPECT_LE(c.complementarity, 1e-9) << "t=" << t;
    EXPECT_LE(c.mean, 1e-12) << "t=" << t;
  }
}

TEST(ProxVerticalTv, Examples) {
  const SpatialGrid g(2, 3);
  Matrix same(2, 6);
  same << 1, 2, 1, 2, 1, 2, -3, 5, -3, 5, -3, 5;  // identical image columns
  EXPECT_LE((prox_vertical_tv(same, 1.0, g) - same).norm(), 1e-14);
  std::mt19937_64 rng(3);
  const Matrix m = test::random_matrix(3, 6, rng);
  EXPECT_EQ(prox_vertical_tv(m, 0.0, g), m);
  EXPECT_LE((prox_vertical_tv(row({0, 4}), 1.0, SpatialGrid(1, 2)) - row({1, 3})).norm(), 1e-15);
}

TEST(ProxHorizontalTv, Examples) {
  const SpatialGrid g(3, 2);
  Matrix constant_cols(1, 6);
  constant_cols << 7, 7, 7, -1, -1, -1;
  EXPECT_LE((prox_horizontal_tv(constant_cols, 2.0, g) - constant_cols).norm(), 1e-14);
  std::mt19937_64 rng(4);
  const Matrix m = test::random_matrix(2, 6, rng);
  EXPECT_EQ(prox_horizontal_tv(m, 0.0, g), m);
  EXPECT_LE((prox_horizontal_tv(row({0, 4}), 3.0, SpatialGrid(2, 1)) - row({2, 2})).norm(), 1e-15);
}

TEST(ProxTv, SequencesMatchScalarTv1d) {
  std::mt19937_64 rng(8);
  const SpatialGrid g(4, 5);
  const Matrix m = test::random_matrix(3, g.pixels(), rng);
  const Matrix v = prox_vertical_tv(m, 0.7, g);
  const Matrix h = prox_horizontal_tv(m, 0.7, g);
  for (Index l = 0; l < 3; ++l) {
    for (Index r = 0; r < g.rows(); ++r) {
      Vector seq(g.cols());
      for (Index c = 0; c < g.cols(); ++c) seq(c) = m(l, g.flat(r, c));
      const Vector z = tv1d(seq, 0.7);
      for (Index c = 0; c < g.cols(); ++c) EXPECT_EQ(v(l, g.flat(r, c)), z(c));
    }
    for (Index c = 0; c < g.cols(); ++c) {
      const Vector z = tv1d(m.block(l, c * g.rows(), 1, g.rows()).transpose(), 0.7);
      for (Index r = 0; r < g.rows(); ++r) EXPECT_EQ(h(l, g.flat(r, c)), z(r));
    }
  }
}

TEST(ProxP, Examples) {
  std::mt19937_64 rng(6);
  const SpatialGrid g(2, 3);
  const Matrix v = test::random_matrix(3, 6, rng);
  EXPECT_EQ(prox_p(v, ProxSpec{0.0, 0.0, Rho::L1, 1.0}, g), project_nonnegative(v));
  EXPECT_EQ(prox_p(v, ProxSpec{0.0, 0.0, Rho::L21, 0.3}, g), project_nonnegative(v));
  Matrix pos(2, 6);
  pos << 1, 2, 1, 2, 1, 2, 3, 5, 3, 5, 3, 5;
  EXPECT_LE((prox_p(pos, ProxSpec{0.0, 0.4, Rho::L1, 1.0}, g) - pos).norm(), 1e-14);
  EXPECT_THROW(prox_p(v, ProxSpec{-1.0, 0.0, Rho::L1, 1.0}, g), Error);
  EXPECT_THROW(prox_p(v, ProxSpec{0.1, 0.0, Rho::L1, 0.0}, g), Error);
}

TEST(ProxP, AgreesWithFrozenOracle) {
  const auto& cases = fixtures::prox_fixtures();
  ASSERT_EQ(cases.size(), 20U);
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const auto& f = cases[k];
    const SpatialGrid g(f.n_r, f.n_c);
    const Matrix v = Eigen::Map<const Matrix>(f.input.data(), f.m, g.pixels());
    const Matrix expected = Eigen::Map<const Matrix>(f.expected.data(), f.m, g.pixels());
    Matrix got;
    switch (f.kind) {
      case fixtures::ProxKind::L1:
        got = prox_p(v, ProxSpec{f.lambda, f.lambda_tv, Rho::L1, f.sigma}, g);
        break;
      case fixtures::ProxKind::L21:
        got = prox_p(v, ProxSpec{f.lambda, f.lambda_tv, Rho::L21, f.sigma}, g);
        break;
      case fixtures::ProxKind::HorizontalTv:
        got = prox_horizontal_tv(v, f.sigma * f.lambda_tv, g);
        break;
    }
    EXPECT_LE((got - expected).cwiseAbs().maxCoeff(), 1e-6) << "fixture " << k;
  }
}

TEST(ProxConjugate, Examples) {
  const ProxFn proj = [](const Matrix& w) { return project_nonnegative(w); };
  EXPECT_EQ(prox_conjugate(proj, row({-2, 3}), 1.0), row({-2, 0}));
  const ProxFn ident = [](const Matrix& w) { return w; };
  EXPECT_TRUE(prox_conjugate(ident, row({1.5, -2, 9}), 0.7).isZero(1e-15));
  const ProxFn l1 = [](const Matrix& w) { return soft_threshold(w, 1.0); };
  EXPECT_LE((prox_conjugate(l1, row({0.5}), 1.0) - row({0.5})).norm(), 1e-15);
  EXPECT_THROW(prox_conjugate(ident, row({1}), 0.0), Error);
}

TEST(ProxConjugate, MoreauClosure) {
  // Prox_{sigma p}(x) + sigma Prox_{p*/sigma}(x / sigma) = x.
  std::mt19937_64 rng(12);
  const SpatialGrid g(3, 3);
  for (double sigma : {0.05, 1.0, 3.0}) {
    const ProxSpec spec{0.2, 0.3, Rho::L21, sigma};
    const ProxFn f = [&](const Matrix& w) { return prox_p(w, spec, g); };
    const Matrix x = test::random_matrix(2, 9, rng);
    const Matrix lhs = f(x) + sigma * prox_conjugate(f, x / sigma, sigma);
    EXPECT_LE((lhs - x).norm(), 1e-12 * (1.0 + x.norm()));
  }
}

TEST(Rho, Parse) {
  EXPECT_EQ(parse_rho("l1"), Rho::L1);
  EXPECT_EQ(parse_rho("l21"), Rho::L21);
  EXPECT_THROW(parse_rho("l2"), ConfigError);
}

}  // namespace
}  // namespace hsu
