#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sjgeo/siegel_jacobi.hpp"

using namespace sjgeo;

namespace {

std::mt19937 g_rng(2024);

SJPoint random_sj() {
  std::uniform_real_distribution<double> u(-1.5, 1.5), uv(0.4, 2.5);
  return {cplx(u(g_rng), uv(g_rng)), cplx(u(g_rng), u(g_rng))};
}

ASpElement random_asp(int orient = +1) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> ua(0.6, 1.6);
  const double a = ua(g_rng), b = u(g_rng), phi = M_PI * u(g_rng);
  Mat2 n, k;
  n << a, b, 0.0, 1.0 / a;
  k << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
  Mat2 m = n * k;
  if (orient < 0) m.col(0) *= -1.0;
  return {m, RowVec2(u(g_rng), u(g_rng)), orient};
}

TangentPoint random_tangent() {
  std::uniform_real_distribution<double> u(-1.2, 1.2), u2(-2.5, -0.4);
  return {u(g_rng), u2(g_rng), u(g_rng), u(g_rng)};
}

}  // namespace

TEST_CASE("Kahler-Berndt metric pinned values") {
  // (tau, z) = (i, 0), A = B = 1: the metric matrix is the identity
  const Mat4 g = kb_metric(SJPoint(cplx(0, 1), cplx(0, 0)), {1.0, 1.0});
  CHECK((g - Mat4::Identity()).cwiseAbs().maxCoeff() == 0.0);
  // and the Siegel-Jacobi metric is its half
  const Mat4 gsj = sj_metric(SJPoint(cplx(0, 1), cplx(0, 0)));
  CHECK((gsj - 0.5 * Mat4::Identity()).cwiseAbs().maxCoeff() == 0.0);

  // (tau, z) = (2i, 0): diag(1/4, 1/4, 1/2, 1/2)
  const Mat4 g2 = kb_metric(SJPoint(cplx(0, 2), cplx(0, 0)), {1.0, 1.0});
  Mat4 expect = Mat4::Zero();
  expect.diagonal() << 0.25, 0.25, 0.5, 0.5;
  CHECK((g2 - expect).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("Kahler-Berndt metric is symmetric positive-definite") {
  std::uniform_real_distribution<double> up(0.2, 3.0);
  for (int i = 0; i < 1000; ++i) {
    const SJPoint pt = random_sj();
    const KBParams params{up(g_rng), up(g_rng)};
    const Mat4 g = kb_metric(pt, params);
    CHECK((g - g.transpose()).cwiseAbs().maxCoeff() == 0.0);
    Eigen::SelfAdjointEigenSolver<Mat4> es(g);
    CHECK(es.eigenvalues().minCoeff() > 0.0);
  }
}

TEST_CASE("domain guards") {
  CHECK_THROWS_AS(SJPoint(cplx(0.0, -1.0), cplx(0, 0)), std::domain_error);
  CHECK_THROWS_AS(SJPoint(cplx(1.0, 0.0), cplx(0, 0)), std::domain_error);
  CHECK_THROWS_AS(kb_metric(SJPoint(cplx(0, 1), cplx(0, 0)), {0.0, 1.0}),
                  std::domain_error);
  Mat2 notdet;
  notdet << 2, 0, 0, 1;
  CHECK_THROWS_AS(ASpElement(notdet, RowVec2::Zero(), +1),
                  std::invalid_argument);
}

TEST_CASE("chart map and its inverse") {
  const SJPoint q = chart_map(TangentPoint(0.0, -0.5, 0.0, 0.0));
  CHECK(q.tau == cplx(0.0, 0.5));
  CHECK(q.z == cplx(0.0, 0.0));

  for (int i = 0; i < 200; ++i) {
    const TangentPoint p = random_tangent();
    const TangentPoint back = chart_map_inverse(chart_map(p));
    CHECK((back.coords() - p.coords()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("chart map pulls the Siegel-Jacobi metric back to Dombrowski") {
  const Mat4 T = chart_map_jacobian();
  for (int i = 0; i < 200; ++i) {
    const TangentPoint p = random_tangent();
    const SJPoint q = chart_map(p);
    const KahlerTensors t = kahler_tensors(p, Chart::Natural);
    CHECK((T.transpose() * sj_metric(q) * T - t.g).cwiseAbs().maxCoeff() <
          1e-9);
    CHECK((T.transpose() * sj_symplectic_form(q) * T - t.omega)
              .cwiseAbs()
              .maxCoeff() < 1e-9);
    CHECK((T * t.J - sj_complex_structure() * T).cwiseAbs().maxCoeff() <
          1e-12);
  }
}

TEST_CASE("group action: identity, inversion fixed point, group law") {
  const SJPoint pt = random_sj();
  const SJPoint same = group_action(ASpElement::identity(), pt);
  CHECK(std::abs(same.tau - pt.tau) == 0.0);
  CHECK(std::abs(same.z - pt.z) == 0.0);

  // the inversion [[0,-1],[1,0]] fixes (i, 0)
  Mat2 w;
  w << 0.0, -1.0, 1.0, 0.0;
  const SJPoint fixed =
      group_action(ASpElement(w, RowVec2::Zero(), +1),
                   SJPoint(cplx(0, 1), cplx(0, 0)));
  CHECK(std::abs(fixed.tau - cplx(0, 1)) < 1e-15);
  CHECK(std::abs(fixed.z) < 1e-15);

  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const ASpElement g1 = random_asp(u(g_rng) < 0.3 ? -1 : +1);
    const ASpElement g2 = random_asp(u(g_rng) < 0.3 ? -1 : +1);
    const SJPoint p = random_sj();
    const SJPoint lhs = group_action(asp_multiply(g1, g2), p);
    const SJPoint rhs = group_action(g1, group_action(g2, p));
    CHECK((lhs.coords() - rhs.coords()).cwiseAbs().maxCoeff() < 1e-12);
    // and inverses undo the action
    const SJPoint back = group_action(asp_inverse(g1), group_action(g1, p));
    CHECK((back.coords() - p.coords()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("holomorphic isometry normal forms") {
  // form 2 with (1,0,0,0) is the identity
  const SJMap id2 = holomorphic_isometry(2, 1.0, 0.0, 0.0, 0.0);
  const SJPoint pt = random_sj();
  CHECK((id2(pt).coords() - pt.coords()).cwiseAbs().maxCoeff() < 1e-15);

  // form 2 with a = 2 sends (z1, z2) = (0, -1/2) to (0, -2); in the
  // (tau, z) model that is (i/2, 0) |-> (2i, 0)
  const SJMap dilate = holomorphic_isometry(2, 2.0, 0.0, 0.0, 0.0);
  const SJPoint img = dilate(SJPoint(cplx(0.0, 0.5), cplx(0.0, 0.0)));
  CHECK(std::abs(img.tau - cplx(0.0, 2.0)) < 1e-15);
  CHECK(std::abs(img.z) < 1e-15);

  CHECK_THROWS_AS(holomorphic_isometry(2, 0.0, 0.0, 0.0, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(holomorphic_isometry(3, 1.0, 0.0, 0.0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("normal forms equal their affine-symplectic conjugates") {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> ua(0.5, 2.0);
  for (int i = 0; i < 100; ++i) {
    const double a = ua(g_rng) * (u(g_rng) < 0.0 ? -1.0 : 1.0);
    const double b = u(g_rng), c = u(g_rng), d = u(g_rng), e = u(g_rng);
    const SJPoint pt = random_sj();

    // f . phi_1 . f^-1 = (-(1/a)[[e, eb - a^2],[1, b]], (d/a, -c + bd/a))
    Mat2 m1;
    m1 << e, e * b - a * a, 1.0, b;
    m1 *= -1.0 / a;
    const ASpElement g1(m1, RowVec2(d / a, -c + b * d / a), +1);
    const SJPoint lhs1 = holomorphic_isometry(1, a, b, c, d, e)(pt);
    const SJPoint rhs1 = group_action(g1, pt);
    CHECK((lhs1.coords() - rhs1.coords()).cwiseAbs().maxCoeff() < 1e-10);

    // f . phi_2 . f^-1 = ((1/a)[[a^2, d],[0, 1]], (-b/a, -c/a))
    Mat2 m2;
    m2 << a * a, d, 0.0, 1.0;
    m2 *= 1.0 / a;
    const ASpElement g2(m2, RowVec2(-b / a, -c / a), +1);
    const SJPoint lhs2 = holomorphic_isometry(2, a, b, c, d)(pt);
    const SJPoint rhs2 = group_action(g2, pt);
    CHECK((lhs2.coords() - rhs2.coords()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("isometry residuals") {
  // group elements act by isometries, in both orientation branches
  for (int i = 0; i < 100; ++i) {
    const ASpElement g = random_asp(+1);
    const SJPoint pt(cplx(0.2, 1.0), cplx(-0.3, 0.4));
    const double r = isometry_residual(
        [&g](const SJPoint& q) { return group_action(g, q); }, pt);
    CHECK(r < 1e-6);
  }
  for (int i = 0; i < 30; ++i) {
    const ASpElement g = random_asp(-1);
    const SJPoint pt(cplx(-0.1, 0.8), cplx(0.5, -0.2));
    const double r = isometry_residual(
        [&g](const SJPoint& q) { return group_action(g, q); }, pt);
    CHECK(r < 1e-6);
  }
  // scaling tau alone is not an isometry
  const double bad = isometry_residual(
      [](const SJPoint& q) { return SJPoint(2.0 * q.tau, q.z); },
      SJPoint(cplx(0, 1), cplx(0, 0)));
  CHECK(bad > 0.1);
}

TEST_CASE("eikonal residuals for the two solution families") {
  // family (2): u = a^2 x
  auto u_lin = [](double x, double) { return 9.0 * x; };
  const auto [f1, lap1] = eikonal_residual(u_lin, -1.3, 0.4);
  CHECK(std::abs(f1) < 1e-6);
  CHECK(std::abs(lap1) < 1e-6);

  // family (1): u = a^2 x / ((y+b)^2 + x^2), a = 1, b = 2
  auto u_mob = [](double x, double y) {
    return x / ((y + 2.0) * (y + 2.0) + x * x);
  };
  for (double x : {-2.5, -1.5, -0.8})
    for (double y : {-0.7, 0.0, 0.9}) {
      const auto [f, lap] = eikonal_residual(u_mob, x, y);
      CHECK(std::abs(f) < 1e-5);
      CHECK(std::abs(lap) < 1e-5);
    }

  // x^2 solves neither
  const auto [fbad, lapbad] =
      eikonal_residual([](double x, double) { return x * x; }, -1.0, 0.0);
  CHECK(std::abs(fbad) > 0.1);
  (void)lapbad;

  CHECK_THROWS_AS(eikonal_residual(u_lin, 1.0, 0.0), std::domain_error);
}

TEST_CASE("transitivity witness and isotropy") {
  const SJPoint base(cplx(0, 1), cplx(0, 0));
  for (int i = 0; i < 100; ++i) {
    const SJPoint target = random_sj();
    const ASpElement w = transitivity_witness(target);
    // upper-triangular K0 part by construction
    CHECK(w.M(1, 0) == 0.0);
    CHECK(w.M(0, 0) > 0.0);
    const SJPoint img = group_action(w, base);
    CHECK((img.coords() - target.coords()).cwiseAbs().maxCoeff() < 1e-10);
  }

  std::uniform_real_distribution<double> uphi(0.0, 2.0 * M_PI);
  for (int i = 0; i < 50; ++i) {
    const ASpElement r = isotropy_rotation(uphi(g_rng));
    const SJPoint img = group_action(r, base);
    CHECK((img.coords() - base.coords()).cwiseAbs().maxCoeff() < 1e-12);
  }
}
