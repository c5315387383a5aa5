#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sjgeo/momentum.hpp"

using namespace sjgeo;

namespace {

std::mt19937 g_rng(99);

TangentPoint random_point() {
  std::uniform_real_distribution<double> u(-1.2, 1.2), u2(-2.5, -0.4);
  return {u(g_rng), u2(g_rng), u(g_rng), u(g_rng)};
}

GroupElement random_group() {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> ua(0.6, 1.6);
  const double a = ua(g_rng), b = u(g_rng), phi = M_PI * u(g_rng);
  Mat2 n, k;
  n << a, b, 0.0, 1.0 / a;
  k << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
  return {n * k, RowVec2(u(g_rng), u(g_rng)), u(g_rng)};
}

GroupElement random_borel() {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> ua(0.5, 2.0);
  Mat2 m;
  const double a = ua(g_rng);
  m << a, u(g_rng), 0.0, 1.0 / a;
  return {m, RowVec2(u(g_rng), u(g_rng)), u(g_rng)};
}

AlgebraElement random_algebra() {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  AlgebraElement l;
  for (int i = 0; i < 6; ++i) l.coeffs[i] = u(g_rng);
  return l;
}

const double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("kahler_value pinned at the standard point") {
  const TangentPoint p0(0.0, -0.5, 0.0, 0.0);
  CHECK(kahler_value(AlgebraElement::F(), p0) == doctest::Approx(-1.0));
  CHECK(kahler_value(AlgebraElement::G(), p0) == doctest::Approx(0.25));
  CHECK(kahler_value(AlgebraElement::H(), p0) == doctest::Approx(0.0));
  CHECK(kahler_value(AlgebraElement::P(), p0) == doctest::Approx(0.0));
  CHECK(kahler_value(AlgebraElement::Q(), p0) == doctest::Approx(0.0));
  CHECK(kahler_value(AlgebraElement::R(), p0) == doctest::Approx(-0.25));

  // R gives -1/4 at every point
  for (int i = 0; i < 50; ++i)
    CHECK(kahler_value(AlgebraElement::R(), random_point()) == -0.25);
}

TEST_CASE("the G-value's last term rewrites as theta2/2") {
  // 1/(4(eta1^2 - eta2)) = theta2/2, so the subtracted term is -theta2/2
  for (int i = 0; i < 100; ++i) {
    const TangentPoint p = random_point();
    const ExpectationPoint e = to_expectation(p.theta);
    const double d1 = p.thetadot[0], d2 = p.thetadot[1];
    const double alt = 0.25 * d1 * d1 + e.eta2 * d2 * d2 +
                       e.eta1 * d1 * d2 - 0.5 * p.theta.theta2;
    CHECK(kahler_value(AlgebraElement::G(), p) ==
          doctest::Approx(alt).epsilon(1e-12));
  }
}

TEST_CASE("momentum vector and linearity") {
  const TangentPoint p0(0.0, -0.5, 0.0, 0.0);
  const MomentumVector j = momentum_vector(p0);
  Vec6 expect;
  expect << -1.0, 0.25, 0.0, 0.0, 0.0, -0.25;
  CHECK((j.values - expect).cwiseAbs().maxCoeff() < 1e-15);

  for (int i = 0; i < 100; ++i) {
    const TangentPoint p = random_point();
    const AlgebraElement l1 = random_algebra(), l2 = random_algebra();
    const double a = 0.7, b = -1.3;
    const double lhs = kahler_value(a * l1 + b * l2, p);
    const double rhs = a * kahler_value(l1, p) + b * kahler_value(l2, p);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
    CHECK(momentum_vector(p).values[5] == -0.25);
  }
}

TEST_CASE("momentum map separates points") {
  for (int i = 0; i < 1000; ++i) {
    const TangentPoint p = random_point();
    TangentPoint q = random_point();
    if ((p.coords() - q.coords()).norm() <= 1e-3)
      q = TangentPoint::from_coords(q.coords() + Vec4(0.2, -0.2, 0.2, 0.2));
    const Vec6 diff = momentum_vector(p).values - momentum_vector(q).values;
    CHECK(diff.cwiseAbs().maxCoeff() > 0.0);
  }
}

TEST_CASE("hamiltonian fields match the displayed table") {
  for (int i = 0; i < 100; ++i) {
    const TangentPoint p = random_point();
    const double t1 = p.theta.theta1, t2 = p.theta.theta2;
    const double d1 = p.thetadot[0], d2 = p.thetadot[1];

    const Vec4 xf = hamiltonian_field(AlgebraElement::F(), p);
    CHECK((xf - Vec4(0, 0, 0, 1)).cwiseAbs().maxCoeff() < 1e-12);

    const Vec4 xg = hamiltonian_field(AlgebraElement::G(), p);
    const Vec4 xg_table(-d1 * t2 - t1 * d2, -2.0 * t2 * d2,
                        -d1 * d2 + t1 * t2, t2 * t2 - d2 * d2);
    CHECK((xg - xg_table).cwiseAbs().maxCoeff() < 1e-12);

    const Vec4 xh = hamiltonian_field(AlgebraElement::H(), p);
    CHECK((xh - Vec4(t1, 2.0 * t2, d1, 2.0 * d2)).cwiseAbs().maxCoeff() <
          1e-12);

    const Vec4 xp = hamiltonian_field(AlgebraElement::P(), p);
    CHECK((xp - Vec4(-t2, 0, -d2, 0)).cwiseAbs().maxCoeff() < 1e-12);

    const Vec4 xq = hamiltonian_field(AlgebraElement::Q(), p);
    CHECK((xq - Vec4(0, 0, -1, 0)).cwiseAbs().maxCoeff() < 1e-12);

    CHECK(hamiltonian_field(AlgebraElement::R(), p).cwiseAbs().maxCoeff() ==
          0.0);
  }
}

TEST_CASE("fundamental fields equal Hamiltonian fields") {
  const TangentPoint p0(0.0, -0.5, 0.0, 0.0);
  CHECK(fundamental_field(AlgebraElement::R(), p0).cwiseAbs().maxCoeff() <
        1e-10);
  CHECK((fundamental_field(AlgebraElement::F(), p0) - Vec4(0, 0, 0, 1))
            .cwiseAbs()
            .maxCoeff() < 1e-6);

  for (int i = 0; i < 100; ++i) {
    const TangentPoint p = random_point();
    for (int b = 0; b < 6; ++b) {
      const AlgebraElement l = AlgebraElement::basis(b);
      CHECK((fundamental_field(l, p) - hamiltonian_field(l, p))
                .cwiseAbs()
                .maxCoeff() < 1e-5);
    }
  }
}

TEST_CASE("poisson bracket realizes the structure constants") {
  const TangentPoint p0(0.0, -0.5, 0.0, 0.0);
  CHECK(poisson(AlgebraElement::F(), AlgebraElement::G(), p0) ==
        doctest::Approx(kahler_value(AlgebraElement::H(), p0)).epsilon(1e-12));

  for (int i = 0; i < 50; ++i) {
    const TangentPoint p = random_point();
    for (int a = 0; a < 6; ++a)
      CHECK(std::abs(poisson(AlgebraElement::R(), AlgebraElement::basis(a),
                             p)) < 1e-12);
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) {
        const AlgebraElement la = AlgebraElement::basis(a);
        const AlgebraElement lb = AlgebraElement::basis(b);
        CHECK(std::abs(poisson(la, lb, p) -
                       kahler_value(bracket(la, lb), p)) < 1e-9);
      }
  }
}

TEST_CASE("momentum map equivariance") {
  const TangentPoint p0(0.0, -0.5, 0.0, 0.0);
  CHECK(equivariance_residual(GroupElement::identity(), random_algebra(),
                              p0) == 0.0);

  for (int i = 0; i < 100; ++i)
    CHECK(equivariance_residual(random_borel(), AlgebraElement::Q(),
                                random_point()) < 1e-10);

  for (int i = 0; i < 500; ++i)
    CHECK(equivariance_residual(random_group(), random_algebra(),
                                random_point()) < 1e-9);
}

TEST_CASE("spectra of the example observables") {
  const GroupElement e = GroupElement::identity();

  const SpectrumDesc sf = spectrum({e, {-1, 0, 0}});  // J^F
  CHECK(sf.kind == SpectrumKind::HalfLineBelow);
  CHECK(sf.endpoint == 0.0);

  const SpectrumDesc sr = spectrum({e, {0, 0, -0.25}});  // J^R
  CHECK(sr.kind == SpectrumKind::Point);
  CHECK(sr.endpoint == -0.25);

  const SpectrumDesc sq = spectrum({e, {0, 1, 0}});  // J^Q
  CHECK(sq.kind == SpectrumKind::FullLine);

  // J^G = J^{Ad(w)(x^2 model)} with w the inversion; spectrum [0, inf)
  Mat2 w;
  w << 0.0, -1.0, 1.0, 0.0;
  const SpectrumDesc sg = spectrum({{w, RowVec2::Zero(), 0.0}, {1, 0, 0}});
  CHECK(sg.kind == SpectrumKind::HalfLineAbove);
  CHECK(sg.endpoint == 0.0);

  // vertex example: k = x^2 + x has image [-1/4, inf)
  const SpectrumDesc sv = spectrum({e, {1, 1, 0}});
  CHECK(sv.kind == SpectrumKind::HalfLineAbove);
  CHECK(sv.endpoint == doctest::Approx(-0.25));

  // spectra do not depend on the group part of the decomposition
  for (int i = 0; i < 50; ++i) {
    const Polynomial2 k{0.8, -0.3, 0.1};
    const SpectrumDesc s1 = spectrum({random_group(), k});
    const SpectrumDesc s2 = spectrum({e, k});
    CHECK(s1.kind == s2.kind);
    CHECK(s1.endpoint == s2.endpoint);
  }
}

TEST_CASE("transformed gaussian: Borel rule and fallback") {
  const TangentPoint p0(0.0, -0.5, 0.0, 0.0);  // standard normal base
  const MeanPoint same = transformed_gaussian(GroupElement::identity(), p0);
  CHECK(same.mu == doctest::Approx(0.0));
  CHECK(same.sigma == doctest::Approx(1.0));

  // a = 2, lambda = 1 on the standard normal: mean 1/4, deviation 1/2
  Mat2 m;
  m << 2.0, 0.0, 0.0, 0.5;
  const GroupElement b(m, RowVec2(1.0, 0.0), 0.0);
  const MeanPoint moved = transformed_gaussian(b, p0);
  CHECK(moved.mu == doctest::Approx(0.25));
  CHECK(moved.sigma == doctest::Approx(0.5));

  // the closed form must agree with the chart-level action
  for (int i = 0; i < 200; ++i) {
    const GroupElement g = random_borel();
    const TangentPoint p = random_point();
    const MeanPoint fast = transformed_gaussian(g, p);
    const MeanPoint full = to_mean(bundle_action(g, p).theta);
    CHECK(std::abs(fast.mu - full.mu) < 1e-10);
    CHECK(std::abs(fast.sigma - full.sigma) < 1e-10);
  }

  // non-Borel elements route through the full action
  for (int i = 0; i < 50; ++i) {
    GroupElement g = random_group();
    if (borel_contains(g)) continue;
    const TangentPoint p = random_point();
    const MeanPoint fb = transformed_gaussian(g, p);
    const MeanPoint full = to_mean(bundle_action(g, p).theta);
    CHECK(fb.mu == full.mu);
    CHECK(fb.sigma == full.sigma);
  }
}

TEST_CASE("spectral measures, pinned values") {
  const TangentPoint p0(0.0, -0.5, 0.0, 0.0);
  const GroupElement e = GroupElement::identity();

  // P(J^Q <= 0) at the standard normal is 1/2
  CHECK(spectral_measure({e, {0, 1, 0}}, p0, {{-kInf, 0.0}}) ==
        doctest::Approx(0.5).epsilon(1e-14));

  // P(J^F in [-1, 0]) = P(x^2 <= 1) = Phi(1) - Phi(-1); normal_cdf oracle
  const double oracle = normal_cdf(1.0) - normal_cdf(-1.0);
  CHECK(spectral_measure({e, {-1, 0, 0}}, p0, {{-1.0, 0.0}}) ==
        doctest::Approx(oracle).epsilon(1e-14));
  CHECK(oracle == doctest::Approx(0.68268949213708590).epsilon(1e-14));
}

TEST_CASE("spectral measures: total mass and additivity") {
  for (int i = 0; i < 25; ++i) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const ObservableDecomposition obs{
        random_group(), {1.5 * u(g_rng), u(g_rng), u(g_rng)}};
    const TangentPoint p = random_point();
    const Interval whole = spectrum(obs).as_interval();
    CHECK(std::abs(spectral_measure(obs, p, {whole}) - 1.0) < 1e-10);

    // countable additivity on a finite disjoint union
    if (spectrum(obs).kind == SpectrumKind::Point) continue;
    const double mid = (obs.k)(0.5);
    const double a = spectral_measure(obs, p, {{mid - 1.0, mid}});
    const double b = spectral_measure(obs, p, {{mid, mid + 2.0}});
    const double ab =
        spectral_measure(obs, p, {{mid - 1.0, mid}, {mid, mid + 2.0}});
    CHECK(ab == doctest::Approx(a + b).epsilon(1e-12));
    const double join = spectral_measure(obs, p, {{mid - 1.0, mid + 2.0}});
    CHECK(ab == doctest::Approx(join).epsilon(1e-10));
  }
}

TEST_CASE("spectral measure against a Monte-Carlo estimate") {
  std::mt19937 rng(31337);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 3; ++trial) {
    const GroupElement g = (trial == 0) ? GroupElement::identity()
                           : (trial == 1 ? random_borel() : random_group());
    const Polynomial2 k{1.5 * u(g_rng), u(g_rng), u(g_rng)};
    const TangentPoint p = random_point();
    const ObservableDecomposition obs{g, k};

    const MeanPoint base = transformed_gaussian(inverse(g), p);
    const double med = k(base.mu);
    const double w = std::max(1.0, std::abs(med));
    const Interval a{med - 0.8 * w, med + 0.5 * w};
    const double exact = spectral_measure(obs, p, {a});

    const int n = 100000;
    long hits = 0;
    for (int s = 0; s < n; ++s)
      if (a.contains(k(base.mu + base.sigma * gauss(rng)))) ++hits;
    const double est = double(hits) / n;
    const double se = std::sqrt(std::max(est * (1.0 - est), 1e-6) / n);
    CHECK(std::abs(exact - est) < 3.0 * se);
  }
}

TEST_CASE("bundle action preserves the fiber structure") {
  // Phi_g maps T(N) to itself and projects onto Gaussians; spot-check that
  // the projected density stays normalized through the decomposition
  // identity J^{Ad(g)k}(p) = E_{transformed}[k]
  for (int i = 0; i < 200; ++i) {
    const GroupElement g = random_group();
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const Polynomial2 k{u(g_rng), u(g_rng), u(g_rng)};
    const TangentPoint p = random_point();
    const double lhs = kahler_value(adjoint(g, poly_to_algebra(k)), p);
    const MeanPoint base = transformed_gaussian(inverse(g), p);
    const double rhs =
        k.alpha * (base.mu * base.mu + base.sigma * base.sigma) +
        k.beta * base.mu + k.gamma;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
  }
}
