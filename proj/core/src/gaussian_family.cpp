#include "sjgeo/gaussian_family.hpp"

#include <cmath>

namespace sjgeo {

FamilySpec gaussian_family_spec() {
  FamilySpec spec;
  spec.C = [](double) { return 0.0; };
  spec.F = {[](double x) { return x; }, [](double x) { return x * x; }};
  spec.psi = [](const Vec2& th) {
    return -th[0] * th[0] / (4.0 * th[1]) + 0.5 * std::log(-M_PI / th[1]);
  };
  return spec;
}

NaturalPoint to_natural(const MeanPoint& p) {
  const double s2 = p.sigma * p.sigma;
  return {p.mu / s2, -1.0 / (2.0 * s2)};
}

NaturalPoint to_natural(const ExpectationPoint& p) {
  const double s2 = p.eta2 - p.eta1 * p.eta1;
  return {p.eta1 / s2, -1.0 / (2.0 * s2)};
}

MeanPoint to_mean(const NaturalPoint& p) {
  const double s2 = -1.0 / (2.0 * p.theta2);
  return {-p.theta1 / (2.0 * p.theta2), std::sqrt(s2)};
}

MeanPoint to_mean(const ExpectationPoint& p) {
  return {p.eta1, std::sqrt(p.eta2 - p.eta1 * p.eta1)};
}

ExpectationPoint to_expectation(const NaturalPoint& p) {
  const double t1 = p.theta1, t2 = p.theta2;
  return {-t1 / (2.0 * t2), (t1 * t1 - 2.0 * t2) / (4.0 * t2 * t2)};
}

ExpectationPoint to_expectation(const MeanPoint& p) {
  return {p.mu, p.mu * p.mu + p.sigma * p.sigma};
}

double potential(const NaturalPoint& p) {
  return -p.theta1 * p.theta1 / (4.0 * p.theta2) +
         0.5 * std::log(-M_PI / p.theta2);
}

Vec2 potential_gradient(const NaturalPoint& p) {
  const ExpectationPoint e = to_expectation(p);
  return {e.eta1, e.eta2};
}

double density(const NaturalPoint& p, double x) {
  return std::exp(p.theta1 * x + p.theta2 * x * x - potential(p));
}

Mat2 fisher_metric(const NaturalPoint& p) {
  const double t1 = p.theta1, t2 = p.theta2;
  Mat2 h;
  h << -t2, t1, t1, (t2 - t1 * t1) / t2;
  return h / (2.0 * t2 * t2);
}

Mat2 fisher_metric_inverse(const NaturalPoint& p) {
  const double t1 = p.theta1, t2 = p.theta2;
  Mat2 hinv;
  hinv << 2.0 * (t1 * t1 - t2), 2.0 * t1 * t2, 2.0 * t1 * t2, 2.0 * t2 * t2;
  return hinv;
}

std::array<Mat2, 2> christoffels(const NaturalPoint& p) {
  const double t1 = p.theta1, t2 = p.theta2;
  Mat2 g1, g2;
  g1 << t1 / (2.0 * t2), -(t1 * t1 + t2) / (2.0 * t2 * t2),
      -(t1 * t1 + t2) / (2.0 * t2 * t2),
      0.5 * (t1 / t2) * (t1 / t2) * (t1 / t2);
  g2 << 0.5, -t1 / (2.0 * t2), -t1 / (2.0 * t2),
      (t1 * t1 - 2.0 * t2) / (2.0 * t2 * t2);
  return {g1, g2};
}

std::array<Mat2, 2> potential_third_derivative(const NaturalPoint& p) {
  const double t1 = p.theta1, t2 = p.theta2;
  const double t2sq = t2 * t2;
  const double d112 = 1.0 / (2.0 * t2sq);
  const double d122 = -t1 / (t2sq * t2);
  const double d222 = 1.5 * t1 * t1 / (t2sq * t2sq) - 1.0 / (t2sq * t2);
  Mat2 dk1, dk2;  // result[k](i,j) = d_i d_j d_k psi
  dk1 << 0.0, d112, d112, d122;
  dk2 << d112, d122, d122, d222;
  return {dk1, dk2};
}

std::array<Mat2, 2> alpha_christoffels(const NaturalPoint& p, double alpha) {
  auto t = potential_third_derivative(p);
  const double c = 0.5 * (1.0 - alpha);
  return {c * t[0], c * t[1]};
}

double moment(const NaturalPoint& p, int k) {
  const ExpectationPoint e = to_expectation(p);
  const Mat2 h = fisher_metric(p);
  switch (k) {
    case 1:
      return e.eta1;
    case 2:
      return e.eta2;
    case 3:  // E[x^3] = (h_F)_12 + eta1 eta2
      return h(0, 1) + e.eta1 * e.eta2;
    case 4:  // E[x^4] = (h_F)_22 + eta2^2
      return h(1, 1) + e.eta2 * e.eta2;
    default:
      throw std::invalid_argument("moment: k must be in 1..4");
  }
}

double base_sectional_curvature(const NaturalPoint& p,
                                const ToleranceConfig& tol) {
  tol.validate();
  const double h = tol.fd_step;

  auto gamma_at = [](double t1, double t2) {
    return christoffels(NaturalPoint(t1, t2));
  };

  // dGamma[l][k](i,j) = d_l Gamma^k_ij, central differences.
  std::array<std::array<Mat2, 2>, 2> dG;
  {
    auto gp = gamma_at(p.theta1 + h, p.theta2);
    auto gm = gamma_at(p.theta1 - h, p.theta2);
    dG[0] = {(gp[0] - gm[0]) / (2.0 * h), (gp[1] - gm[1]) / (2.0 * h)};
    gp = gamma_at(p.theta1, p.theta2 + h);
    gm = gamma_at(p.theta1, p.theta2 - h);
    dG[1] = {(gp[0] - gm[0]) / (2.0 * h), (gp[1] - gm[1]) / (2.0 * h)};
  }

  // R^a_{122} with R(X,Y)Z = grad_X grad_Y Z - grad_Y grad_X Z - grad_[X,Y] Z.
  const auto G = christoffels(p);
  Vec2 r;  // r[a] = R^a_{122}
  for (int a = 0; a < 2; ++a) {
    double v = dG[0][a](1, 1) - dG[1][a](0, 1);
    for (int b = 0; b < 2; ++b)
      v += G[b](1, 1) * G[a](0, b) - G[b](0, 1) * G[a](1, b);
    r[a] = v;
  }

  const Mat2 hf = fisher_metric(p);
  const double numerator = hf(0, 0) * r[0] + hf(1, 0) * r[1];
  return numerator / hf.determinant();
}

}  // namespace sjgeo
