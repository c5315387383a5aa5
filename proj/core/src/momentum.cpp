#include "sjgeo/momentum.hpp"

#include <cmath>
#include <limits>

namespace sjgeo {

namespace {

struct HybridGradients {
  Vec2 d_eta;
  Vec2 d_thetadot;
};

// Analytic partials of psi(L) in the hybrid chart, accumulated over the basis.
HybridGradients kahler_gradients(const AlgebraElement& l,
                                 const TangentPoint& p) {
  const ExpectationPoint e = to_expectation(p.theta);
  const double e1 = e.eta1, e2 = e.eta2;
  const double d1 = p.thetadot[0], d2 = p.thetadot[1];
  const double u = e1 * e1 - e2;  // = -sigma^2 = 1/(2 theta2)

  HybridGradients out{Vec2::Zero(), Vec2::Zero()};
  const Vec6& c = l.coeffs;

  // F
  out.d_eta[1] += -c[0];
  // G
  out.d_eta[0] += c[1] * (d1 * d2 + e1 / (2.0 * u * u));
  out.d_eta[1] += c[1] * (d2 * d2 - 1.0 / (4.0 * u * u));
  out.d_thetadot[0] += c[1] * (0.5 * d1 + e1 * d2);
  out.d_thetadot[1] += c[1] * (2.0 * e2 * d2 + e1 * d1);
  // H
  out.d_eta[0] += -c[2] * d1;
  out.d_eta[1] += -2.0 * c[2] * d2;
  out.d_thetadot[0] += -c[2] * e1;
  out.d_thetadot[1] += -2.0 * c[2] * e2;
  // P
  out.d_eta[0] += c[3] * d2;
  out.d_thetadot[0] += 0.5 * c[3];
  out.d_thetadot[1] += c[3] * e1;
  // Q
  out.d_eta[0] += c[4];
  // R contributes nothing.
  return out;
}

}  // namespace

double kahler_value(const AlgebraElement& l, const TangentPoint& p) {
  const ExpectationPoint e = to_expectation(p.theta);
  const double e1 = e.eta1, e2 = e.eta2;
  const double d1 = p.thetadot[0], d2 = p.thetadot[1];
  const double u = e1 * e1 - e2;

  const Vec6& c = l.coeffs;
  double v = 0.0;
  v += c[0] * (-e2);
  v += c[1] * (0.25 * d1 * d1 + e2 * d2 * d2 + e1 * d1 * d2 - 1.0 / (4.0 * u));
  v += c[2] * (-e1 * d1 - 2.0 * e2 * d2);
  v += c[3] * (0.5 * d1 + e1 * d2);
  v += c[4] * e1;
  v += c[5] * (-0.25);
  return v;
}

MomentumVector momentum_vector(const TangentPoint& p) {
  MomentumVector j;
  for (int i = 0; i < 6; ++i)
    j.values[i] = kahler_value(AlgebraElement::basis(i), p);
  return j;
}

Vec4 hamiltonian_field(const AlgebraElement& l, const TangentPoint& p) {
  const HybridGradients grad = kahler_gradients(l, p);
  const Vec2 theta_part = fisher_metric_inverse(p.theta) * grad.d_thetadot;
  Vec4 x;
  x << theta_part, -grad.d_eta;
  return x;
}

Vec4 fundamental_field(const AlgebraElement& l, const TangentPoint& p,
                       double fd_step) {
  const SJPoint q = chart_map(p);
  auto traj = [&](double t) -> Vec4 {
    return chart_map_inverse(group_action(group_exp(l, t), q)).coords();
  };
  const double h = fd_step;
  return (-traj(2.0 * h) + 8.0 * traj(h) - 8.0 * traj(-h) + traj(-2.0 * h)) /
         (12.0 * h);
}

double poisson(const AlgebraElement& l1, const AlgebraElement& l2,
               const TangentPoint& p) {
  const Vec4 x1 = hamiltonian_field(l1, p);
  const Vec4 x2 = hamiltonian_field(l2, p);
  const Mat2 h = fisher_metric(p.theta);
  // omega = [[0, h], [-h, 0]] in the natural frame.
  return x1.head<2>().dot(h * x2.tail<2>()) -
         x1.tail<2>().dot(h * x2.head<2>());
}

TangentPoint bundle_action(const GroupElement& g, const TangentPoint& p) {
  return chart_map_inverse(group_action(g, chart_map(p)));
}

double equivariance_residual(const GroupElement& g, const AlgebraElement& l,
                             const TangentPoint& p) {
  const double lhs = kahler_value(adjoint(inverse(g), l), p);
  const double rhs = kahler_value(l, bundle_action(g, p));
  return std::abs(lhs - rhs);
}

Interval SpectrumDesc::as_interval() const {
  const double inf = std::numeric_limits<double>::infinity();
  switch (kind) {
    case SpectrumKind::HalfLineBelow:
      return {-inf, endpoint};
    case SpectrumKind::HalfLineAbove:
      return {endpoint, inf};
    case SpectrumKind::FullLine:
      return {-inf, inf};
    case SpectrumKind::Point:
      return {endpoint, endpoint};
  }
  throw std::logic_error("SpectrumDesc: bad kind");
}

bool SpectrumDesc::contains(double x) const {
  return as_interval().contains(x);
}

SpectrumDesc spectrum(const ObservableDecomposition& obs) {
  const Polynomial2& k = obs.k;
  if (k.alpha > 0.0)
    return {SpectrumKind::HalfLineAbove,
            k.gamma - k.beta * k.beta / (4.0 * k.alpha)};
  if (k.alpha < 0.0)
    return {SpectrumKind::HalfLineBelow,
            k.gamma - k.beta * k.beta / (4.0 * k.alpha)};
  if (k.beta != 0.0) return {SpectrumKind::FullLine, 0.0};
  return {SpectrumKind::Point, k.gamma};
}

MeanPoint transformed_gaussian(const GroupElement& g, const TangentPoint& p) {
  if (borel_contains(g)) {
    const MeanPoint base = to_mean(p.theta);
    const double a = g.M(0, 0), lambda = g.X[0];
    return {(0.5 * lambda + base.mu) / a, base.sigma / std::abs(a)};
  }
  return to_mean(bundle_action(g, p).theta);  // documented fallback
}

double quadratic_cdf(const Polynomial2& k, double t, const MeanPoint& base) {
  double prob = 0.0;
  for (const Interval& iv : quadratic_sublevel(k, t)) {
    const double lo = std::isinf(iv.lo) ? 0.0 : normal_cdf((iv.lo - base.mu) / base.sigma);
    const double hi = std::isinf(iv.hi) ? 1.0 : normal_cdf((iv.hi - base.mu) / base.sigma);
    prob += hi - lo;
  }
  return prob;
}

double spectral_measure(const ObservableDecomposition& obs,
                        const TangentPoint& p, const IntervalSet& a) {
  const MeanPoint base = transformed_gaussian(inverse(obs.g), p);
  const Polynomial2& k = obs.k;
  const SpectrumDesc sp = spectrum(obs);

  if (sp.kind == SpectrumKind::Point) {
    for (const Interval& iv : a)
      if (iv.contains(k.gamma)) return 1.0;
    return 0.0;
  }

  // CDF of k(X), pinned to exactly 0/1 outside the image of k: evaluating
  // the root formula at the vertex value itself cancels catastrophically.
  auto cdf = [&](double t) {
    if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
    if (sp.kind == SpectrumKind::HalfLineAbove && t <= sp.endpoint) return 0.0;
    if (sp.kind == SpectrumKind::HalfLineBelow && t >= sp.endpoint) return 1.0;
    return quadratic_cdf(k, t, base);
  };

  double prob = 0.0;
  for (const Interval& iv : a) prob += cdf(iv.hi) - cdf(iv.lo);
  return prob;
}

}  // namespace sjgeo
