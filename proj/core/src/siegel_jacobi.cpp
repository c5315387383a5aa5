#include "sjgeo/siegel_jacobi.hpp"

#include <cmath>

namespace sjgeo {

namespace {

Mat2 signed_inverse(const Mat2& m, int orient) {
  Mat2 adj;
  adj << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return orient > 0 ? adj : Mat2(-adj);
}

}  // namespace

ASpElement asp_multiply(const ASpElement& g1, const ASpElement& g2) {
  return {g1.M * g2.M, g1.X * g2.M + g2.X, g1.orient * g2.orient};
}

ASpElement asp_inverse(const ASpElement& g) {
  const Mat2 minv = signed_inverse(g.M, g.orient);
  return {minv, -g.X * minv, g.orient};
}

Mat4 kb_metric(const SJPoint& pt, const KBParams& params) {
  if (!(params.A > 0.0 && params.B > 0.0))
    throw std::domain_error("kb_metric: A and B must be > 0");
  const double v = pt.tau.imag();
  const double y = pt.z.imag();
  const double diag_tau = (params.A * v + params.B * y * y) / (v * v * v);
  const double diag_z = params.B / v;
  const double cross = -params.B * y / (v * v);
  Mat4 g;
  g << diag_tau, 0, cross, 0,
       0, diag_tau, 0, cross,
       cross, 0, diag_z, 0,
       0, cross, 0, diag_z;
  return g;
}

Mat4 sj_metric(const SJPoint& pt) { return 0.5 * kb_metric(pt, {1.0, 1.0}); }

Mat4 sj_complex_structure() {
  Mat4 j = Mat4::Zero();
  j(1, 0) = 1.0;   // J du = dv
  j(0, 1) = -1.0;  // J dv = -du
  j(3, 2) = 1.0;
  j(2, 3) = -1.0;
  return j;
}

Mat4 sj_symplectic_form(const SJPoint& pt) {
  return sj_complex_structure().transpose() * sj_metric(pt);
}

SJPoint chart_map(const TangentPoint& p) {
  return {cplx(p.thetadot[1], -p.theta.theta2),
          cplx(-p.thetadot[0], p.theta.theta1)};
}

TangentPoint chart_map_inverse(const SJPoint& pt) {
  return {pt.z.imag(), -pt.tau.imag(), -pt.z.real(), pt.tau.real()};
}

Mat4 chart_map_jacobian() {
  Mat4 t = Mat4::Zero();
  t(0, 3) = 1.0;   // u = thetadot2
  t(1, 1) = -1.0;  // v = -theta2
  t(2, 2) = -1.0;  // x = -thetadot1
  t(3, 0) = 1.0;   // y = theta1
  return t;
}

SJPoint group_action(const ASpElement& elem, const SJPoint& pt) {
  cplx tau = pt.tau, z = pt.z;
  if (elem.orient < 0) {
    tau = std::conj(tau);
    z = std::conj(z);
  }
  const double a = elem.M(0, 0), b = elem.M(0, 1);
  const double c = elem.M(1, 0), d = elem.M(1, 1);
  const cplx denom = c * tau + d;
  return {(a * tau + b) / denom,
          (z + elem.X[0] * tau + elem.X[1]) / denom};
}

SJPoint group_action(const GroupElement& g, const SJPoint& pt) {
  return group_action(ASpElement(g.M, g.X, +1), pt);
}

SJMap holomorphic_isometry(int form, double a, double b, double c, double d,
                           double e) {
  if (a == 0.0)
    throw std::invalid_argument("holomorphic_isometry: a must be nonzero");
  if (form != 1 && form != 2)
    throw std::invalid_argument("holomorphic_isometry: form must be 1 or 2");
  const cplx i(0.0, 1.0);
  return [=](const SJPoint& pt) -> SJPoint {
    // (z1, z2) in C x iH through the identification f(z1,z2) = (-i z2, i z1).
    const cplx z1 = -i * pt.z;
    const cplx z2 = i * pt.tau;
    cplx w1, w2;
    if (form == 1) {
      w1 = -i * a * (z1 + i * c) / (z2 + i * b) + i * d;
      w2 = a * a / (z2 + i * b) + i * e;
    } else {
      w1 = a * z1 + b * z2 + i * c;
      w2 = a * a * z2 + i * d;
    }
    return {-i * w2, i * w1};
  };
}

double isometry_residual(const SJMap& mapping, const SJPoint& pt,
                         double fd_step) {
  auto coords_map = [&mapping](const Vec& x) -> Vec {
    SJPoint q = SJPoint::from_coords(Vec4(x));  // throws if outside H x C
    return mapping(q).coords();
  };
  const Vec4 x0 = pt.coords();
  Mat jac;
  Vec4 fx0;
  try {
    jac = fd_jacobian4(coords_map, x0, fd_step);
    fx0 = coords_map(x0);
  } catch (const std::domain_error&) {
    throw std::domain_error("isometry_residual: mapping exits H x C near pt");
  }
  const Mat4 g_image = sj_metric(SJPoint::from_coords(fx0));
  const Mat4 pullback = jac.transpose() * g_image * jac;
  return (pullback - sj_metric(pt)).cwiseAbs().maxCoeff();
}

std::pair<double, double> eikonal_residual(
    const std::function<double(double, double)>& u, double x, double y,
    const ToleranceConfig& tol) {
  tol.validate();
  if (!(x < 0.0))
    throw std::domain_error("eikonal_residual: requires x < 0");
  const double h = tol.fd_step;
  const double ux = (u(x + h, y) - u(x - h, y)) / (2.0 * h);
  const double uy = (u(x, y + h) - u(x, y - h)) / (2.0 * h);
  const double u0 = u(x, y);
  const double first = ux * ux + uy * uy - (u0 / x) * (u0 / x);

  const double hh = tol.hessian_step();
  const double uxx = (u(x + hh, y) - 2.0 * u0 + u(x - hh, y)) / (hh * hh);
  const double uyy = (u(x, y + hh) - 2.0 * u0 + u(x, y - hh)) / (hh * hh);
  return {first, uxx + uyy};
}

ASpElement transitivity_witness(const SJPoint& target) {
  const double u = target.tau.real(), v = target.tau.imag();
  const double x = target.z.real(), y = target.z.imag();
  const double sv = std::sqrt(v);
  Mat2 m;
  m << sv, u / sv, 0.0, 1.0 / sv;
  const double lambda = y / v;
  const double mu = x - lambda * u;
  const RowVec2 shift = RowVec2(lambda, mu) * m;
  return {m, shift, +1};
}

ASpElement isotropy_rotation(double phi) {
  Mat2 m;
  m << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
  return {m, RowVec2::Zero(), +1};
}

}  // namespace sjgeo
