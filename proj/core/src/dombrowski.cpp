#include "sjgeo/dombrowski.hpp"

#include <cmath>

namespace sjgeo {

KahlerTensors kahler_tensors(const TangentPoint& p, Chart chart) {
  const Mat2 h = fisher_metric(p.theta);
  const Mat2 I = Mat2::Identity();
  const Mat2 Z = Mat2::Zero();
  KahlerTensors t;
  t.chart = chart;
  if (chart == Chart::Natural) {
    t.g << h, Z, Z, h;
    t.J << Z, -I, I, Z;
    t.omega << Z, h, -h, Z;
  } else {
    const Mat2 hinv = fisher_metric_inverse(p.theta);
    t.g << hinv, Z, Z, h;
    t.J << Z, -h, hinv, Z;
    t.omega << Z, I, -I, Z;
  }
  return t;
}

Mat4 ricci(const TangentPoint& p) {
  const double t2 = p.theta.theta2;
  Mat2 beta = Mat2::Zero();
  beta(1, 1) = -1.5 / (t2 * t2);
  Mat4 r = Mat4::Zero();
  r.topLeftCorner<2, 2>() = beta;
  r.bottomRightCorner<2, 2>() = beta;
  return r;
}

double scalar_curvature(const TangentPoint& p) {
  // Hessian of ln det h_F: det h_F = -1/(4 theta2^3), so the only nonzero
  // entry is d2/dtheta2^2 (-3 ln(-theta2)) = 3/theta2^2.
  const double t2 = p.theta.theta2;
  Mat2 hess_logdet = Mat2::Zero();
  hess_logdet(1, 1) = 3.0 / (t2 * t2);
  return -(fisher_metric_inverse(p.theta) * hess_logdet).trace();
}

std::pair<Mat2, Mat2> kahler_residual(const BundleField& f,
                                      const TangentPoint& p,
                                      const ToleranceConfig& tol) {
  tol.validate();
  auto field4 = [&f](const Vec& x) {
    return f(TangentPoint::from_coords(Vec4(x)));
  };
  const Vec4 x0 = p.coords();
  const Vec grad = fd_gradient(field4, x0, tol.fd_step);
  const Mat hess = fd_hessian(field4, x0, tol.hessian_step());
  const auto gamma = christoffels(p.theta);

  Mat2 r1, r2;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      double a = hess(i, j) - hess(i + 2, j + 2);
      double b = hess(i, j + 2) + hess(j, i + 2);
      for (int c = 0; c < 2; ++c) {
        a -= 2.0 * gamma[c](i, j) * grad[c];
        b -= 2.0 * gamma[c](i, j) * grad[c + 2];
      }
      r1(i, j) = a;
      r2(i, j) = b;
    }
  return {r1, r2};
}

double kahler_residual_norm(const BundleField& f, const TangentPoint& p,
                            const ToleranceConfig& tol) {
  const auto [r1, r2] = kahler_residual(f, p, tol);
  return std::max(r1.cwiseAbs().maxCoeff(), r2.cwiseAbs().maxCoeff());
}

std::pair<cplx, cplx> to_complex(const TangentPoint& p) {
  return {cplx(p.theta.theta1, p.thetadot[0]),
          cplx(p.theta.theta2, p.thetadot[1])};
}

TangentPoint from_complex(cplx z1, cplx z2) {
  return {z1.real(), z2.real(), z1.imag(), z2.imag()};
}

}  // namespace sjgeo
