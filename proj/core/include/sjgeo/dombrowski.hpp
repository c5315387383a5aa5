#pragma once

// Dombrowski's construction on T(N): the Kahler triple (g, J, omega) built
// from the Fisher metric and the exponential connection, with its Ricci and
// scalar curvature and the Kahler-function PDE residual. Natural coordinates
// (theta, thetadot) are the working chart; the exponential connection is flat
// there, so the connector is a plain projection and all tensors are the
// block forms below.

#include <complex>
#include <utility>

#include "sjgeo/gaussian_family.hpp"

namespace sjgeo {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

struct TangentPoint {
  NaturalPoint theta;
  Vec2 thetadot;

  TangentPoint(NaturalPoint th, Vec2 thdot)
      : theta(th), thetadot(std::move(thdot)) {}
  TangentPoint(double t1, double t2, double td1, double td2)
      : theta(t1, t2), thetadot(td1, td2) {}

  Vec4 coords() const {
    return {theta.theta1, theta.theta2, thetadot[0], thetadot[1]};
  }
  static TangentPoint from_coords(const Vec4& c) {
    return {c[0], c[1], c[2], c[3]};
  }
};

enum class Chart { Natural, Hybrid };

struct KahlerTensors {
  Mat4 g;
  Mat4 J;
  Mat4 omega;
  Chart chart;
};

/// Natural chart: g = diag(h,h), J = [[0,-I],[I,0]], omega = [[0,h],[-h,0]].
/// Hybrid chart (eta, thetadot): g = diag(h^-1, h), J = [[0,-h],[h^-1,0]],
/// omega = [[0,I],[-I,0]] (Darboux form).
KahlerTensors kahler_tensors(const TangentPoint& p, Chart chart);

/// Ricci tensor in the natural chart: blkdiag(beta, beta) with
/// beta = -(3/2) [[0,0],[0,1/theta2^2]].
Mat4 ricci(const TangentPoint& p);

/// Scalar curvature -sum h^{ab} d^2(ln det h)/dtheta_a dtheta_b; identically
/// -6 on T(N). Evaluated from the closed forms, not hard-coded.
double scalar_curvature(const TangentPoint& p);

using BundleField = std::function<double(const TangentPoint&)>;

/// Left-minus-right residuals of the two Kahler-function equation families
///   d2f/dth_i dth_j - d2f/dthd_i dthd_j = 2 Gamma^b_ij df/dth_b
///   d2f/dth_i dthd_j + d2f/dth_j dthd_i = 2 Gamma^b_ij df/dthd_b
/// by central differences. A Kahler function gives both matrices ~ 0.
std::pair<Mat2, Mat2> kahler_residual(const BundleField& f,
                                      const TangentPoint& p,
                                      const ToleranceConfig& tol = {});

/// Max-abs entry of the two kahler_residual matrices.
double kahler_residual_norm(const BundleField& f, const TangentPoint& p,
                            const ToleranceConfig& tol = {});

/// Holomorphic coordinates z_k = theta_k + i thetadot_k; Re(z2) < 0.
std::pair<cplx, cplx> to_complex(const TangentPoint& p);
TangentPoint from_complex(cplx z1, cplx z2);

}  // namespace sjgeo
