#pragma once

// The H x C model of T(N): Kahler-Berndt metric, the biholomorphism with the
// tangent bundle, the SL(2,R) x| R^2 (and det = -1 branch) actions, the
// holomorphic-isometry normal forms and the eikonal-type PDE residuals.
//
// Point order (u, v, x, y) with tau = u + iv, z = x + iy is fixed everywhere;
// silent transposition is the classic bug here.

#include "sjgeo/dombrowski.hpp"
#include "sjgeo/jacobi_group.hpp"

namespace sjgeo {

struct SJPoint {
  cplx tau;
  cplx z;

  SJPoint(cplx tau_, cplx z_) : tau(tau_), z(z_) {
    if (!(tau.imag() > 0.0))
      throw std::domain_error("SJPoint: Im(tau) must be > 0");
  }

  Vec4 coords() const { return {tau.real(), tau.imag(), z.real(), z.imag()}; }
  static SJPoint from_coords(const Vec4& c) {
    return {cplx(c[0], c[1]), cplx(c[2], c[3])};
  }
};

struct KBParams {
  double A = 1.0;
  double B = 1.0;
};

/// Affine symplectic group element (M, X) with det M = orient in {+1, -1};
/// the orientation is stored explicitly so near-singular determinants never
/// misroute the anti-holomorphic branch.
struct ASpElement {
  Mat2 M;
  RowVec2 X;  // (lambda, mu)
  int orient = +1;

  ASpElement(const Mat2& m, const RowVec2& x, int o = +1)
      : M(m), X(x), orient(o) {
    if (o != 1 && o != -1)
      throw std::invalid_argument("ASpElement: orient must be +-1");
    if (std::abs(M.determinant() - o) > 1e-9)
      throw std::invalid_argument("ASpElement: det M must equal orient");
  }
  static ASpElement from_group(const GroupElement& g) {
    return {g.M, g.X, +1};
  }
  static ASpElement identity() {
    return {Mat2::Identity(), RowVec2::Zero(), +1};
  }
};

ASpElement asp_multiply(const ASpElement& g1, const ASpElement& g2);
ASpElement asp_inverse(const ASpElement& g);

/// Kahler-Berndt metric g_{A,B} in coordinates (u, v, x, y).
Mat4 kb_metric(const SJPoint& pt, const KBParams& params);

/// The Siegel-Jacobi metric (1/2) g_{1,1}.
Mat4 sj_metric(const SJPoint& pt);

/// Standard complex structure (multiplication by i) on H x C in (u,v,x,y).
Mat4 sj_complex_structure();

/// Kahler form of the Siegel-Jacobi metric, omega(X,Y) = g(JX, Y).
Mat4 sj_symplectic_form(const SJPoint& pt);

/// (tau, z) = (thetadot2 - i theta2, -thetadot1 + i theta1) and inverse.
SJPoint chart_map(const TangentPoint& p);
TangentPoint chart_map_inverse(const SJPoint& pt);

/// Constant Jacobian of chart_map, d(u,v,x,y)/d(theta,thetadot).
Mat4 chart_map_jacobian();

/// Fractional-linear action; the det = -1 branch conjugates tau, z first.
SJPoint group_action(const ASpElement& elem, const SJPoint& pt);

/// Action of a Jacobi group element (kappa is forgotten).
SJPoint group_action(const GroupElement& g, const SJPoint& pt);

using SJMap = std::function<SJPoint(const SJPoint&)>;

/// Holomorphic-isometry normal forms on (z1, z2) in C x iH:
///   form 1: (z1,z2) |-> (-i a (z1 + ic)/(z2 + ib) + id, a^2/(z2 + ib) + ie)
///   form 2: (z1,z2) |-> (a z1 + b z2 + ic, a^2 z2 + id)
/// Parameters (a,b,c,d,e); form 2 ignores e. Returned as a map on H x C
/// through the chart identification.
SJMap holomorphic_isometry(int form, double a, double b, double c, double d,
                           double e = 0.0);

/// sup-norm of (mapping^* g_SJ - g_SJ) at pt, with a fourth-order
/// finite-difference Jacobian. Throws if the mapping exits H x C near pt.
double isometry_residual(const SJMap& mapping, const SJPoint& pt,
                         double fd_step = 1e-3);

/// Residuals of the system u_x^2 + u_y^2 = (u/x)^2, Lap(u) = 0 on {x < 0}:
/// returns (first-equation residual, Laplacian), central differences.
std::pair<double, double> eikonal_residual(
    const std::function<double(double, double)>& u, double x, double y,
    const ToleranceConfig& tol = {});

/// Closed-form K0 x| R^2 element sending the base point (i, 0) to target.
ASpElement transitivity_witness(const SJPoint& target);

/// Rotation element of the SO(2) isotropy subgroup of (i, 0).
ASpElement isotropy_rotation(double phi);

}  // namespace sjgeo
