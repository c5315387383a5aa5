#pragma once

// The Jacobi group SL(2,R) x| Heis(R): multiplication, inversion, the Lie
// algebra over the basis {F, G, H, P, Q, R}, adjoint representation, Borel
// subgroup and the polynomial model of the abelian subalgebra a = <F, Q, R>.
//
// Convention pinned throughout: the Heisenberg vector X = (lambda, mu) is a
// ROW vector and SL(2) acts on the right, X |-> X M.

#include <array>
#include <optional>

#include "sjgeo/numerics.hpp"

namespace sjgeo {

using RowVec2 = Eigen::RowVector2d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat2 = Eigen::Matrix2d;

/// Omega(X1, X2) = lambda1 mu2 - lambda2 mu1.
inline double symplectic_omega(const RowVec2& x1, const RowVec2& x2) {
  return x1[0] * x2[1] - x2[0] * x1[1];
}

struct GroupElement {
  Mat2 M;
  RowVec2 X;     // (lambda, mu)
  double kappa;

  GroupElement(const Mat2& m, const RowVec2& x, double k);
  static GroupElement identity();
};

/// Coefficients over the ordered basis (F, G, H, P, Q, R), where
/// F = [[0,1],[0,0]], G = [[0,0],[1,0]], H = [[1,0],[0,-1]] span sl(2,R) and
/// (P, Q, R) is the canonical basis of heis = R^2 x R.
struct AlgebraElement {
  Vec6 coeffs = Vec6::Zero();

  AlgebraElement() = default;
  explicit AlgebraElement(const Vec6& c) : coeffs(c) {}
  AlgebraElement(double f, double g, double h, double p, double q, double r) {
    coeffs << f, g, h, p, q, r;
  }

  static AlgebraElement basis(int i);  // 0..5 -> F..R
  static AlgebraElement F() { return basis(0); }
  static AlgebraElement G() { return basis(1); }
  static AlgebraElement H() { return basis(2); }
  static AlgebraElement P() { return basis(3); }
  static AlgebraElement Q() { return basis(4); }
  static AlgebraElement R() { return basis(5); }

  Mat2 sl2() const;        // f F + g G + h H as a traceless matrix
  RowVec2 heis_vec() const { return {coeffs[3], coeffs[4]}; }
  double heis_r() const { return coeffs[5]; }

  AlgebraElement operator+(const AlgebraElement& o) const {
    return AlgebraElement(Vec6(coeffs + o.coeffs));
  }
  AlgebraElement operator-(const AlgebraElement& o) const {
    return AlgebraElement(Vec6(coeffs - o.coeffs));
  }
  friend AlgebraElement operator*(double s, const AlgebraElement& l) {
    return AlgebraElement(Vec6(s * l.coeffs));
  }
};

extern const char* const kBasisNames[6];  // "F","G","H","P","Q","R"

/// (M1, X1, k1)(M2, X2, k2) = (M1 M2, X1 M2 + X2, k1 + k2 + Omega(X1 M2, X2)).
GroupElement multiply(const GroupElement& g1, const GroupElement& g2);

/// (M, X, k)^-1 = (M^-1, -X M^-1, -k); M^-1 is the adjugate (det M = 1).
GroupElement inverse(const GroupElement& g);

/// [(A,xi,r),(B,eta,s)] = ([A,B], xi B - eta A, 2 Omega(xi, eta)).
AlgebraElement bracket(const AlgebraElement& l1, const AlgebraElement& l2);

/// Ad(M,X,k)(A,xi,r) = (M A M^-1, X A M^-1 + xi M^-1,
///                      r - 2 Omega(xi, X) - Omega(X A, X)).
AlgebraElement adjoint(const GroupElement& g, const AlgebraElement& l);

/// Restriction of Ad(g) to a = <F, Q, R>: the 6x3 matrix whose columns are
/// Ad(g)F, Ad(g)Q, Ad(g)R in basis coordinates. Closed form; for
/// M = [[a,b],[c,d]], X = (lambda, mu):
///   col F = (a^2, -c^2, -ac, -c lambda, a lambda, lambda^2)
///   col Q = (0, 0, 0, -c, a, 2 lambda)
///   col R = (0, 0, 0, 0, 0, 1)
Eigen::Matrix<double, 6, 3> ad_on_a(const GroupElement& g);

/// Borel subgroup: lower-left entry of M vanishes (full Heisenberg factor).
bool borel_contains(const GroupElement& g, double tol = 1e-12);

/// Right action of the Borel subgroup on R: x . b = a x - lambda/2.
double borel_act(const GroupElement& g, double x);

/// a-membership: the G, H, P coefficients must vanish (|.| <= 1e-12), else
/// nullopt. Identification: alpha x^2 + beta x + gamma = -alpha F + beta Q
/// - 4 gamma R under F |-> -x^2, Q |-> x, R |-> -1/4.
std::optional<Polynomial2> poly_from_algebra(const AlgebraElement& l,
                                             double tol = 1e-12);
AlgebraElement poly_to_algebra(const Polynomial2& k);

/// exp(t A) for traceless 2x2 A, by the trace/determinant case split.
Mat2 exp_sl2(const Mat2& a, double t = 1.0);

/// One-parameter subgroup exp(t L) of the Jacobi group, in closed form:
/// (e^{tA}, xi Phi(t), r t + Omega(xi A, xi) B(t)) with Phi(t) the integral
/// of e^{sA} over [0,t] and B(t) the integral of its A-coefficient.
GroupElement group_exp(const AlgebraElement& l, double t = 1.0);

}  // namespace sjgeo
