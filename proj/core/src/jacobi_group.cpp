#include "sjgeo/jacobi_group.hpp"

#include <cmath>

namespace sjgeo {

const char* const kBasisNames[6] = {"F", "G", "H", "P", "Q", "R"};

GroupElement::GroupElement(const Mat2& m, const RowVec2& x, double k)
    : M(m), X(x), kappa(k) {
  if (std::abs(M.determinant() - 1.0) > 1e-9)
    throw std::invalid_argument("GroupElement: det M must be 1");
}

GroupElement GroupElement::identity() {
  return {Mat2::Identity(), RowVec2::Zero(), 0.0};
}

AlgebraElement AlgebraElement::basis(int i) {
  AlgebraElement l;
  l.coeffs[i] = 1.0;
  return l;
}

Mat2 AlgebraElement::sl2() const {
  Mat2 a;
  a << coeffs[2], coeffs[0], coeffs[1], -coeffs[2];
  return a;
}

namespace {

// Traceless matrix -> (F, G, H) coefficients.
void sl2_to_coeffs(const Mat2& a, Vec6& out) {
  out[0] = a(0, 1);
  out[1] = a(1, 0);
  out[2] = a(0, 0);
}

Mat2 adjugate(const Mat2& m) {
  Mat2 a;
  a << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return a;
}

}  // namespace

GroupElement multiply(const GroupElement& g1, const GroupElement& g2) {
  const RowVec2 x1m2 = g1.X * g2.M;
  return {g1.M * g2.M, x1m2 + g2.X,
          g1.kappa + g2.kappa + symplectic_omega(x1m2, g2.X)};
}

GroupElement inverse(const GroupElement& g) {
  const Mat2 minv = adjugate(g.M);
  return {minv, -g.X * minv, -g.kappa};
}

AlgebraElement bracket(const AlgebraElement& l1, const AlgebraElement& l2) {
  const Mat2 a = l1.sl2(), b = l2.sl2();
  const RowVec2 xi = l1.heis_vec(), eta = l2.heis_vec();
  AlgebraElement out;
  sl2_to_coeffs(a * b - b * a, out.coeffs);
  const RowVec2 v = xi * b - eta * a;
  out.coeffs[3] = v[0];
  out.coeffs[4] = v[1];
  out.coeffs[5] = 2.0 * symplectic_omega(xi, eta);
  return out;
}

AlgebraElement adjoint(const GroupElement& g, const AlgebraElement& l) {
  const Mat2 minv = adjugate(g.M);
  const Mat2 a = l.sl2();
  const RowVec2 xi = l.heis_vec();
  AlgebraElement out;
  sl2_to_coeffs(g.M * a * minv, out.coeffs);
  const RowVec2 v = g.X * a * minv + xi * minv;
  out.coeffs[3] = v[0];
  out.coeffs[4] = v[1];
  out.coeffs[5] = l.heis_r() - 2.0 * symplectic_omega(xi, g.X) -
                  symplectic_omega(g.X * a, g.X);
  return out;
}

Eigen::Matrix<double, 6, 3> ad_on_a(const GroupElement& g) {
  const double a = g.M(0, 0), c = g.M(1, 0), lambda = g.X[0];
  Eigen::Matrix<double, 6, 3> m;
  m.setZero();
  m.col(0) << a * a, -c * c, -a * c, -c * lambda, a * lambda, lambda * lambda;
  m.col(1) << 0, 0, 0, -c, a, 2.0 * lambda;
  m.col(2) << 0, 0, 0, 0, 0, 1;
  return m;
}

bool borel_contains(const GroupElement& g, double tol) {
  return std::abs(g.M(1, 0)) <= tol;
}

double borel_act(const GroupElement& g, double x) {
  if (!borel_contains(g))
    throw std::domain_error("borel_act: element is not in the Borel subgroup");
  return g.M(0, 0) * x - 0.5 * g.X[0];
}

std::optional<Polynomial2> poly_from_algebra(const AlgebraElement& l,
                                             double tol) {
  if (std::abs(l.coeffs[1]) > tol || std::abs(l.coeffs[2]) > tol ||
      std::abs(l.coeffs[3]) > tol)
    return std::nullopt;
  return Polynomial2{-l.coeffs[0], l.coeffs[4], -0.25 * l.coeffs[5]};
}

AlgebraElement poly_to_algebra(const Polynomial2& k) {
  return {-k.alpha, 0.0, 0.0, 0.0, k.beta, -4.0 * k.gamma};
}

Mat2 exp_sl2(const Mat2& a, double t) {
  // A traceless: A^2 = -det(A) I, so the series collapses to
  // cosh/cos + sinh/sin depending on the sign of det(A).
  const double d = a.determinant();
  const Mat2 at = t * a;
  const double dt2 = d * t * t;
  double c0, c1;  // e^{tA} = c0 I + c1 (tA)
  if (dt2 < -1e-24) {
    const double w = std::sqrt(-dt2);
    c0 = std::cosh(w);
    c1 = std::sinh(w) / w;
  } else if (dt2 > 1e-24) {
    const double w = std::sqrt(dt2);
    c0 = std::cos(w);
    c1 = std::sin(w) / w;
  } else {
    c0 = 1.0;
    c1 = 1.0;
  }
  return c0 * Mat2::Identity() + c1 * at;
}

GroupElement group_exp(const AlgebraElement& l, double t) {
  const Mat2 a = l.sl2();
  const RowVec2 xi = l.heis_vec();
  const double d = a.determinant();

  // Phi(t) = int_0^t e^{sA} ds = p0 I + p1 A, and the kappa component needs
  // the iterated integral B(t) = int_0^t p1(s) ds = (t - p0)/det(A). The
  // closed forms cancel catastrophically for small det(A) t^2; switch to the
  // series there (next omitted term ~ (det A t^2)^3, far below 1e-16).
  double p0, p1, bint;
  const double dt2 = d * t * t;
  if (std::abs(dt2) < 1e-4) {
    p0 = t * (1.0 - dt2 / 6.0 + dt2 * dt2 / 120.0);
    p1 = t * t * (0.5 - dt2 / 24.0 + dt2 * dt2 / 720.0);
    bint = t * t * t * (1.0 / 6.0 - dt2 / 120.0 + dt2 * dt2 / 5040.0);
  } else if (d < 0.0) {
    const double w0 = std::sqrt(-d);
    p0 = std::sinh(w0 * t) / w0;
    p1 = (std::cosh(w0 * t) - 1.0) / (-d);
    bint = (t - p0) / d;
  } else {
    const double w0 = std::sqrt(d);
    p0 = std::sin(w0 * t) / w0;
    p1 = (1.0 - std::cos(w0 * t)) / d;
    bint = (t - p0) / d;
  }

  const Mat2 m = exp_sl2(a, t);
  const RowVec2 x = xi * (p0 * Mat2::Identity() + p1 * a);
  const double kappa = l.heis_r() * t + symplectic_omega(xi * a, xi) * bint;
  return {m, x, kappa};
}

}  // namespace sjgeo
