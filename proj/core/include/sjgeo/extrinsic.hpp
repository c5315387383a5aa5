#pragma once

// The embedding Psi of the Siegel-Jacobi space into L^2(R) by Gaussian wave
// functions exp(c0 + c1 x + c2 x^2), analytic inner products, the pullback
// identity against the Fubini-Study structure, the operator family Q(L) of
// the infinitesimal Schrodinger-Weil representation, and the kappa phase map.
//
// Everything is exact coefficient calculus: the family (polynomial) x
// (Gaussian exponential) is closed under all six generators, and inner
// products reduce to moments of a complex Gaussian. No quadrature on the
// main path.

#include "sjgeo/momentum.hpp"

namespace sjgeo {

struct WaveFunction {
  cplx c0;
  cplx c1;
  cplx c2;

  WaveFunction(cplx c0_, cplx c1_, cplx c2_) : c0(c0_), c1(c1_), c2(c2_) {
    if (!(c2.real() < 0.0))
      throw std::domain_error("WaveFunction: Re(c2) must be < 0");
  }

  cplx operator()(double x) const {
    return std::exp(c0 + c1 * x + c2 * x * x);
  }
};

/// q(x) = q0 + q1 x + q2 x^2, the action of one Q(L) on a fixed wave
/// function: Q(L) w = q(x) w.
struct PolynomialOperatorAction {
  cplx q0, q1, q2;
  cplx operator()(double x) const { return (q2 * x + q1) * x + q0; }
};

/// poly(x) * w(x); the closure of the wave-function family under repeated
/// generators. Coefficients are low-to-high degree.
struct PolyWave {
  std::vector<cplx> poly;
  WaveFunction w;

  cplx operator()(double x) const {
    cplx acc = 0.0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc * w(x);
  }
};

struct HermiticityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Psi(p)(x) = exp((z1 x + z2 x^2 - psi(theta))/2); unit L^2 norm.
WaveFunction psi_map(const TangentPoint& p);

/// <w1, w2> = integral of conj(w1) w2 over R.
cplx inner_product(const WaveFunction& w1, const WaveFunction& w2);

/// <p1 w1, p2 w2>, exact through complex Gaussian moments.
cplx polywave_inner(const PolyWave& a, const PolyWave& b);

/// Derivative of Psi at p in direction A (components in the (theta,
/// thetadot) frame): (1/2)(X1 x + X2 x^2 - eta1 A1 - eta2 A2) Psi(p).
PolyWave psi_pushforward(const TangentPoint& p, const Vec4& a);

/// <Psi_* A, Psi_* B> - (1/4)(g(A,B) + i omega(A,B) + S(A,B)), where g and
/// omega are the Dombrowski tensors in the natural frame and S is the
/// thetadot-block eta_i eta_j. Zero for the true pullback identity.
cplx pullback_residual(const TangentPoint& p, const Vec4& a, const Vec4& b);

/// Apply one generator (basis index 0..5 = F..R) to a PolyWave:
/// F = -x^2, G = -d^2/dx^2, H = 2i(x d/dx + 1/2), P = -i d/dx, Q = x,
/// R = -1/4.
PolyWave apply_generator(int basis_index, const PolyWave& pw);

/// Q(L) applied to a PolyWave, linear in L.
PolyWave q_apply(const AlgebraElement& l, const PolyWave& pw);

/// Q(L) w as a degree <= 2 polynomial action on w itself.
PolynomialOperatorAction q_apply(const AlgebraElement& l,
                                 const WaveFunction& w);

/// max over the grid and a small deterministic family of test wave functions
/// of |([Q(L1), Q(L2)] - 2i Q([L1, L2])) w(x)|; ~0 by the commutation rule.
double commutator_residual(const AlgebraElement& l1, const AlgebraElement& l2,
                           const Grid1D& grid);

/// <Psi(p), Q(L) Psi(p)>; real, and equal to the momentum value J^L(p).
/// Throws HermiticityError if the imaginary part exceeds 1e-12.
double expectation(const AlgebraElement& l, const TangentPoint& p);

/// The phase map kappa(p, L), linear in L, with basis values
///   F |-> 0, Q |-> 0, R |-> 1/4,
///   P |-> i((theta1 + i thetadot1)/2 + theta2 eta1),
///   H |-> -i(eta1 theta1 + 2 eta2 theta2 + 1),
///   G |-> i eta1 (thetadot1 theta2 + theta1 thetadot2)
///        + 2i eta2 theta2 thetadot2 - thetadot1^2/4 + theta2 + i thetadot2
///        + theta1^2/4 + i theta1 thetadot1 / 2.
cplx kappa(const TangentPoint& p, const AlgebraElement& l);

}  // namespace sjgeo
