#pragma once

// Kahler functions on the Siegel-Jacobi space, the momentum map of the
// Jacobi-group action, Hamiltonian and fundamental vector fields, the
// Poisson algebra, spectra of observables and their spectral measures.

#include "sjgeo/siegel_jacobi.hpp"

namespace sjgeo {

/// J(p) in basis coordinates; the R component is identically -1/4.
struct MomentumVector {
  Vec6 values;
};

/// An observable f = J^{Ad(g) k(x)} kept as the (g, k) pair; decompositions
/// are not canonicalized (they are not unique).
struct ObservableDecomposition {
  GroupElement g;
  Polynomial2 k;
};

/// psi(L)(p), the Kahler function of L at p. Over the basis, in the hybrid
/// coordinates (eta, thetadot):
///   F |-> -eta2                      P |-> thetadot1/2 + eta1 thetadot2
///   G |-> thetadot1^2/4 + eta2 thetadot2^2 + eta1 thetadot1 thetadot2
///          - 1/(4(eta1^2 - eta2))    Q |-> eta1
///   H |-> -eta1 thetadot1 - 2 eta2 thetadot2
///   R |-> -1/4
double kahler_value(const AlgebraElement& l, const TangentPoint& p);

MomentumVector momentum_vector(const TangentPoint& p);

/// Hamiltonian vector field of psi(L) in the (theta, thetadot) frame, from
/// the analytic differential and the omega-inverse
///   X_f = h^{ij} df/dthetadot_i d/dtheta_j - h^{ij} df/dtheta_i d/dthetadot_j,
/// which reduces to (h^-1 grad_thetadot f, -grad_eta f).
Vec4 hamiltonian_field(const AlgebraElement& l, const TangentPoint& p);

/// d/dt|0 of exp(tL) . p through the chart, finite differences. Must agree
/// with hamiltonian_field (the momentum-map property X_psi(L) = L_SJ).
Vec4 fundamental_field(const AlgebraElement& l, const TangentPoint& p,
                       double fd_step = 1e-4);

/// {psi(L1), psi(L2)}(p) = omega(X_psi(L1), X_psi(L2)); equals
/// kahler_value(bracket(L1, L2), p) since psi is a Lie algebra isomorphism.
double poisson(const AlgebraElement& l1, const AlgebraElement& l2,
               const TangentPoint& p);

/// |psi(Ad(g^-1)L)(p) - psi(L)(Phi_g(p))| (equivariance of the momentum map).
double equivariance_residual(const GroupElement& g, const AlgebraElement& l,
                             const TangentPoint& p);

/// Action of a group element on T(N) through the Siegel-Jacobi chart.
TangentPoint bundle_action(const GroupElement& g, const TangentPoint& p);

enum class SpectrumKind { HalfLineBelow, HalfLineAbove, FullLine, Point };

/// Spec(f) = Im(k), the image of the quadratic. Independent of the
/// decomposition (g plays no role).
struct SpectrumDesc {
  SpectrumKind kind;
  double endpoint;  // vertex value, or the single point; unused for FullLine

  Interval as_interval() const;
  bool contains(double x) const;
};

SpectrumDesc spectrum(const ObservableDecomposition& obs);

/// Base Gaussian of Phi_g(p): closed Borel rule mu' = (lambda/2 + mu)/a,
/// sigma' = sigma/|a| when g is in the Borel subgroup, full action through
/// the chart otherwise.
MeanPoint transformed_gaussian(const GroupElement& g, const TangentPoint& p);

/// P_{f,p}(A) for A a finite union of intervals: the law of k(X) under the
/// Gaussian X ~ (pi . Phi_{g^-1})(p), evaluated exactly through quadratic
/// sub-level sets and the normal CDF.
double spectral_measure(const ObservableDecomposition& obs,
                        const TangentPoint& p, const IntervalSet& a);

/// P(k(X) <= t) for X ~ N(mu, sigma^2); the CDF building block above.
double quadratic_cdf(const Polynomial2& k, double t, const MeanPoint& base);

}  // namespace sjgeo
