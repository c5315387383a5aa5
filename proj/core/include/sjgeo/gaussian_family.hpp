#pragma once

// The statistical manifold N of Gaussian densities over R as an exponential
// family, in its three standard parameterizations, with the Fisher metric,
// Christoffel symbols, alpha-connections and moments. Natural coordinates
// (theta1, theta2), theta2 < 0, are the canonical internal chart; everything
// else converts on demand.

#include <array>
#include <functional>

#include "sjgeo/numerics.hpp"

namespace sjgeo {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

// Boundary guard: theta2 >= -kThetaBoundary is rejected to keep curvature
// formulas away from the sigma -> inf blowup.
inline constexpr double kThetaBoundary = 1e-12;

struct MeanPoint {
  double mu;
  double sigma;
  MeanPoint(double mu_, double sigma_) : mu(mu_), sigma(sigma_) {
    if (!(sigma > 0.0)) throw std::domain_error("MeanPoint: sigma must be > 0");
  }
};

struct NaturalPoint {
  double theta1;
  double theta2;
  NaturalPoint(double t1, double t2) : theta1(t1), theta2(t2) {
    if (!(theta2 < -kThetaBoundary))
      throw std::domain_error("NaturalPoint: theta2 must be < 0");
  }
};

struct ExpectationPoint {
  double eta1;
  double eta2;
  ExpectationPoint(double e1, double e2) : eta1(e1), eta2(e2) {
    if (!(eta2 > eta1 * eta1))
      throw std::domain_error("ExpectationPoint: eta2 must exceed eta1^2");
  }
};

/// Generic exponential-family data C, F_i, psi. Only the Gaussian family
/// ships; the struct exists so tests can phrase oracles against the generic
/// density form exp{C(x) + sum_i theta_i F_i(x) - psi(theta)}.
struct FamilySpec {
  std::function<double(double)> C;
  std::vector<std::function<double(double)>> F;
  std::function<double(const Vec2&)> psi;
};

FamilySpec gaussian_family_spec();

// Chart conversions. Round trips are exact to ~1e-15.
NaturalPoint to_natural(const MeanPoint& p);
NaturalPoint to_natural(const ExpectationPoint& p);
MeanPoint to_mean(const NaturalPoint& p);
MeanPoint to_mean(const ExpectationPoint& p);
ExpectationPoint to_expectation(const NaturalPoint& p);
ExpectationPoint to_expectation(const MeanPoint& p);

/// psi(theta) = -theta1^2/(4 theta2) + (1/2) ln(-pi/theta2).
double potential(const NaturalPoint& p);

/// Gradient of the potential; equals the expectation parameters.
Vec2 potential_gradient(const NaturalPoint& p);

/// p(x; theta) = exp{theta1 x + theta2 x^2 - psi(theta)}.
double density(const NaturalPoint& p, double x);

/// Fisher metric in natural coordinates,
/// h_F = 1/(2 theta2^2) [[-theta2, theta1], [theta1, (theta2-theta1^2)/theta2]].
Mat2 fisher_metric(const NaturalPoint& p);

/// Closed-form inverse of the Fisher metric,
/// [[2(theta1^2-theta2), 2 theta1 theta2], [2 theta1 theta2, 2 theta2^2]].
Mat2 fisher_metric_inverse(const NaturalPoint& p);

/// Levi-Civita Christoffel symbols of h_F in natural coordinates; index
/// order gamma[k](i,j) for Gamma^k_ij. Symmetric in (i,j).
std::array<Mat2, 2> christoffels(const NaturalPoint& p);

/// Lowered alpha-connection symbols Gamma^(alpha)_{ij,k}. In natural
/// coordinates these are ((1-alpha)/2) d_i d_j d_k psi, so alpha = 1 gives
/// identically zero and alpha = -1 the mixture connection.
/// Index order: result[k](i,j).
std::array<Mat2, 2> alpha_christoffels(const NaturalPoint& p, double alpha);

/// Third-derivative tensor of the potential, d_i d_j d_k psi; result[k](i,j).
std::array<Mat2, 2> potential_third_derivative(const NaturalPoint& p);

/// E[x^k] for k in 1..4, through eta and Fisher components.
double moment(const NaturalPoint& p, int k);

/// Sectional curvature of (N, h_F); constant -1/2. Assembled from the
/// Christoffel symbols with finite-difference derivatives, not hard-coded.
double base_sectional_curvature(const NaturalPoint& p,
                                const ToleranceConfig& tol = {});

}  // namespace sjgeo
