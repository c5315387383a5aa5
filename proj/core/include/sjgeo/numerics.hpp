#pragma once

// Shared numeric kernels: finite differences, fixed-step RK4, the normal CDF,
// complex Gaussian integrals and quadratic sub-level sets. Everything here is
// pure and operates on plain values; the geometry lives in the other headers.

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sjgeo {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using cplx = std::complex<double>;

/// Uniform 1-D sample grid on [lo, hi] with n >= 2 points.
struct Grid1D {
  double lo;
  double hi;
  int n;

  Grid1D(double lo_, double hi_, int n_) : lo(lo_), hi(hi_), n(n_) {
    if (!(lo < hi)) throw std::invalid_argument("Grid1D: lo must be < hi");
    if (n < 2) throw std::invalid_argument("Grid1D: n must be >= 2");
  }

  double point(int i) const { return lo + (hi - lo) * i / (n - 1); }
  std::vector<double> points() const {
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = point(i);
    return xs;
  }
};

struct ToleranceConfig {
  double fd_step = 1e-5;   // gradient step; Hessians use hessian_step()
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;

  double hessian_step() const { return fd_step * 10.0; }  // 1e-4 by default

  void validate() const {
    if (fd_step <= 0 || abs_tol <= 0 || rel_tol <= 0)
      throw std::invalid_argument("ToleranceConfig: all entries must be > 0");
    if (fd_step > 1e-4)
      throw std::invalid_argument("ToleranceConfig: fd_step must be <= 1e-4");
  }
};

/// k(x) = alpha*x^2 + beta*x + gamma.
struct Polynomial2 {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  double operator()(double x) const { return (alpha * x + beta) * x + gamma; }
};

/// Closed interval with +-inf endpoints allowed.
struct Interval {
  double lo;
  double hi;
  bool contains(double x) const { return lo <= x && x <= hi; }
};

using IntervalSet = std::vector<Interval>;  // pairwise disjoint, sorted

struct EvaluationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainEscapeError : std::runtime_error {
  double escape_time;
  DomainEscapeError(const std::string& what, double t)
      : std::runtime_error(what), escape_time(t) {}
};

using ScalarField = std::function<double(const Vec&)>;
using VectorField = std::function<Vec(const Vec&)>;

/// Central-difference gradient. Throws EvaluationError on non-finite values,
/// naming the offending offset.
Vec fd_gradient(const ScalarField& f, const Vec& x, double step);

/// Central-difference Hessian, symmetrized as (H + H^T)/2.
Mat fd_hessian(const ScalarField& f, const Vec& x, double step);

/// Fourth-order (5-point) first derivative of a vector-valued map; used where
/// second-order truncation would eat the tolerance budget (metric pullbacks,
/// curvature oracles).
Mat fd_jacobian4(const std::function<Vec(const Vec&)>& f, const Vec& x,
                 double step);

struct TrajectorySample {
  double t;
  Vec x;
};

/// Classical fixed-step RK4. The final step is shortened so the last sample
/// lands exactly on t_end. If `admissible` is given and the state leaves the
/// admissible set, throws DomainEscapeError carrying the escape time.
std::vector<TrajectorySample> rk4_integrate(
    const VectorField& field, const Vec& x0, double t_end, double dt,
    const std::function<bool(const Vec&)>& admissible = nullptr);

/// Standard normal CDF, Phi(t) = erfc(-t/sqrt(2))/2. Accurate to ~1e-16.
double normal_cdf(double t);

/// Integral over R of exp(a x^2 + b x + c), Re(a) < 0 required:
/// sqrt(pi/(-a)) * exp(c - b^2/(4a)), principal square root.
cplx complex_gaussian_integral(cplx a, cplx b, cplx c);

/// Integral over R of (sum_k p[k] x^k) * exp(a x^2 + b x + c), Re(a) < 0.
/// Exact via the central-moment recursion of the complex Gaussian.
cplx gaussian_poly_integral(const std::vector<cplx>& poly, cplx a, cplx b,
                            cplx c);

/// {x : k(x) <= t} as at most two disjoint closed intervals (endpoints may be
/// +-inf). Degenerate polynomials collapse to R or the empty set.
IntervalSet quadratic_sublevel(const Polynomial2& k, double t);

}  // namespace sjgeo
