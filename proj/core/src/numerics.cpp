#include "sjgeo/numerics.hpp"

#include <cmath>
#include <limits>

namespace sjgeo {

namespace {

double eval_checked(const ScalarField& f, const Vec& x, const Vec& offset) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    std::string where = "(";
    for (int i = 0; i < offset.size(); ++i)
      where += (i ? "," : "") + std::to_string(offset[i]);
    where += ")";
    throw EvaluationError("finite_difference: non-finite value at offset " +
                          where);
  }
  return v;
}

}  // namespace

Vec fd_gradient(const ScalarField& f, const Vec& x, double step) {
  if (step <= 0) throw std::invalid_argument("fd_gradient: step must be > 0");
  const int n = static_cast<int>(x.size());
  Vec g(n);
  Vec e = Vec::Zero(n);
  for (int i = 0; i < n; ++i) {
    e[i] = step;
    const double fp = eval_checked(f, x + e, e);
    const double fm = eval_checked(f, x - e, -e);
    g[i] = (fp - fm) / (2.0 * step);
    e[i] = 0.0;
  }
  return g;
}

Mat fd_hessian(const ScalarField& f, const Vec& x, double step) {
  if (step <= 0) throw std::invalid_argument("fd_hessian: step must be > 0");
  const int n = static_cast<int>(x.size());
  Mat h(n, n);
  const double f0 = eval_checked(f, x, Vec::Zero(n));
  Vec ei = Vec::Zero(n), ej = Vec::Zero(n);
  for (int i = 0; i < n; ++i) {
    ei[i] = step;
    h(i, i) = (eval_checked(f, x + ei, ei) - 2.0 * f0 +
               eval_checked(f, x - ei, -ei)) /
              (step * step);
    for (int j = i + 1; j < n; ++j) {
      ej[j] = step;
      const double fpp = eval_checked(f, x + ei + ej, ei + ej);
      const double fpm = eval_checked(f, x + ei - ej, ei - ej);
      const double fmp = eval_checked(f, x - ei + ej, ej - ei);
      const double fmm = eval_checked(f, x - ei - ej, -ei - ej);
      h(i, j) = h(j, i) = (fpp - fpm - fmp + fmm) / (4.0 * step * step);
      ej[j] = 0.0;
    }
    ei[i] = 0.0;
  }
  return 0.5 * (h + h.transpose());
}

Mat fd_jacobian4(const std::function<Vec(const Vec&)>& f, const Vec& x,
                 double step) {
  if (step <= 0) throw std::invalid_argument("fd_jacobian4: step must be > 0");
  const int n = static_cast<int>(x.size());
  const Vec f0 = f(x);
  const int m = static_cast<int>(f0.size());
  Mat jac(m, n);
  Vec e = Vec::Zero(n);
  for (int i = 0; i < n; ++i) {
    e[i] = step;
    const Vec f2p = f(x + 2.0 * e);
    const Vec f1p = f(x + e);
    const Vec f1m = f(x - e);
    const Vec f2m = f(x - 2.0 * e);
    jac.col(i) = (-f2p + 8.0 * f1p - 8.0 * f1m + f2m) / (12.0 * step);
    e[i] = 0.0;
  }
  return jac;
}

std::vector<TrajectorySample> rk4_integrate(
    const VectorField& field, const Vec& x0, double t_end, double dt,
    const std::function<bool(const Vec&)>& admissible) {
  if (dt <= 0) throw std::invalid_argument("rk4_integrate: dt must be > 0");
  if (t_end < 0) throw std::invalid_argument("rk4_integrate: t_end must be >= 0");

  auto check = [&](const Vec& x, double t) {
    if (!x.allFinite())
      throw EvaluationError("rk4_integrate: non-finite state at t=" +
                            std::to_string(t));
    if (admissible && !admissible(x))
      throw DomainEscapeError(
          "rk4_integrate: state left admissible domain at t=" +
              std::to_string(t),
          t);
  };

  std::vector<TrajectorySample> out;
  Vec x = x0;
  double t = 0.0;
  check(x, t);
  out.push_back({t, x});
  while (t < t_end) {
    // Stretch the last step onto t_end when the remainder is within one step;
    // float accumulation must never leave a sliver-sized final step.
    const bool last = t_end - t <= dt * (1.0 + 1e-9);
    const double h = last ? t_end - t : dt;
    const Vec k1 = field(x);
    const Vec k2 = field(x + 0.5 * h * k1);
    const Vec k3 = field(x + 0.5 * h * k2);
    const Vec k4 = field(x + h * k3);
    x = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t = last ? t_end : t + h;
    check(x, t);
    out.push_back({t, x});
  }
  return out;
}

double normal_cdf(double t) { return 0.5 * std::erfc(-t / std::sqrt(2.0)); }

cplx complex_gaussian_integral(cplx a, cplx b, cplx c) {
  if (!(a.real() < 0.0))
    throw DivergenceError("complex_gaussian_integral: Re(a) must be < 0");
  return std::sqrt(M_PI / (-a)) * std::exp(c - b * b / (4.0 * a));
}

cplx gaussian_poly_integral(const std::vector<cplx>& poly, cplx a, cplx b,
                            cplx c) {
  if (!(a.real() < 0.0))
    throw DivergenceError("gaussian_poly_integral: Re(a) must be < 0");
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 0) return 0.0;

  // Complete the square: x = y + m with m = -b/(2a). Central moments of
  // exp(a y^2) obey M(k) = -(k-1)/(2a) M(k-2), M(0) = sqrt(pi/(-a)), M(1)=0;
  // the affine shift is carried by binomial expansion.
  const cplx m = -b / (2.0 * a);
  const cplx front = std::exp(c - b * b / (4.0 * a));
  std::vector<cplx> central(deg + 1);
  central[0] = std::sqrt(M_PI / (-a));
  if (deg >= 1) central[1] = 0.0;
  for (int k = 2; k <= deg; ++k)
    central[k] = -static_cast<double>(k - 1) / (2.0 * a) * central[k - 2];

  cplx total = 0.0;
  for (int k = 0; k <= deg; ++k) {
    if (poly[k] == cplx(0.0)) continue;
    // x^k = sum_j binom(k,j) m^(k-j) y^j
    cplx xk = 0.0;
    double binom = 1.0;
    cplx mpow = 1.0;  // m^(k-j) built from j=k downward
    for (int j = k; j >= 0; --j) {
      xk += binom * mpow * central[j];
      binom *= static_cast<double>(j) / static_cast<double>(k - j + 1);
      mpow *= m;
    }
    total += poly[k] * xk;
  }
  return front * total;
}

IntervalSet quadratic_sublevel(const Polynomial2& k, double t) {
  const double inf = std::numeric_limits<double>::infinity();
  const double alpha = k.alpha, beta = k.beta, gamma = k.gamma;

  if (alpha == 0.0) {
    if (beta == 0.0) {
      if (gamma <= t) return {{-inf, inf}};
      return {};
    }
    const double r = (t - gamma) / beta;
    if (beta > 0.0) return {{-inf, r}};
    return {{r, inf}};
  }

  // alpha != 0: roots of alpha x^2 + beta x + (gamma - t) = 0.
  const double disc = beta * beta - 4.0 * alpha * (gamma - t);
  if (alpha > 0.0) {
    if (disc < 0.0) return {};
    const double s = std::sqrt(disc);
    return {{(-beta - s) / (2.0 * alpha), (-beta + s) / (2.0 * alpha)}};
  }
  // alpha < 0: sublevel set is the complement of the open interval between
  // the roots (when they exist).
  if (disc <= 0.0) return {{-inf, inf}};
  const double s = std::sqrt(disc);
  const double r1 = (-beta + s) / (2.0 * alpha);  // smaller (alpha < 0)
  const double r2 = (-beta - s) / (2.0 * alpha);
  return {{-inf, r1}, {r2, inf}};
}

}  // namespace sjgeo
