#include "sjgeo/dynamics.hpp"

#include <cmath>

namespace sjgeo {

FlowTrajectory integrate_flow(const AlgebraElement& l, const TangentPoint& p0,
                              double t_end, double dt) {
  if (dt <= 0) throw std::invalid_argument("integrate_flow: dt must be > 0");
  auto field = [&l](const Vec4& x) -> Vec4 {
    return hamiltonian_field(l, TangentPoint::from_coords(x));
  };

  FlowTrajectory out;
  out.generator = l;
  out.dt = dt;
  Vec4 x = p0.coords();
  double t = 0.0;
  out.samples.push_back({t, p0});
  while (t < t_end) {
    const bool last = t_end - t <= dt * (1.0 + 1e-9);
    const double h = last ? t_end - t : dt;
    const double tn = last ? t_end : t + h;
    Vec4 xn;
    try {
      const Vec4 k1 = field(x);
      const Vec4 k2 = field(x + 0.5 * h * k1);
      const Vec4 k3 = field(x + 0.5 * h * k2);
      const Vec4 k4 = field(x + h * k3);
      xn = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    } catch (const std::domain_error&) {
      // an RK4 stage left the admissible half-space
      out.truncated = true;
      out.escape_time = tn;
      break;
    }
    if (!xn.allFinite() || !(xn[1] < -kThetaBoundary)) {
      out.truncated = true;
      out.escape_time = tn;
      break;
    }
    x = xn;
    t = tn;
    out.samples.push_back({t, TangentPoint::from_coords(x)});
  }
  return out;
}

namespace {

// Cumulative integral of f over non-uniform samples using the quadratic
// through three neighbouring nodes for each panel; O(h^4) per panel, so the
// phase keeps Simpson-grade accuracy at every sample.
std::vector<cplx> cumulative_quadratic(const std::vector<double>& t,
                                       const std::vector<cplx>& f) {
  const size_t n = t.size();
  std::vector<cplx> acc(n, cplx(0.0));
  if (n < 2) return acc;
  if (n == 2) {
    acc[1] = 0.5 * (t[1] - t[0]) * (f[0] + f[1]);
    return acc;
  }
  auto panel = [&](size_t i0, size_t i1, size_t i2, double a, double b) {
    // Integrate over [a,b] the Lagrange quadratic through nodes i0,i1,i2.
    // Everything is shifted to panel-local coordinates: the cubic primitive
    // evaluated at absolute times cancels catastrophically once t ~ 1.
    const double ref = a;
    const double x0 = t[i0] - ref, x1 = t[i1] - ref, x2 = t[i2] - ref;
    const double bb = b - ref;
    auto w = [&](double xa, double xb, double xc) {
      auto prim = [&](double x) {
        return x * x * x / 3.0 - 0.5 * (xb + xc) * x * x + xb * xc * x;
      };
      return (prim(bb) - prim(0.0)) / ((xa - xb) * (xa - xc));
    };
    return w(x0, x1, x2) * f[i0] + w(x1, x0, x2) * f[i1] +
           w(x2, x0, x1) * f[i2];
  };
  for (size_t i = 1; i < n; ++i) {
    const size_t lo = (i == 1) ? 0 : i - 2;
    acc[i] = acc[i - 1] + panel(lo, lo + 1, lo + 2, t[i - 1], t[i]);
  }
  return acc;
}

}  // namespace

WaveTrajectory schrodinger_evolve(const AlgebraElement& l,
                                  const FlowTrajectory& traj) {
  WaveTrajectory out;
  out.generator = l;
  const size_t n = traj.samples.size();
  std::vector<double> ts(n);
  std::vector<cplx> ks(n);
  for (size_t i = 0; i < n; ++i) {
    ts[i] = traj.samples[i].t;
    ks[i] = kappa(traj.samples[i].p, l);
  }
  const std::vector<cplx> phase = cumulative_quadratic(ts, ks);

  out.samples.reserve(n);
  const cplx i_unit(0.0, 1.0);
  for (size_t i = 0; i < n; ++i) {
    WaveFunction w = psi_map(traj.samples[i].p);
    w.c0 += 0.5 * i_unit * phase[i];
    out.samples.push_back({ts[i], w, phase[i].real()});
  }
  return out;
}

double schrodinger_residual(const AlgebraElement& l,
                            const WaveTrajectory& wave, const Grid1D& grid) {
  const auto& s = wave.samples;
  if (s.size() < 3)
    throw std::invalid_argument(
        "schrodinger_residual: need at least 3 samples");
  const std::vector<double> xs = grid.points();
  const cplx i_unit(0.0, 1.0);
  double worst = 0.0;
  for (size_t k = 1; k + 1 < s.size(); ++k) {
    // Three-node Lagrange derivative at t_k; second order for any spacing,
    // plain central difference when the samples are uniform.
    const double hm = s[k].t - s[k - 1].t;
    const double hp = s[k + 1].t - s[k].t;
    const double wm = -hp / (hm * (hm + hp));
    const double w0 = (hp - hm) / (hm * hp);
    const double wp = hm / (hp * (hm + hp));
    const PolyWave hpsi = q_apply(l, PolyWave{{cplx(1.0)}, s[k].w});
    for (double x : xs) {
      const cplx dpsi =
          wm * s[k - 1].w(x) + w0 * s[k].w(x) + wp * s[k + 1].w(x);
      const cplx res = i_unit * dpsi - 0.5 * hpsi(x);
      worst = std::max(worst, std::abs(res));
    }
  }
  return worst;
}

double energy_drift(const FlowTrajectory& traj) {
  if (traj.samples.empty()) return 0.0;
  const double j0 = kahler_value(traj.generator, traj.samples.front().p);
  double worst = 0.0;
  for (const auto& s : traj.samples)
    worst = std::max(worst, std::abs(kahler_value(traj.generator, s.p) - j0));
  return worst;
}

}  // namespace sjgeo
