#pragma once

// Hamiltonian flows of Kahler functions on the Siegel-Jacobi space and their
// Schrodinger-equation shadows through Psi: the flow alpha(t) of X_psi(L),
// the phased wave e^{iF(t)/2} Psi(alpha(t)) with F a primitive of
// kappa(alpha(t), L), and the residual of i dpsi/dt = (1/2) Q(L) psi.

#include "sjgeo/extrinsic.hpp"

namespace sjgeo {

struct FlowSample {
  double t;
  TangentPoint p;
};

struct FlowTrajectory {
  std::vector<FlowSample> samples;
  AlgebraElement generator;
  double dt = 0.0;
  bool truncated = false;        // domain escape before t_end
  double escape_time = 0.0;      // meaningful when truncated
};

struct WaveSample {
  double t;
  WaveFunction w;      // phase already folded into c0
  double phase;        // Re F(t)
};

struct WaveTrajectory {
  std::vector<WaveSample> samples;
  AlgebraElement generator;
};

/// RK4 integration of the Hamiltonian field of psi(L) from p0. On domain
/// escape (theta2 -> 0) the trajectory is truncated and flagged instead of
/// throwing.
FlowTrajectory integrate_flow(const AlgebraElement& l, const TangentPoint& p0,
                              double t_end, double dt);

/// Wave shadow of a flow: at each sample, psi_map with the accumulated phase
/// integral F(t) of kappa folded into c0 as +iF/2. The cumulative integral
/// uses local quadratic fits (Simpson-grade accuracy at every sample).
WaveTrajectory schrodinger_evolve(const AlgebraElement& l,
                                  const FlowTrajectory& traj);

/// max over interior samples and the grid of
/// |i (psi(t+dt) - psi(t-dt))/(2 dt)(x) - (1/2)(Q(L) psi(t))(x)|.
double schrodinger_residual(const AlgebraElement& l,
                            const WaveTrajectory& wave, const Grid1D& grid);

/// |J^L(alpha(t)) - J^L(p0)| maximized over the trajectory (energy drift).
double energy_drift(const FlowTrajectory& traj);

}  // namespace sjgeo
