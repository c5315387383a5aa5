// Acceptance suite: walks the numbered claims the library is accountable
// for, one pass/fail line each, nonzero exit on any failure. Tolerances are
// pinned here and in the verify suites; nothing is calibrated at runtime.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sjgeo/dynamics.hpp"
#include "sjgeo/verify.hpp"

using namespace sjgeo;
using Clock = std::chrono::steady_clock;

namespace {

constexpr uint64_t kSeed = 20240501;

int g_failures = 0;

void report(int criterion, bool pass, const std::string& what) {
  std::printf("criterion %2d: %s  %s\n", criterion, pass ? "PASS" : "FAIL",
              what.c_str());
  if (!pass) ++g_failures;
}

struct Records {
  std::map<std::string, ReportRecord> by_name;

  void absorb(const std::vector<ReportRecord>& rs) {
    for (const auto& r : rs) by_name[r.check] = r;
  }
  const ReportRecord& at(const std::string& name) const {
    auto it = by_name.find(name);
    if (it == by_name.end())
      throw std::logic_error("missing verify record: " + name);
    return it->second;
  }
  bool pass(std::initializer_list<const char*> names, double* worst = nullptr,
            long* samples = nullptr) const {
    bool ok = true;
    for (const char* n : names) {
      const ReportRecord& r = at(n);
      ok = ok && r.pass;
      if (worst) *worst = std::max(*worst, r.max_residual / r.tolerance);
      if (samples) *samples += r.samples;
    }
    return ok;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string residual_note(const Records& recs,
                          std::initializer_list<const char*> names) {
  double worst = 0.0;
  std::string worst_name;
  for (const char* n : names) {
    const ReportRecord& r = recs.at(n);
    const double ratio = r.tolerance > 0 ? r.max_residual / r.tolerance
                                         : (r.max_residual > 0 ? 2.0 : 0.0);
    if (ratio >= worst) {
      worst = ratio;
      worst_name = n;
    }
  }
  const ReportRecord& r = recs.at(worst_name.c_str());
  char buf[160];
  std::snprintf(buf, sizeof(buf), "worst %s: residual %.3g vs tol %.3g",
                worst_name.c_str(), r.max_residual, r.tolerance);
  return buf;
}

}  // namespace

int main() {
  Records recs;

  // --- criterion 1: scalar curvature == -6, analytic and FD oracle, < 1 s
  {
    const auto t0 = Clock::now();
    recs.absorb(run_verify("curvature", kSeed));
    const double dt = seconds_since(t0);
    const bool ok = recs.pass({"scalar_curvature_constant",
                               "scalar_curvature_fd_oracle",
                               "ricci_levi_civita_oracle"}) &&
                    dt < 1.0;
    char note[200];
    std::snprintf(note, sizeof(note),
                  "scalar curvature -6 at 1000 pts (analytic 1e-10, fd 1e-3), "
                  "%.3fs; %s",
                  dt,
                  residual_note(recs, {"scalar_curvature_constant",
                                       "scalar_curvature_fd_oracle"})
                      .c_str());
    report(1, ok, note);
  }

  // --- criterion 2: base sectional curvature == -1/2, tol 1e-4, < 1 s
  {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(kSeed);
    auto uniform = [&rng](double a, double b) {
      return a + (b - a) * ((rng() >> 11) + 0.5) * 0x1p-53;
    };
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const NaturalPoint th(uniform(-1.5, 1.5), uniform(-2.5, -0.3));
      worst = std::max(worst, std::abs(base_sectional_curvature(th) + 0.5));
    }
    const double dt = seconds_since(t0);
    const bool ok = worst < 1e-4 && dt < 1.0 &&
                    recs.at("sectional_curvature_constant").pass;
    char note[160];
    std::snprintf(note, sizeof(note),
                  "sectional curvature -1/2 at 100 theta, residual %.3g vs "
                  "1e-4, %.3fs",
                  worst, dt);
    report(2, ok, note);
  }

  // --- criterion 3: Kahler axioms
  {
    recs.absorb(run_verify("kahler", kSeed));
    const bool ok =
        recs.pass({"J_squared_identity", "metric_J_invariance",
                   "omega_compatibility", "domega_cyclic_sum"});
    report(3, ok,
           "J^2 = -I, g(J.,J.) = g, omega = g(J.,.) exact; d omega = 0 at "
           "500 pts; " +
               residual_note(recs, {"domega_cyclic_sum"}));
  }

  // --- criterion 4: isometry-group witness
  {
    recs.absorb(run_verify("isometry", kSeed));
    const bool ok = recs.pass({"asp_isometry_pullback",
                               "antiholomorphic_isometry_pullback",
                               "non_isometry_counterexample"});
    report(4, ok,
           "200 ASp + 50 det(-1) pullbacks < 1e-6, counterexample > 0.1; " +
               residual_note(recs, {"asp_isometry_pullback",
                                    "antiholomorphic_isometry_pullback"}));
  }

  // --- criterion 5: eikonal-system solution families
  {
    const bool ok = recs.pass({"eikonal_family_linear",
                               "eikonal_family_mobius",
                               "eikonal_counterexample"});
    report(5, ok,
           "both solution families < 1e-5 on a 20x20 grid in {x<0}; " +
               residual_note(recs, {"eikonal_family_linear",
                                    "eikonal_family_mobius"}));
  }

  // --- criterion 6: momentum-map suite
  {
    recs.absorb(run_verify("momentum", kSeed));
    const bool ok = recs.pass(
        {"hamiltonian_equals_fundamental", "poisson_structure_constants",
         "momentum_equivariance", "momentum_separates_points"});
    report(6, ok,
           "X_psi(L) = L_SJ (1e-5), Poisson constants (1e-9), equivariance "
           "(1e-9, 500), separation (1000 pairs); " +
               residual_note(recs, {"hamiltonian_equals_fundamental",
                                    "poisson_structure_constants",
                                    "momentum_equivariance"}));
  }

  // --- criterion 7: the six psi(L) solve the Kahler-function PDE
  {
    const bool ok = recs.pass({"kahler_fn_psi_basis"});
    report(7, ok,
           "all six psi(L) pass the Kahler PDE residual < 1e-5; " +
               residual_note(recs, {"kahler_fn_psi_basis"}));
  }

  // --- criterion 8: extrinsic suite
  {
    recs.absorb(run_verify("extrinsic", kSeed));
    const bool ok = recs.pass(
        {"psi_normalization", "pullback_identity",
         "expectation_identity", "expectation_hermiticity",
         "commutator_table"});
    report(8, ok,
           "<Psi,Psi> = 1 (1e-12), quarter pullback (1e-9, 200), expectation "
           "= J^L (1e-10), 15 commutators (1e-9); " +
               residual_note(
                   recs, {"psi_normalization", "pullback_identity",
                          "expectation_identity", "commutator_table"}));
  }

  // --- criterion 9: Schrodinger shadows
  {
    recs.absorb(run_verify("dynamics", kSeed));
    const bool ok = recs.pass(
        {"schrodinger_residual_F", "schrodinger_residual_Q",
         "schrodinger_residual_R", "schrodinger_residual_H",
         "schrodinger_residual_G-F", "schrodinger_dt_convergence"});
    char note[200];
    std::snprintf(note, sizeof(note),
                  "residuals < 1e-4 for F,Q,R,H,G-F (dt=1e-3, grid [-6,6]); "
                  "halving dt ratio %.3g vs 1/3",
                  recs.at("schrodinger_dt_convergence").max_residual);
    report(9, ok, note);
  }

  // --- criterion 10: spectral measures
  {
    const bool ok = recs.pass(
        {"spectral_measure_vs_monte_carlo", "spectral_measure_total_mass",
         "spectrum_example_table", "spectral_measure_examples"});
    char note[200];
    std::snprintf(note, sizeof(note),
                  "exact CDF vs 1e5-sample MC within 3 SE (worst %.2f SE), "
                  "total mass 1e-10, Spec table matches",
                  3.0 * recs.at("spectral_measure_vs_monte_carlo").max_residual);
    report(10, ok, note);
  }

  // --- criterion 11: the whole battery, timed
  {
    const auto t0 = Clock::now();
    const std::vector<ReportRecord> all = run_verify("all", kSeed);
    const double dt = seconds_since(t0);
    long failed = 0;
    for (const auto& r : all)
      if (!r.pass) ++failed;
    const bool ok = failed == 0 && dt < 60.0;
    char note[160];
    std::snprintf(note, sizeof(note),
                  "verify --suite all: %zu checks, %ld failed, %.2fs (< 60s)",
                  all.size(), failed, dt);
    report(11, ok, note);
  }

  if (g_failures) {
    std::printf("ACCEPTANCE: %d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("ACCEPTANCE: all 11 criteria PASS\n");
  return 0;
}
