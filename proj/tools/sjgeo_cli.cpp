// Command-line surface: verification suites, flow integration with CSV
// export, and spectral measures of observables. All floats are emitted with
// 17 significant digits; all randomness flows from --seed (default 12345).

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>

#include "sjgeo/dynamics.hpp"
#include "sjgeo/lspec.hpp"
#include "sjgeo/verify.hpp"

namespace {

using namespace sjgeo;

std::vector<double> parse_floats(const std::string& s, size_t expect,
                                 const std::string& what) {
  std::vector<double> out;
  size_t i = 0;
  while (i <= s.size()) {
    size_t j = s.find(',', i);
    if (j == std::string::npos) j = s.size();
    try {
      out.push_back(std::stod(s.substr(i, j - i)));
    } catch (const std::exception&) {
      throw CLI::ValidationError(what + ": malformed float in '" + s + "'");
    }
    i = j + 1;
    if (j == s.size()) break;
  }
  if (out.size() != expect)
    throw CLI::ValidationError(what + ": expected " + std::to_string(expect) +
                               " comma-separated floats");
  return out;
}

double parse_endpoint(const std::string& tok) {
  if (tok == "inf" || tok == "+inf")
    return std::numeric_limits<double>::infinity();
  if (tok == "-inf") return -std::numeric_limits<double>::infinity();
  return std::stod(tok);
}

Interval parse_interval(const std::string& s) {
  const size_t sep = s.find(':');
  if (sep == std::string::npos)
    throw CLI::ValidationError("interval must look like 'lo:hi', got '" + s +
                               "'");
  try {
    const double lo = parse_endpoint(s.substr(0, sep));
    const double hi = parse_endpoint(s.substr(sep + 1));
    if (!(lo <= hi))
      throw CLI::ValidationError("interval '" + s + "' has lo > hi");
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("malformed interval '" + s + "'");
  }
}

std::string json_number(double v) { return format_double(v); }

std::string spectrum_kind_name(SpectrumKind k) {
  switch (k) {
    case SpectrumKind::HalfLineBelow: return "half_line_below";
    case SpectrumKind::HalfLineAbove: return "half_line_above";
    case SpectrumKind::FullLine: return "full_line";
    case SpectrumKind::Point: return "point";
  }
  return "?";
}

std::string endpoint_json(double v) {
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  return json_number(v);
}

int run_verify_cmd(const std::string& suite, uint64_t seed,
                   const std::vector<std::string>& tol_args) {
  TolOverrides overrides;
  for (const auto& t : tol_args) {
    const size_t eq = t.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: --tol expects CHECK=VALUE, got '" << t << "'\n";
      return 2;
    }
    overrides[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
  }
  std::vector<ReportRecord> records;
  try {
    records = run_verify(suite, seed, overrides);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cout << records_to_json(records);
  return all_pass(records) ? 0 : 1;
}

int run_flow_cmd(const std::string& lspec, const std::string& p0_str,
                 double t_end, double dt, const std::string& out_path,
                 const std::string& grid_str) {
  AlgebraElement l;
  try {
    l = parse_generator(lspec);
  } catch (const LSpecError& e) {
    std::cerr << "error: L-spec parse failure at position " << e.position
              << ": " << e.what() << "\n";
    return 2;
  }
  const auto p0v = parse_floats(p0_str, 4, "--p0");
  const auto gv = parse_floats(grid_str, 3, "--grid");

  TangentPoint p0(0.0, -0.5, 0.0, 0.0);
  try {
    p0 = TangentPoint(p0v[0], p0v[1], p0v[2], p0v[3]);
  } catch (const std::domain_error& e) {
    std::cerr << "error: --p0: " << e.what() << "\n";
    return 2;
  }

  const FlowTrajectory traj = integrate_flow(l, p0, t_end, dt);
  const WaveTrajectory wave = schrodinger_evolve(l, traj);

  std::ofstream csv(out_path);
  if (!csv) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return 2;
  }
  csv << "t,theta1,theta2,thetadot1,thetadot2,JL,phase\n";
  for (size_t i = 0; i < traj.samples.size(); ++i) {
    const auto& s = traj.samples[i];
    csv << format_double(s.t) << ',' << format_double(s.p.theta.theta1) << ','
        << format_double(s.p.theta.theta2) << ','
        << format_double(s.p.thetadot[0]) << ','
        << format_double(s.p.thetadot[1]) << ','
        << format_double(kahler_value(l, s.p)) << ','
        << format_double(wave.samples[i].phase) << '\n';
  }
  csv.close();

  double sres = 0.0;
  if (wave.samples.size() >= 3) {
    const Grid1D grid(gv[0], gv[1], static_cast<int>(gv[2]));
    sres = schrodinger_residual(l, wave, grid);
  }

  std::cout << "{\"L\": \"" << format_generator(l) << "\"";
  std::cout << ", \"p0\": [" << json_number(p0v[0]) << ", "
            << json_number(p0v[1]) << ", " << json_number(p0v[2]) << ", "
            << json_number(p0v[3]) << "]";
  std::cout << ", \"t_end\": " << json_number(t_end);
  std::cout << ", \"dt\": " << json_number(dt);
  std::cout << ", \"samples\": " << traj.samples.size();
  std::cout << ", \"energy_drift\": " << json_number(energy_drift(traj));
  std::cout << ", \"schrodinger_residual\": " << json_number(sres);
  std::cout << ", \"truncated\": " << (traj.truncated ? "true" : "false");
  if (traj.truncated)
    std::cout << ", \"escape_time\": " << json_number(traj.escape_time);
  std::cout << ", \"out\": \"" << out_path << "\"}\n";
  return traj.truncated ? 1 : 0;
}

int run_spectrum_cmd(const std::string& k_str, const std::string& g_str,
                     const std::string& p0_str,
                     const std::vector<std::string>& interval_args) {
  const auto kv = parse_floats(k_str, 3, "--k");
  const auto gv = parse_floats(g_str, 7, "--g");
  const auto p0v = parse_floats(p0_str, 4, "--p0");

  const Polynomial2 k{kv[0], kv[1], kv[2]};
  Mat2 m;
  m << gv[0], gv[1], gv[2], gv[3];
  GroupElement g = GroupElement::identity();
  try {
    g = GroupElement(m, RowVec2(gv[4], gv[5]), gv[6]);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: --g: " << e.what() << "\n";
    return 2;
  }
  TangentPoint p0(0.0, -0.5, 0.0, 0.0);
  try {
    p0 = TangentPoint(p0v[0], p0v[1], p0v[2], p0v[3]);
  } catch (const std::domain_error& e) {
    std::cerr << "error: --p0: " << e.what() << "\n";
    return 2;
  }

  const ObservableDecomposition obs{g, k};
  const SpectrumDesc spec = spectrum(obs);
  const Interval spec_iv = spec.as_interval();

  std::vector<Interval> intervals;
  for (const auto& s : interval_args) intervals.push_back(parse_interval(s));
  if (intervals.empty()) intervals.push_back(spec_iv);

  std::cout << "{\"spectrum\": {\"kind\": \"" << spectrum_kind_name(spec.kind)
            << "\", \"endpoints\": [" << endpoint_json(spec_iv.lo) << ", "
            << endpoint_json(spec_iv.hi) << "]}";
  std::cout << ", \"measures\": [";
  for (size_t i = 0; i < intervals.size(); ++i) {
    Interval iv = intervals[i];
    const bool outside = iv.hi < spec_iv.lo || iv.lo > spec_iv.hi;
    const bool clipped = iv.lo < spec_iv.lo || iv.hi > spec_iv.hi;
    Interval eff{std::max(iv.lo, spec_iv.lo), std::min(iv.hi, spec_iv.hi)};
    double prob = 0.0;
    if (!outside) prob = spectral_measure(obs, p0, {eff});
    std::cout << (i ? ", " : "") << "{\"interval\": ["
              << endpoint_json(iv.lo) << ", " << endpoint_json(iv.hi)
              << "], \"probability\": " << json_number(prob);
    if (outside)
      std::cout << ", \"warning\": \"interval outside spectrum\"";
    else if (clipped)
      std::cout << ", \"warning\": \"interval clipped to spectrum\"";
    std::cout << "}";
  }
  std::cout << "]}\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kahler geometry of the Gaussian tangent bundle"};
  app.require_subcommand(1);

  // verify
  std::string suite = "all";
  uint64_t seed = 12345;
  std::vector<std::string> tol_args;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite,
                     "curvature|kahler|isometry|momentum|extrinsic|dynamics|all");
  verify->add_option("--seed", seed, "RNG seed (default 12345)");
  verify->add_option("--tol", tol_args,
                     "tolerance override CHECK=VALUE (repeatable)");

  // flow
  std::string lspec, p0_str = "0,-0.5,0,0", out_path = "flow.csv";
  std::string grid_str = "-6,6,100";
  double t_end = 1.0, dt = 1e-3;
  auto* flow = app.add_subcommand("flow", "integrate a Hamiltonian flow");
  flow->add_option("--L", lspec, "generator, e.g. \"F\" or \"G-1*F\"")
      ->required();
  flow->add_option("--p0", p0_str, "theta1,theta2,thetadot1,thetadot2");
  flow->add_option("--t", t_end, "integration time (default 1.0)");
  flow->add_option("--dt", dt, "RK4 step (default 1e-3)");
  flow->add_option("--out", out_path, "CSV output path (default flow.csv)");
  flow->add_option("--grid", grid_str,
                   "Schrodinger-residual grid lo,hi,n (default -6,6,100)");

  // spectrum
  std::string k_str, g_str = "1,0,0,1,0,0,0";
  std::vector<std::string> interval_args;
  auto* spec = app.add_subcommand("spectrum",
                                  "spectrum and spectral measures of an observable");
  spec->add_option("--k", k_str, "polynomial alpha,beta,gamma")->required();
  spec->add_option("--g", g_str, "group element a,b,c,d,lambda,mu,kappa");
  spec->add_option("--p0", p0_str, "state theta1,theta2,thetadot1,thetadot2");
  spec->add_option("--interval", interval_args,
                   "interval lo:hi, endpoints may be +-inf (repeatable)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return run_verify_cmd(suite, seed, tol_args);
    if (flow->parsed())
      return run_flow_cmd(lspec, p0_str, t_end, dt, out_path, grid_str);
    if (spec->parsed())
      return run_spectrum_cmd(k_str, g_str, p0_str, interval_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
