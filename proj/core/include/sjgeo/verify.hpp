#pragma once

// Verification suites: every module invariant packaged as seeded, named
// checks with pinned tolerances. The CLI `verify` subcommand and the
// acceptance suite are thin layers over run_verify.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sjgeo {

struct ReportRecord {
  std::string check;
  long samples;
  double max_residual;
  double tolerance;
  bool pass;       // pass <=> max_residual <= tolerance
  uint64_t seed;
};

using TolOverrides = std::map<std::string, double>;

/// Suite names accepted by run_verify: curvature, kahler, isometry,
/// momentum, extrinsic, dynamics, all.
const std::vector<std::string>& verify_suites();

/// Runs one suite (or all). Deterministic for a fixed seed; tolerance
/// overrides are matched by check name.
std::vector<ReportRecord> run_verify(const std::string& suite, uint64_t seed,
                                     const TolOverrides& overrides = {});

bool all_pass(const std::vector<ReportRecord>& records);

/// %.17g rendering used for every float the tools emit.
std::string format_double(double v);

/// Records as a stable JSON array (schema: check, samples, max_residual,
/// tolerance, pass, seed). Byte-identical for identical inputs.
std::string records_to_json(const std::vector<ReportRecord>& records);

}  // namespace sjgeo
