#pragma once

#include <iosfwd>
#include <string>

#include "pghd/config.hpp"

namespace pghd {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;      // usage/config/CFL errors
inline constexpr int kExitNumerical = 2;  // NaN / solver breakdown
inline constexpr int kExitVerify = 3;     // verification failure

/// Time integration driven by the config; writes snapshots, diagnostics.csv
/// and a resolved config copy into the output directory.
int run_simulation(const RunConfig& cfg, std::ostream& log);

/// Structural-identity suite (symmetry, positivity, closed forms, velocity
/// structure, skew-symmetry, io round trip); prints one pass/fail line per
/// check. Optionally exports the assembled operator as coordinate triplets.
int run_verify(const RunConfig& cfg, std::ostream& log,
               const std::string& export_operator_path = "");

/// Eigenbasis computation + growth report; writes the basis under
/// <output.directory>/basis.
int run_eig(const RunConfig& cfg, int modes, std::ostream& log);

/// Manufactured-solution convergence tables (spatial + temporal).
int run_mms(const RunConfig& cfg, int levels, std::ostream& log);

/// Paired run with and without hyper-diffusion; writes the boundary-layer
/// monitor series to <output.directory>/compare.csv.
int run_compare(const RunConfig& cfg, std::ostream& log, int bl_width = 2);

/// Recomputes ball/dimension bounds for a finished run directory.
int run_diag(const std::string& dir, double C0, double C2, double C, std::ostream& log);

}  // namespace pghd
