#pragma once

#include <iosfwd>
#include <vector>

#include "pghd/grid.hpp"
#include "pghd/params.hpp"
#include "pghd/stepper.hpp"

namespace pghd {

/// Manufactured solution for the periodic verification mode (beta = 0):
/// a decaying single-mode temperature with its exact diagnosed velocity and
/// the forcing that makes it an exact solution of the full anomaly equation
/// (hyper-diffusive flux, vertical diffusion, self-consistent advection).
struct MmsPoint {
    double T, v1, v2, w, F;
};
MmsPoint mms_eval(double x, double y, double z, double t, double amp,
                  const PhysParams& p, const Grid& g);

struct MmsRow {
    double resolution;  // dx or dt
    double error;       // L2 error vs the manufactured solution / reference
    double order;       // observed order vs the previous row (NaN on first)
};

/// Spatial study: levels grids (base 16x16x8, refined 2x each level),
/// Crank-Nicolson with a small fixed dt so the spatial error dominates.
std::vector<MmsRow> mms_spatial_study(const PhysParams& p, int levels, double amp,
                                      std::ostream* log = nullptr);

/// Temporal study on a fixed 32x32x16 grid: errors against a small-dt
/// reference trajectory of the same scheme (self-convergence).
std::vector<MmsRow> mms_temporal_study(const PhysParams& p, Scheme scheme, double amp,
                                       std::ostream* log = nullptr);

}  // namespace pghd
