#pragma once

#include "pghd/field.hpp"
#include "pghd/grid.hpp"
#include "pghd/params.hpp"

namespace pghd {

/// Diagnostic reconstruction of (v1, v2, w) from the temperature anomaly and
/// the surface profile:
///   v = int_{-h}^z gamma (eps T~_x + f T~_y, -f T~_x + eps T~_y) dxi
///       + (z + h/2) gamma (eps T*_x + f T*_y, -f T*_x + eps T*_y)
///       - column depth mean of the first integral,
/// so the depth mean of v vanishes per column to rounding. Face velocities
/// average the cell-centered v with zero wall-normal components (periodic
/// wrap in test mode), and w accumulates -div_face(v) from the bottom, which
/// makes the discrete incompressibility identity exact and w(0) a rounding
/// zero. Requires ghost fills on both inputs.
VelocityField diagnose_velocity(const ScalarField3& Ttilde, const ScalarField2& Tstar,
                                const PhysParams& p, const Grid& g);

/// Horizontal face divergence per cell: [dU/dx + dV/dy].
ScalarField3 face_divergence(const VelocityField& vel, const Grid& g);

/// Rebuilds w by column accumulation of -div_face(v) from w(-h) = 0
/// (the construction diagnose_velocity uses).
void accumulate_w(VelocityField& vel, const Grid& g);

/// max |div_face(v) + delta_z w| over cells.
double incompressibility_residual(const VelocityField& vel, const Grid& g);

/// p with dp/dz = -(T~ + T*) and zero column mean (barotropic gauge p̄ = 0).
ScalarField3 reconstruct_pressure(const ScalarField3& Ttilde, const ScalarField2& Tstar,
                                  const PhysParams& p, const Grid& g);

}  // namespace pghd
