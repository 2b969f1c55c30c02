#pragma once

#include "pghd/field.hpp"
#include "pghd/grid.hpp"

namespace pghd {

/// Transport tendency -[div(v T) + d/dz(w T)] in centered flux form with
/// zero advective flux through every wall face. Equals -(v.grad T + w T_z)
/// up to the (exactly zero) discrete divergence of the face velocities; the
/// centered flux form makes the quadratic energy contribution vanish to
/// rounding for every incompressible vel (the discrete energy neutrality the
/// whole scheme rests on). Requires T ghosts and an exactly incompressible
/// vel; throws if the incompressibility residual exceeds 1e-10 * scale.
ScalarField3 advect_tendency(const ScalarField3& T, const VelocityField& vel,
                             const Grid& g);

/// inner_l2(-advect_tendency(T, vel), T); vanishes to rounding.
double advection_energy(const ScalarField3& T, const VelocityField& vel, const Grid& g);

/// Plain integral of the advective term over Omega (telescopes to the zero
/// boundary fluxes).
double advection_integral(const ScalarField3& T, const VelocityField& vel, const Grid& g);

}  // namespace pghd
