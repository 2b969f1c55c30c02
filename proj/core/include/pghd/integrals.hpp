#pragma once

#include "pghd/field.hpp"
#include "pghd/grid.hpp"

namespace pghd {

/// Midpoint-rule approximation of the volume integral of a*b over Omega.
double inner_l2(const ScalarField3& a, const ScalarField3& b, const Grid& g);

/// inner_l2(a, a).
double l2_norm_sq(const ScalarField3& a, const Grid& g);

/// Midpoint-rule integral of a*b over the section M.
double inner_l2_2d(const ScalarField2& a, const ScalarField2& b, const Grid& g);

/// Cumulative midpoint integral per column: out(i,j,k) = integral of f
/// from z = -h to the cell center z_k (full cells below plus half the
/// current cell). Linear in f; exact for column-constant integrands.
ScalarField3 depth_integral(const ScalarField3& f, const Grid& g);

/// Max of |f| over interior cells.
double max_abs(const ScalarField3& f);

/// Max of |f| over all velocity samples (centers, faces, interfaces).
double max_abs(const VelocityField& vel);

/// True if any interior value is NaN or Inf.
bool has_non_finite(const ScalarField3& f);

/// a += s * b (interior cells only).
void axpy_interior(ScalarField3& a, double s, const ScalarField3& b);

/// Discrete H1(M)^2 norm of a section: |t|^2_{L2(M)} + |grad t|^2_{L2(M)}
/// with centered differences (mirror ghosts at the walls, wrap if periodic).
double h1_norm_sq_2d(const ScalarField2& t, const Grid& g);

}  // namespace pghd
