#pragma once

#include <Eigen/Sparse>
#include <cstdint>
#include <iosfwd>

#include "pghd/boundary.hpp"
#include "pghd/field.hpp"
#include "pghd/grid.hpp"
#include "pghd/params.hpp"

namespace pghd {

/// The 2x2 rotation-like matrix H(y) = [[1, -f/eps], [f/eps, 1]] entering the
/// hyper-diffusive flux. Satisfies H H^T = (1 + f^2/eps^2) I pointwise.
struct HMatrix {
    PhysParams params;

    double a11(double) const { return 1.0; }
    double a12(double y) const { return -params.coriolis(y) / params.epsilon; }
    double a21(double y) const { return params.coriolis(y) / params.epsilon; }
    double a22(double) const { return 1.0; }
    /// The factor in H(y) H(y)^T = factor * Identity.
    double identity_factor(double y) const {
        const double foe = params.coriolis(y) / params.epsilon;
        return 1.0 + foe * foe;
    }
};

/// s = div(H^T grad T) at interior cell centers. Requires the first lateral
/// ghost layer. Equals Lap(T) - (beta/eps) T_x in the continuum.
ScalarField3 elliptic_core(const ScalarField3& T, const PhysParams& p, const Grid& g);

/// Section version (z-independent fields).
ScalarField2 elliptic_core_2d(const ScalarField2& t, const PhysParams& p, const Grid& g);

/// Horizontal flux components at cell faces.
struct HorizontalFlux {
    int nx = 0, ny = 0, nz = 0;
    std::vector<double> qx;  // (nx+1, ny, nz)
    std::vector<double> qy;  // (nx, ny+1, nz)
    double& x(int i, int j, int k) {
        return qx[static_cast<std::size_t>(i) + (nx + 1) *
                  (static_cast<std::size_t>(j) + static_cast<std::size_t>(ny) * k)];
    }
    double x(int i, int j, int k) const {
        return qx[static_cast<std::size_t>(i) + (nx + 1) *
                  (static_cast<std::size_t>(j) + static_cast<std::size_t>(ny) * k)];
    }
    double& y(int i, int j, int k) {
        return qy[static_cast<std::size_t>(i) + nx *
                  (static_cast<std::size_t>(j) + static_cast<std::size_t>(ny + 1) * k)];
    }
    double y(int i, int j, int k) const {
        return qy[static_cast<std::size_t>(i) + nx *
                  (static_cast<std::size_t>(j) + static_cast<std::size_t>(ny + 1) * k)];
    }
};

/// q(T) = lambda H grad(div(H^T grad T)) - K_h grad T + mu grad(T_zz) at
/// horizontal faces. Wall-normal components are identically zero in physical
/// mode (the flux condition is imposed at the face). Requires a full ghost
/// fill (both layers).
HorizontalFlux flux_q(const ScalarField3& T, const PhysParams& p, const Grid& g);

/// div(flux_q(T)) - K_v T_zz, the literal finite-volume composition through
/// the ghost fills. Consistency path: used by oracles, the effective source,
/// and the pre-symmetrization asymmetry report. Requires a full ghost fill.
ScalarField3 apply_divq_flux(const ScalarField3& T, const PhysParams& p, const Grid& g);

/// Same composition for a z-independent section (mu and K_v terms vanish).
/// Requires fill_ghosts_2d.
ScalarField2 apply_divq_flux_2d(const ScalarField2& t, const PhysParams& p, const Grid& g);

/// The discrete bilinear form
///   a(R1,R2) = alpha * int_{z=0} [R1 R2 + (mu/K_v) grad R1 . grad R2]
///            + int [K_h grad R1 . grad R2 + K_v R1_z R2_z
///                   + lambda s(R1) s(R2) + mu grad R1_z . grad R2_z],
/// with the surface terms on the top cell-center plane. Requires the first
/// lateral ghost layer on both arguments. Symmetric by construction.
double bilinear_a(const ScalarField3& R1, const ScalarField3& R2,
                  const PhysParams& p, const Grid& g);

/// ||R||^2 = a(R,R); nonnegative.
double v2_norm_sq(const ScalarField3& R, const PhysParams& p, const Grid& g);

/// Assembled sparse operator A: R -> div q(R) - K_v R_zz with all boundary
/// conditions folded in, built variationally from the same quadrature as
/// bilinear_a so that symmetry and inner_l2(A R, R) = a(R,R) are structural.
struct DiffusionOperator {
    Grid grid;
    PhysParams params;
    Eigen::SparseMatrix<double> A;  // row-major interior index, x-fastest
    double asym_pre = 0.0;   // relative max-norm asymmetry before cleanup
    double asym_post = 0.0;  // after (A + A^T)/2

    ScalarField3 apply(const ScalarField3& T) const;
    std::int64_t size() const { return A.rows(); }
};

/// Assembles the operator. Refuses grids above `cap` unknowns.
DiffusionOperator assemble(const Grid& g, const PhysParams& p,
                           std::int64_t cap = 200000, bool allow_zero_lambda = false);

/// Sparse matvec through the assembled operator (the operation contract:
/// symmetric to rounding, inner_l2(apply_A(R),R) = a(R,R)).
ScalarField3 apply_A(const ScalarField3& T, const DiffusionOperator& op);

/// Matrix-free action identical to the assembled operator (same quadrature
/// rows, ghost fill folded by the transpose of the fill plan). Requires the
/// first lateral ghost layer.
ScalarField3 apply_A_matfree(const ScalarField3& T, const PhysParams& p, const Grid& g);

/// Exact fold of the naive composition fill_ghosts + apply_divq_flux into a
/// sparse matrix by unit-vector probing; reports its relative asymmetry.
/// Diagnostic only; guarded to small grids.
struct NaiveFold {
    Eigen::SparseMatrix<double> A;
    double rel_asymmetry = 0.0;
};
NaiveFold assemble_naive_fold(const Grid& g, const PhysParams& p,
                              std::int64_t cap = 20000);

/// Coordinate-triplet text export (row col value per line).
void export_triplets(const DiffusionOperator& op, std::ostream& os);

}  // namespace pghd
