#pragma once

#include <vector>

#include "pghd/field.hpp"
#include "pghd/grid.hpp"
#include "pghd/params.hpp"

namespace pghd {

/// Energy functionals of one state.
struct EnergyReport {
    double t = 0.0;
    double l2_sq = 0.0;        // |T~|^2
    double v2_sq = 0.0;        // ||T~||^2 = a(T~, T~)
    double surface_l2 = 0.0;   // alpha * int_{z=0} T~^2
    double advective_energy = 0.0;
    double source_power = 0.0;  // int Q* T~
};

/// Evaluates every functional on the current state. Ttilde need not be
/// ghost-filled (a working copy is filled internally).
EnergyReport energy_report(const ScalarField3& Ttilde, double t, const PhysParams& p,
                           const Grid& g, const VelocityField& vel,
                           const ScalarField3& Qstar);

/// Least-squares slope of log(l2_sq) against t over the last half of the
/// series. `monotone_flag` (optional) reports whether the series was
/// non-increasing. Requires >= 10 samples and positive values.
double decay_rate(const std::vector<std::pair<double, double>>& series,
                  bool* monotone_flag = nullptr);

/// (l2^{n+1} - l2^n)/dt + v2^{n+1} - 2*source_power^{n+1}; nonpositive up to
/// rounding for the unforced scheme (dissipation only under-counted).
double energy_inequality_residual(const EnergyReport& a, const EnergyReport& b, double dt);

/// Absorbing-ball radii with user-supplied stand-ins for the abstract
/// constants:
///   R~_a = 4 C0 C2 alpha^2 (1 + mu/K_v)^2 |T*|^2_{H1(M)} + 8 C0^2 |Q|^2,
///   R_a  = 2 R~_a + 2 |T*|^2_{L2(M)}.
struct BallEstimate {
    double C0 = 1.0, C2 = 1.0;
    double R_tilde_a = 0.0;
    double R_a = 0.0;
    double tstar_h1_sq = 0.0;
    double tstar_l2_sq = 0.0;
    double q_l2_sq = 0.0;
};

BallEstimate absorbing_radius(const PhysParams& p, const Grid& g, const ScalarField2& Tstar,
                              const ScalarField3& Q, double C0, double C2);

/// K4 = C R_a^6 (1 + |T*|^2_{H1(M)} + |Q|^2); bound = C (K4 / lambda1)^{1/2}.
double attractor_dim_bound(const BallEstimate& ball, double lambda1, double C);

/// |chi(t)| / |chi(0)| for chi = T~_a - T~_b over paired trajectories
/// (matching times required). chi(0) = 0 is reported as an all-zero series.
std::vector<std::pair<double, double>> continuous_dependence_ratio(
    const std::vector<std::pair<double, ScalarField3>>& run_a,
    const std::vector<std::pair<double, ScalarField3>>& run_b, const Grid& g);

/// max |grad_h T~| over cells within width_cells of the lateral boundary.
/// Physical mode only.
double boundary_layer_monitor(const ScalarField3& Ttilde, const Grid& g, int width_cells);

}  // namespace pghd
