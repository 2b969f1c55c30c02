#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace pghd {

/// Dimensionless model coefficients of the frictional-geostrophic
/// hyper-diffusion model. All diffusivities act on the nondimensional
/// temperature in the unit-scaled box.
struct PhysParams {
    double epsilon = 1.0;   ///< Rayleigh drag coefficient (> 0)
    double f0 = 1.0;        ///< reference Coriolis parameter
    double beta = 0.5;      ///< beta-plane Coriolis gradient
    double K_v = 0.05;      ///< vertical diffusivity (> 0)
    double K_h = 0.02;      ///< horizontal diffusivity (> 0)
    double lambda = 5e-5;   ///< hyper-diffusion coefficient (> 0)
    double mu = 0.03;       ///< mixed horizontal-vertical diffusion (> 0)
    double alpha = 0.1;     ///< surface relaxation coefficient (>= 0)
    double h = 1.0;         ///< depth (> 0)

    /// Coriolis parameter f(y) = f0 + beta*y.
    double coriolis(double y) const { return f0 + beta * y; }

    /// gamma(y) = 1 / (f(y)^2 + epsilon^2). Finite because epsilon > 0.
    double gamma(double y) const {
        const double f = coriolis(y);
        return 1.0 / (f * f + epsilon * epsilon);
    }

    /// Throws std::invalid_argument on any violated positivity constraint.
    /// The compare experiment constructs a degraded operator with lambda = 0;
    /// that is the only caller allowed to pass allow_zero_lambda = true.
    void validate(bool allow_zero_lambda = false) const {
        auto fail = [](const std::string& m) { throw std::invalid_argument("PhysParams: " + m); };
        if (!(epsilon > 0.0)) fail("epsilon must be > 0");
        if (!(K_v > 0.0)) fail("K_v must be > 0");
        if (!(K_h > 0.0)) fail("K_h must be > 0");
        if (allow_zero_lambda ? !(lambda >= 0.0) : !(lambda > 0.0))
            fail(allow_zero_lambda ? "lambda must be >= 0" : "lambda must be > 0");
        if (!(mu > 0.0)) fail("mu must be > 0");
        if (!(alpha >= 0.0)) fail("alpha must be >= 0");
        if (!(h > 0.0)) fail("h must be > 0");
        if (!std::isfinite(f0) || !std::isfinite(beta)) fail("f0/beta must be finite");
    }
};

/// f = f0 + beta*y at a given coordinate.
inline double coriolis_at(const PhysParams& p, double y) { return p.coriolis(y); }

}  // namespace pghd
