// Independent verification oracles shared by the unit and acceptance tests.
// Everything here is derived from closed forms or direct quadrature, never
// from the implementation path it checks.
#pragma once

#include <cmath>
#include <random>

#include "pghd/boundary.hpp"
#include "pghd/field.hpp"
#include "pghd/grid.hpp"
#include "pghd/integrals.hpp"
#include "pghd/params.hpp"

namespace pghd::oracle {

/// Continuous dispersion of the diffusion operator on the periodic box with
/// Neumann vertical walls: sigma = lambda k^4 + K_h k^2 + mu k^2 m~^2 + K_v m~^2.
inline double dispersion_continuous(const PhysParams& p, const Grid& g, int kx, int ky,
                                    int m) {
    const double k2 = std::pow(2.0 * M_PI * kx / g.Lx, 2) + std::pow(2.0 * M_PI * ky / g.Ly, 2);
    const double m2 = std::pow(m * M_PI / g.h, 2);
    return p.lambda * k2 * k2 + p.K_h * k2 + p.mu * k2 * m2 + p.K_v * m2;
}

/// Discrete symbol of the same operator (second-difference wavenumbers).
inline double dispersion_discrete(const PhysParams& p, const Grid& g, int kx, int ky, int m) {
    auto k2d = [](int n, double L, int k) {
        const double d = L / n;
        const double s = std::sin(M_PI * k * d / L);
        return std::pow(2.0 / d * s, 2);
    };
    const double k2 = k2d(g.nx, g.Lx, kx) + k2d(g.ny, g.Ly, ky);
    const double sm = std::sin(0.5 * m * M_PI / g.nz);
    const double m2 = std::pow(2.0 / g.dz * sm, 2);
    return p.lambda * k2 * k2 + p.K_h * k2 + p.mu * k2 * m2 + p.K_v * m2;
}

/// Direct double-quadrature of the explicit w formula (the divergence of the
/// diagnostic velocity integrated twice in depth, with the depth-mean and
/// surface-profile corrections). Evaluated at the horizontal interfaces.
/// Requires ghost-filled inputs.
inline std::vector<double> w_explicit(const ScalarField3& Tt, const ScalarField2& Ts,
                                      const PhysParams& p, const Grid& g) {
    // I = div of the shear integrand = gam*eps*Lap T - gam*beta*T_x
    //     - 2 beta f gam^2 (-f T_x + eps T_y); same combination for T*.
    ScalarField3 I(g);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j) {
            const double f = p.coriolis(g.y(j));
            const double gam = p.gamma(g.y(j));
            for (int i = 0; i < g.nx; ++i) {
                const double tx = (Tt(i + 1, j, k) - Tt(i - 1, j, k)) / (2 * g.dx);
                const double ty = (Tt(i, j + 1, k) - Tt(i, j - 1, k)) / (2 * g.dy);
                const double lap =
                    (Tt(i + 1, j, k) - 2 * Tt(i, j, k) + Tt(i - 1, j, k)) / (g.dx * g.dx) +
                    (Tt(i, j + 1, k) - 2 * Tt(i, j, k) + Tt(i, j - 1, k)) / (g.dy * g.dy);
                I(i, j, k) = gam * p.epsilon * lap - gam * p.beta * tx -
                             2.0 * p.beta * f * gam * gam * (-f * tx + p.epsilon * ty);
            }
        }
    const ScalarField3 P = depth_integral(I, g);  // inner integral at centers

    std::vector<double> w(static_cast<std::size_t>(g.nx) * g.ny * (g.nz + 1), 0.0);
    auto wat = [&](int i, int j, int k) -> double& {
        return w[static_cast<std::size_t>(i) + g.nx * (static_cast<std::size_t>(j) +
                 static_cast<std::size_t>(g.ny) * k)];
    };
    for (int j = 0; j < g.ny; ++j) {
        const double f = p.coriolis(g.y(j));
        const double gam = p.gamma(g.y(j));
        for (int i = 0; i < g.nx; ++i) {
            const double sx = (Ts(i + 1, j) - Ts(i - 1, j)) / (2 * g.dx);
            const double sy = (Ts(i, j + 1) - Ts(i, j - 1)) / (2 * g.dy);
            const double slap =
                (Ts(i + 1, j) - 2 * Ts(i, j) + Ts(i - 1, j)) / (g.dx * g.dx) +
                (Ts(i, j + 1) - 2 * Ts(i, j) + Ts(i, j - 1)) / (g.dy * g.dy);
            const double J = gam * p.epsilon * slap - gam * p.beta * sx -
                             2.0 * p.beta * f * gam * gam * (-f * sx + p.epsilon * sy);
            // outer integral of P from -h to the interface (whole cells below)
            double outer = 0.0;
            std::vector<double> outer_at(g.nz + 1, 0.0);
            for (int k = 0; k < g.nz; ++k) {
                outer_at[k] = outer;
                outer += P(i, j, k) * g.dz;
            }
            outer_at[g.nz] = outer;
            for (int k = 0; k <= g.nz; ++k) {
                const double z = g.z_face(k);
                wat(i, j, k) = -outer_at[k] + (z + g.h) / g.h * outer_at[g.nz] -
                               0.5 * z * (z + g.h) * J;
            }
        }
    }
    return w;
}

inline ScalarField3 random_field(const Grid& g, unsigned seed, double amp = 1.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ud(-amp, amp);
    ScalarField3 f(g);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) f(i, j, k) = ud(rng);
    return f;
}

}  // namespace pghd::oracle
