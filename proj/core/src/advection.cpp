#include "pghd/advection.hpp"

#include <cmath>
#include <stdexcept>

#include "pghd/integrals.hpp"
#include "pghd/velocity.hpp"

namespace pghd {

ScalarField3 advect_tendency(const ScalarField3& T, const VelocityField& vel,
                             const Grid& g) {
    const double scale = std::max(1.0, max_abs(vel));
    if (incompressibility_residual(vel, g) > 1e-10 * scale)
        throw std::runtime_error(
            "advect_tendency: velocity violates discrete incompressibility");

    const int nx = g.nx, ny = g.ny, nz = g.nz;
    ScalarField3 out(g);
    for (int k = 0; k < nz; ++k)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                const double fxp = vel.uf(i + 1, j, k) * 0.5 * (T(i, j, k) + T(i + 1, j, k));
                const double fxm = vel.uf(i, j, k) * 0.5 * (T(i - 1, j, k) + T(i, j, k));
                const double fyp = vel.vf(i, j + 1, k) * 0.5 * (T(i, j, k) + T(i, j + 1, k));
                const double fym = vel.vf(i, j, k) * 0.5 * (T(i, j - 1, k) + T(i, j, k));
                // advective flux through z = 0 and z = -h is identically zero
                const double fzp = (k == nz - 1) ? 0.0
                    : vel.wf(i, j, k + 1) * 0.5 * (T(i, j, k) + T(i, j, k + 1));
                const double fzm = (k == 0) ? 0.0
                    : vel.wf(i, j, k) * 0.5 * (T(i, j, k - 1) + T(i, j, k));
                out(i, j, k) = -((fxp - fxm) / g.dx + (fyp - fym) / g.dy + (fzp - fzm) / g.dz);
            }
    return out;
}

double advection_energy(const ScalarField3& T, const VelocityField& vel, const Grid& g) {
    const ScalarField3 tend = advect_tendency(T, vel, g);
    double s = 0.0;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) s += -tend(i, j, k) * T(i, j, k);
    return s * g.cell_volume();
}

double advection_integral(const ScalarField3& T, const VelocityField& vel, const Grid& g) {
    const ScalarField3 tend = advect_tendency(T, vel, g);
    double s = 0.0;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) s += -tend(i, j, k);
    return s * g.cell_volume();
}

}  // namespace pghd
