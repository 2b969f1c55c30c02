#include "pghd/velocity.hpp"

#include <cmath>

#include "pghd/integrals.hpp"

namespace pghd {

VelocityField diagnose_velocity(const ScalarField3& Ttilde, const ScalarField2& Tstar,
                                const PhysParams& p, const Grid& g) {
    const int nx = g.nx, ny = g.ny, nz = g.nz;
    VelocityField vel(g);

    // shear integrands at cell centers
    ScalarField3 u1(g), u2(g);
    for (int k = 0; k < nz; ++k)
        for (int j = 0; j < ny; ++j) {
            const double f = p.coriolis(g.y(j));
            const double gam = p.gamma(g.y(j));
            for (int i = 0; i < nx; ++i) {
                const double tx = (Ttilde(i + 1, j, k) - Ttilde(i - 1, j, k)) / (2.0 * g.dx);
                const double ty = (Ttilde(i, j + 1, k) - Ttilde(i, j - 1, k)) / (2.0 * g.dy);
                u1(i, j, k) = gam * (p.epsilon * tx + f * ty);
                u2(i, j, k) = gam * (-f * tx + p.epsilon * ty);
            }
        }
    const ScalarField3 P1 = depth_integral(u1, g);
    const ScalarField3 P2 = depth_integral(u2, g);

    for (int j = 0; j < ny; ++j) {
        const double f = p.coriolis(g.y(j));
        const double gam = p.gamma(g.y(j));
        for (int i = 0; i < nx; ++i) {
            double m1 = 0.0, m2 = 0.0;
            for (int k = 0; k < nz; ++k) {
                m1 += P1(i, j, k);
                m2 += P2(i, j, k);
            }
            m1 /= nz;
            m2 /= nz;
            const double sx = (Tstar(i + 1, j) - Tstar(i - 1, j)) / (2.0 * g.dx);
            const double sy = (Tstar(i, j + 1) - Tstar(i, j - 1)) / (2.0 * g.dy);
            const double b1 = gam * (p.epsilon * sx + f * sy);
            const double b2 = gam * (-f * sx + p.epsilon * sy);
            for (int k = 0; k < nz; ++k) {
                const double zh = g.z(k) + 0.5 * g.h;  // mean-free in k by symmetry
                vel.v1(i, j, k) = P1(i, j, k) - m1 + zh * b1;
                vel.v2(i, j, k) = P2(i, j, k) - m2 + zh * b2;
            }
        }
    }

    // face velocities: centered averages, wall-normal components zero (B-3)
    const bool per = g.periodic();
    for (int k = 0; k < nz; ++k) {
        for (int j = 0; j < ny; ++j)
            for (int f = 0; f <= nx; ++f) {
                if (f == 0 || f == nx) {
                    vel.uf(f, j, k) = per ? 0.5 * (vel.v1(nx - 1, j, k) + vel.v1(0, j, k)) : 0.0;
                } else {
                    vel.uf(f, j, k) = 0.5 * (vel.v1(f - 1, j, k) + vel.v1(f, j, k));
                }
            }
        for (int f = 0; f <= ny; ++f)
            for (int i = 0; i < nx; ++i) {
                if (f == 0 || f == ny) {
                    vel.vf(i, f, k) = per ? 0.5 * (vel.v2(i, ny - 1, k) + vel.v2(i, 0, k)) : 0.0;
                } else {
                    vel.vf(i, f, k) = 0.5 * (vel.v2(i, f - 1, k) + vel.v2(i, f, k));
                }
            }
    }

    accumulate_w(vel, g);
    return vel;
}

void accumulate_w(VelocityField& vel, const Grid& g) {
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            vel.wf(i, j, 0) = 0.0;  // w(-h) = 0 exactly
            for (int k = 0; k < g.nz; ++k) {
                const double div = (vel.uf(i + 1, j, k) - vel.uf(i, j, k)) / g.dx +
                                   (vel.vf(i, j + 1, k) - vel.vf(i, j, k)) / g.dy;
                vel.wf(i, j, k + 1) = vel.wf(i, j, k) - g.dz * div;
            }
        }
}

ScalarField3 face_divergence(const VelocityField& vel, const Grid& g) {
    ScalarField3 out(g);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                out(i, j, k) = (vel.uf(i + 1, j, k) - vel.uf(i, j, k)) / g.dx +
                               (vel.vf(i, j + 1, k) - vel.vf(i, j, k)) / g.dy;
    return out;
}

double incompressibility_residual(const VelocityField& vel, const Grid& g) {
    double m = 0.0;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const double div = (vel.uf(i + 1, j, k) - vel.uf(i, j, k)) / g.dx +
                                   (vel.vf(i, j + 1, k) - vel.vf(i, j, k)) / g.dy +
                                   (vel.wf(i, j, k + 1) - vel.wf(i, j, k)) / g.dz;
                m = std::max(m, std::abs(div));
            }
    return m;
}

ScalarField3 reconstruct_pressure(const ScalarField3& Ttilde, const ScalarField2& Tstar,
                                  const PhysParams& p, const Grid& g) {
    (void)p;
    ScalarField3 total(g);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) total(i, j, k) = Ttilde(i, j, k) + Tstar(i, j);
    const ScalarField3 I = depth_integral(total, g);
    ScalarField3 out(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double mean = 0.0;
            for (int k = 0; k < g.nz; ++k) mean += I(i, j, k);
            mean /= g.nz;
            for (int k = 0; k < g.nz; ++k) out(i, j, k) = mean - I(i, j, k);
        }
    return out;
}

}  // namespace pghd
