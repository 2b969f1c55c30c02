#include "pghd/mms.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "pghd/integrals.hpp"

namespace pghd {

// Closed forms derived symbolically from the manufactured temperature
// amp * e^{-t} sin(2 pi x/Lx) cos(2 pi y/Ly) cos(pi (z+h)/h):
// the exact velocity integrals (zero depth mean), w = -int div v, and the
// forcing of the full anomaly equation at beta = 0.
MmsPoint mms_eval(double x, double y, double z, double t, double amp,
                  const PhysParams& p, const Grid& g) {
    if (p.beta != 0.0)
        throw std::invalid_argument("mms_eval: manufactured solution requires beta = 0");
    const double Lx = g.Lx, Ly = g.Ly, h = g.h;
    const double eps = p.epsilon, f0 = p.f0;
    const double K_v = p.K_v, K_h = p.K_h, lam = p.lambda, mu = p.mu;
    MmsPoint out;

    const double x0 = h + z;
    const double x1 = M_PI / h;
    const double x2 = x0 * x1;
    const double x3 = std::cos(x2);
    const double x4 = 1.0 / Ly;
    const double x5 = M_PI * x4;
    const double x6 = x5 * y;
    const double x7 = 2 * x6;
    const double x8 = std::cos(x7);
    const double x9 = 1.0 / Lx;
    const double x10 = M_PI * x9;
    const double x11 = x * x10;
    const double x12 = 2 * x11;
    const double x13 = std::sin(x12);
    const double x14 = x13 * x8;
    const double x15 = x14 * x3;
    const double x16 = amp * std::exp(-t);
    const double x17 = std::cos(x11);
    const double x18 = std::pow(x17, 2);
    const double x19 = 2 * x18;
    const double x20 = x19 - 1;
    const double x21 = std::cos(x6);
    const double x22 = std::pow(x21, 2);
    const double x23 = 2 * x22;
    const double x24 = x23 - 1;
    const double x25 = 8 * Lx;
    const double x26 = std::sin(x11);
    const double x27 = x17 * x26;
    const double x28 = std::sin(x6);
    const double x29 = f0 * x21 * x28;
    const double x30 = x27 * x29;
    const double x31 = x1 * z;
    const double x32 = std::sin(x31);
    const double x33 = M_PI * x32;
    const double x34 = M_1_PI;
    const double x35 = 2 * x34;
    const double x36 = x4 * x9;
    const double x37 = 1.0 / (std::pow(eps, 2) + std::pow(f0, 2));
    const double x38 = h * x16 * x37;
    const double x39 = x35 * x36 * x38;
    const double x40 = x20 * x24;
    const double x41 = Ly * f0 * x40;
    const double x42 = eps * x27;
    const double x43 = x21 * x28;
    const double x44 = x42 * x43;
    const double x45 = eps * x32;
    const double x46 = 4 * x27 * x43;
    const double x47 = std::pow(Ly, 2);
    const double x48 = 1.0 / x47;
    const double x49 = std::pow(Lx, 2);
    const double x50 = 1.0 / x49;
    const double x51 = x24 * x27;
    const double x52 = 2 * eps * x51;
    const double x53 = std::cos(x31);
    const double x54 = x53 + 1;
    const double x55 = h * x29;
    const double x56 = Lx * Ly * x55;
    const double x57 = std::pow(x26, 2);
    const double x58 = h * x57;
    const double x59 = h * x18;
    const double x60 = std::pow(x28, 2);
    const double x61 = h * x60;
    const double x62 = h * x22;
    const double x63 = eps * h;
    const double x64 = std::pow(h, -2);
    const double x65 = std::pow(M_PI, 2) * x15;
    const double x66 = x48 + x50;
    const double x67 = 4 * x66;
    const double x68 = std::pow(M_PI, 4) * x15;
    const double x69 = x30 * x4;
    const double x70 = 8 * x34;
    const double x71 = 4 * x3 * x38;
    const double x72 = f0 * x40 * x9;
    const double x73 = x42 * x48;
    const double x74 = x29 * x36;

    out.T = x15 * x16;
    out.v1 = -x39 * (-4 * Lx * x30 * x33 + M_PI * Ly * eps * x20 * x24 * x32 +
                     2 * Ly * eps * x20 * x24 - x25 * x30);
    out.v2 = x39 * (M_PI * Lx * x45 * x46 + x25 * x44 + x33 * x41 + 2 * x41);
    out.w = 8 * x38 * x48 * x50 *
            (2 * Lx * Ly * f0 * x0 * x20 * x21 * x28 +
             2 * Lx * Ly * f0 * x21 * x28 * (-x18 * z + x57 * z + x58 - x59) +
             eps * h * x17 * x24 * x26 * x47 * x54 +
             2 * eps * x17 * x26 * x49 * (-x22 * z + x60 * z + x61 - x62) -
             x0 * x47 * x52 - x20 * x54 * x56 -
             x27 * x49 * x63 * (-x22 * x53 - x22 + x53 * x60 + x60) -
             x56 * (-x18 * x53 - x18 + x53 * x57 + x57));
    out.F = x16 * (K_h * x65 * x67 + K_v * x64 * x65 +
                   16 * lam * std::pow(x66, 2) * x68 + mu * x64 * x67 * x68 -
                   x10 * x71 * x8 *
                       (eps * x20 * x24 * x32 * x9 + 2 * eps * x20 * x24 * x34 * x9 -
                        4 * x32 * x69 - x69 * x70) * std::cos(x12) -
                   x13 * x5 * x71 *
                       (x32 * x72 + x35 * x72 + x4 * x44 * x70 + x4 * x45 * x46) *
                       std::sin(x7) -
                   8 * M_PI * x14 * x16 * x37 *
                       (eps * h * x17 * x22 * x26 * x48 * x53 +
                        eps * h * x17 * x24 * x26 * x50 * x53 +
                        eps * h * x17 * x26 * x48 * x60 +
                        2 * eps * x17 * x26 * x48 * x60 * z +
                        f0 * h * x18 * x21 * x28 * x4 * x53 * x9 +
                        f0 * h * x20 * x21 * x28 * x4 * x9 +
                        f0 * h * x21 * x28 * x4 * x57 * x9 +
                        2 * f0 * x20 * x21 * x28 * x4 * x9 * z +
                        2 * f0 * x21 * x28 * x4 * x57 * x9 * z - x19 * x74 * z -
                        x20 * x36 * x53 * x55 - x23 * x73 * z - x50 * x51 * x63 -
                        x52 * x50 * z - x53 * x58 * x74 - x53 * x61 * x73 - x59 * x74 -
                        x62 * x73) * std::sin(x2) -
                   x15);
    return out;
}

namespace {

ScalarField3 sample_T(const Grid& g, const PhysParams& p, double amp, double t) {
    ScalarField3 f(g);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                f(i, j, k) = mms_eval(g.x(i), g.y(j), g.z(k), t, amp, p, g).T;
    return f;
}

ScalarField3 sample_F(const Grid& g, const PhysParams& p, double amp, double t) {
    ScalarField3 f(g);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                f(i, j, k) = mms_eval(g.x(i), g.y(j), g.z(k), t, amp, p, g).F;
    return f;
}

PhysParams periodic_params(PhysParams p) {
    p.beta = 0.0;
    p.alpha = 0.0;
    return p;
}

// Run the full solver (advection on) to t_end with the manufactured forcing.
ScalarField3 run_mms(const Grid& g, const PhysParams& p, Scheme scheme, double amp,
                     double dt, double t_end) {
    DiffusionOperator op = assemble(g, p, 400000);
    StepConfig sc;
    sc.dt = dt;
    sc.scheme = scheme;
    Stepper stepper(op, sc);
    ScalarField2 tstar(g);  // zero
    fill_ghosts_2d(tstar, p, g);

    SimState st;
    st.Ttilde = sample_T(g, p, amp, 0.0);
    const long nsteps = std::lround(t_end / dt);
    for (long n = 0; n < nsteps; ++n) {
        const double tq = (scheme == Scheme::crank_nicolson_ab2)
                              ? st.t + 0.5 * dt : st.t;
        stepper.step(st, tstar, sample_F(g, p, amp, tq));
    }
    return st.Ttilde;
}

}  // namespace

std::vector<MmsRow> mms_spatial_study(const PhysParams& params, int levels, double amp,
                                      std::ostream* log) {
    const PhysParams p = periodic_params(params);
    const double t_end = 0.05, dt = 1e-3;
    std::vector<MmsRow> rows;
    for (int lev = 0; lev < levels; ++lev) {
        const int n = 16 << lev;
        Grid g(n, n, n / 2, 1.0, 1.0, 1.0, LateralMode::periodic_test);
        ScalarField3 Tn = run_mms(g, p, Scheme::crank_nicolson_ab2, amp, dt, t_end);
        axpy_interior(Tn, -1.0, sample_T(g, p, amp, t_end));
        MmsRow r;
        r.resolution = g.dx;
        r.error = std::sqrt(l2_norm_sq(Tn, g));
        r.order = rows.empty() ? std::nan("")
                               : std::log2(rows.back().error / r.error);
        rows.push_back(r);
        if (log)
            *log << "  spatial level " << lev << ": h = " << r.resolution
                 << "  err = " << r.error << "  order = " << r.order << "\n";
    }
    return rows;
}

std::vector<MmsRow> mms_temporal_study(const PhysParams& params, Scheme scheme, double amp,
                                       std::ostream* log) {
    const PhysParams p = periodic_params(params);
    const double t_end = 0.05;
    Grid g(32, 32, 16, 1.0, 1.0, 1.0, LateralMode::periodic_test);
    const ScalarField3 ref = run_mms(g, p, scheme, amp, t_end / 2048.0, t_end);
    std::vector<MmsRow> rows;
    for (int lev = 0; lev < 3; ++lev) {
        const double dt = t_end / (8 << lev);
        ScalarField3 Tn = run_mms(g, p, scheme, amp, dt, t_end);
        axpy_interior(Tn, -1.0, ref);
        MmsRow r;
        r.resolution = dt;
        r.error = std::sqrt(l2_norm_sq(Tn, g));
        r.order = rows.empty() ? std::nan("")
                               : std::log2(rows.back().error / r.error);
        rows.push_back(r);
        if (log)
            *log << "  temporal dt = " << r.resolution << "  err = " << r.error
                 << "  order = " << r.order << "\n";
    }
    return rows;
}

}  // namespace pghd
