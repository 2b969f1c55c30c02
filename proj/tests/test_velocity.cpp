#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pghd/boundary.hpp"
#include "pghd/integrals.hpp"
#include "pghd/velocity.hpp"
#include "oracles.hpp"

using namespace pghd;

namespace {

ScalarField2 zero_section(const Grid& g, const PhysParams& p) {
    ScalarField2 t(g);
    fill_ghosts_2d(t, p, g);
    return t;
}

}  // namespace

TEST_CASE("zero inputs give zero velocity") {
    PhysParams p;
    Grid g(8, 8, 6, 1, 1, 1);
    ScalarField3 T(g);
    fill_ghosts(T, p, g);
    const VelocityField vel = diagnose_velocity(T, zero_section(g, p), p, g);
    CHECK(max_abs(vel) == 0.0);
}

TEST_CASE("z-only anomaly and constant T* give zero velocity") {
    PhysParams p;
    Grid g(8, 8, 6, 1, 1, 1);
    ScalarField3 T(g);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) T(i, j, k) = std::exp(g.z(k));
    fill_ghosts(T, p, g);
    ScalarField2 ts(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) ts(i, j) = 2.5;
    fill_ghosts_2d(ts, p, g);
    const VelocityField vel = diagnose_velocity(T, ts, p, g);
    CHECK(max_abs(vel) < 1e-14);
}

TEST_CASE("structure: depth mean, incompressibility, w at the boundaries") {
    PhysParams p;
    Grid g(16, 14, 10, 1, 1, 1);
    ScalarField3 T = oracle::random_field(g, 21);
    fill_ghosts(T, p, g);
    ScalarField2 ts(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) ts(i, j) = std::cos(M_PI * g.y(j));
    fill_ghosts_2d(ts, p, g);
    const VelocityField vel = diagnose_velocity(T, ts, p, g);
    const double vmax = max_abs(vel);

    double mean_worst = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double m1 = 0, m2 = 0;
            for (int k = 0; k < g.nz; ++k) {
                m1 += vel.v1(i, j, k);
                m2 += vel.v2(i, j, k);
            }
            mean_worst = std::max({mean_worst, std::abs(m1 / g.nz), std::abs(m2 / g.nz)});
        }
    CHECK(mean_worst <= 1e-12 * vmax);
    CHECK(incompressibility_residual(vel, g) <= 1e-13 * vmax);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            CHECK(vel.wf(i, j, 0) == 0.0);
            CHECK(std::abs(vel.wf(i, j, g.nz)) <= 1e-12 * vmax);
        }
    // wall-normal faces are zero in physical mode
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j) {
            CHECK(vel.uf(0, j, k) == 0.0);
            CHECK(vel.uf(g.nx, j, k) == 0.0);
        }
}

TEST_CASE("divergence-free z-independent v gives w = 0") {
    // v = (sin(2 pi y), 0) is wall-compatible on the periodic box
    Grid g(16, 16, 8, 1, 1, 1, LateralMode::periodic_test);
    VelocityField vel(g);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int f = 0; f <= g.nx; ++f) vel.uf(f, j, k) = std::sin(2 * M_PI * g.y(j));
    accumulate_w(vel, g);
    for (double w : vel.w) CHECK(w == 0.0);
}

TEST_CASE("linearity in (T~, T*)") {
    PhysParams p;
    Grid g(10, 10, 6, 1, 1, 1);
    ScalarField3 Ta = oracle::random_field(g, 31), Tb = oracle::random_field(g, 32);
    fill_ghosts(Ta, p, g);
    fill_ghosts(Tb, p, g);
    ScalarField3 Tc = Ta;
    axpy_interior(Tc, 2.0, Tb);
    fill_ghosts(Tc, p, g);
    const ScalarField2 zs = zero_section(g, p);
    const VelocityField va = diagnose_velocity(Ta, zs, p, g);
    const VelocityField vb = diagnose_velocity(Tb, zs, p, g);
    const VelocityField vc = diagnose_velocity(Tc, zs, p, g);
    double worst = 0.0;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                worst = std::max(worst, std::abs(vc.v1(i, j, k) - va.v1(i, j, k) -
                                                 2.0 * vb.v1(i, j, k)));
    CHECK(worst < 1e-12 * std::max(1.0, max_abs(vc)));
}

TEST_CASE("shear relation matches the momentum balance derivative") {
    // differentiating the frictional-geostrophic balance in z with p_z = -T:
    // dz v1 = gamma (eps T_x + f T_y), dz v2 = gamma (-f T_x + eps T_y);
    // the discrete construction satisfies this identity to rounding
    PhysParams p;
    p.beta = 0.0;
    p.alpha = 0.0;
    auto err = [&](int n) {
        Grid g(n, n, n, 1, 1, 1, LateralMode::periodic_test);
        ScalarField3 T(g);
        for (int k = 0; k < g.nz; ++k)
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i)
                    T(i, j, k) = std::sin(2 * M_PI * g.x(i)) * std::cos(2 * M_PI * g.y(j)) *
                                 std::cos(M_PI * (g.z(k) + 1.0));
        fill_ghosts(T, p, g);
        const VelocityField vel = diagnose_velocity(T, ScalarField2(g), p, g);
        double worst = 0.0;
        for (int k = 0; k < g.nz - 1; ++k)
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i) {
                    const double gam = p.gamma(g.y(j));
                    const double f = p.coriolis(g.y(j));
                    // centered quantities at the interface between k and k+1
                    auto tx = [&](int kk) {
                        return (T(i + 1, j, kk) - T(i - 1, j, kk)) / (2 * g.dx);
                    };
                    auto ty = [&](int kk) {
                        return (T(i, j + 1, kk) - T(i, j - 1, kk)) / (2 * g.dy);
                    };
                    const double txm = 0.5 * (tx(k) + tx(k + 1));
                    const double tym = 0.5 * (ty(k) + ty(k + 1));
                    const double dv1 = (vel.v1(i, j, k + 1) - vel.v1(i, j, k)) / g.dz;
                    const double dv2 = (vel.v2(i, j, k + 1) - vel.v2(i, j, k)) / g.dz;
                    worst = std::max(worst, std::abs(dv1 - gam * (p.epsilon * txm + f * tym)));
                    worst = std::max(worst, std::abs(dv2 - gam * (-f * txm + p.epsilon * tym)));
                }
        return worst;
    };
    CHECK(err(8) <= 1e-13);
    CHECK(err(16) <= 1e-13);
}

TEST_CASE("w matches the explicit double-integral formula") {
    PhysParams p;
    p.alpha = 0.0;
    p.beta = 0.0;  // periodic verification regime
    auto err = [&](int n) {
        Grid g(n, n, n / 2, 1, 1, 1, LateralMode::periodic_test);
        ScalarField3 T(g);
        for (int k = 0; k < g.nz; ++k)
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i)
                    T(i, j, k) = std::sin(2 * M_PI * g.x(i)) * std::sin(2 * M_PI * g.y(j)) *
                                 (1.0 + 0.5 * std::cos(M_PI * (g.z(k) + 1.0)));
        fill_ghosts(T, p, g);
        ScalarField2 ts(g);
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                ts(i, j) = 0.3 * std::cos(2 * M_PI * g.x(i)) * std::cos(2 * M_PI * g.y(j));
        fill_ghosts_2d(ts, p, g);
        const VelocityField vel = diagnose_velocity(T, ts, p, g);
        const std::vector<double> wn = oracle::w_explicit(T, ts, p, g);
        double worst = 0.0, scale = 0.0;
        for (int k = 0; k <= g.nz; ++k)
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i) {
                    const double v = wn[i + g.nx * (j + static_cast<std::size_t>(g.ny) * k)];
                    worst = std::max(worst, std::abs(vel.wf(i, j, k) - v));
                    scale = std::max(scale, std::abs(v));
                }
        return worst / scale;
    };
    // the two routes agree to truncation order
    CHECK(std::log2(err(8) / err(16)) >= 1.7);
    CHECK(err(16) < 0.05);
}

TEST_CASE("pressure reconstruction") {
    PhysParams p;
    Grid g(8, 8, 8, 1, 1, 1);
    SUBCASE("zero temperature gives zero pressure") {
        ScalarField3 T(g);
        const ScalarField3 pr = reconstruct_pressure(T, ScalarField2(g), p, g);
        CHECK(max_abs(pr) < 1e-15);
    }
    SUBCASE("constant T = 1 gives p = -(z + 1/2)") {
        ScalarField3 T(g);
        for (int k = 0; k < g.nz; ++k)
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i) T(i, j, k) = 1.0;
        const ScalarField3 pr = reconstruct_pressure(T, ScalarField2(g), p, g);
        for (int k = 0; k < g.nz; ++k)
            CHECK(pr(3, 3, k) == doctest::Approx(-(g.z(k) + 0.5)).epsilon(1e-12));
    }
    SUBCASE("frictional-geostrophic balance holds to rounding") {
        // the centered-difference gradient commutes with the column
        // quadrature, so the discrete residual is exactly zero
        PhysParams pp;
        pp.alpha = 0.0;
        pp.beta = 0.0;
        auto err = [&](int n) {
            Grid gg(n, n, n, 1, 1, 1, LateralMode::periodic_test);
            ScalarField3 T(gg);
            for (int k = 0; k < gg.nz; ++k)
                for (int j = 0; j < gg.ny; ++j)
                    for (int i = 0; i < gg.nx; ++i)
                        T(i, j, k) = std::sin(2 * M_PI * gg.x(i)) * std::cos(2 * M_PI * gg.y(j)) *
                                     std::cos(M_PI * (gg.z(k) + 1.0));
            fill_ghosts(T, pp, gg);
            const ScalarField2 zs = ScalarField2(gg);
            const VelocityField vel = diagnose_velocity(T, zs, pp, gg);
            ScalarField3 pr = reconstruct_pressure(T, zs, pp, gg);
            fill_ghosts(pr, pp, gg, TopBC::neumann);
            double worst = 0.0;
            for (int k = 0; k < gg.nz; ++k)
                for (int j = 0; j < gg.ny; ++j)
                    for (int i = 0; i < gg.nx; ++i) {
                        const double f = pp.coriolis(gg.y(j));
                        const double px = (pr(i + 1, j, k) - pr(i - 1, j, k)) / (2 * gg.dx);
                        const double py = (pr(i, j + 1, k) - pr(i, j - 1, k)) / (2 * gg.dy);
                        const double r1 = px - f * vel.v2(i, j, k) + pp.epsilon * vel.v1(i, j, k);
                        const double r2 = py + f * vel.v1(i, j, k) + pp.epsilon * vel.v2(i, j, k);
                        worst = std::max({worst, std::abs(r1), std::abs(r2)});
                    }
            return worst;
        };
        CHECK(err(8) <= 1e-13);
        CHECK(err(16) <= 1e-13);
    }
}
