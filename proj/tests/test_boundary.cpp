#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pghd/boundary.hpp"
#include "pghd/diffusion.hpp"
#include "oracles.hpp"

using namespace pghd;

TEST_CASE("robin ghost factor matches the 1-D oracle") {
    PhysParams p;
    p.alpha = 0.1;
    p.K_v = 0.05;
    Grid g(8, 8, 8, 1, 1, 1);
    // oracle: solve (g - t)/dz + (alpha/K_v)(g + t)/2 = 0 for g/t
    const double a = p.alpha * g.dz / (2.0 * p.K_v);
    const double expected = (1.0 - a) / (1.0 + a);
    CHECK(robin_ghost_factor(p, g) == doctest::Approx(expected).epsilon(1e-15));

    ScalarField3 f(g);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) f(i, j, k) = 2.0;
    fill_ghosts(f, p, g);
    CHECK(f(3, 3, g.nz) == doctest::Approx(2.0 * expected).epsilon(1e-15));
    // the filled ghost satisfies the Robin condition exactly
    const double dz_grad = (f(3, 3, g.nz) - f(3, 3, g.nz - 1)) / g.dz;
    const double surf = 0.5 * (f(3, 3, g.nz) + f(3, 3, g.nz - 1));
    CHECK(dz_grad + p.alpha / p.K_v * surf == doctest::Approx(0.0).epsilon(1e-14));
    // bottom Neumann mirror
    CHECK(f(3, 3, -1) == f(3, 3, 0));
}

TEST_CASE("constants with alpha = 0 fill every ghost with the constant") {
    PhysParams p;
    p.alpha = 0.0;
    Grid g(8, 6, 4, 1, 1, 1);
    ScalarField3 f(g);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) f(i, j, k) = -1.75;
    fill_ghosts(f, p, g);
    for (double v : f.raw()) CHECK(v == doctest::Approx(-1.75).epsilon(1e-14));
}

TEST_CASE("f = 0 reduces the oblique fill to a mirror") {
    PhysParams p;
    p.f0 = 0.0;
    p.beta = 0.0;
    Grid g(8, 8, 4, 1, 1, 1);
    ScalarField3 f = oracle::random_field(g, 5);
    fill_ghosts(f, p, g);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j) {
            CHECK(f(-1, j, k) == f(0, j, k));
            CHECK(f(g.nx, j, k) == f(g.nx - 1, j, k));
        }
    for (int k = 0; k < g.nz; ++k)
        for (int i = 0; i < g.nx; ++i) {
            CHECK(f(i, -1, k) == f(i, 0, k));
            CHECK(f(i, g.ny, k) == f(i, g.ny - 1, k));
        }
}

TEST_CASE("oblique condition holds at the wall for the filled ghost") {
    PhysParams p;  // f != 0
    Grid g(12, 12, 4, 1, 1, 1);
    ScalarField3 f = oracle::random_field(g, 8);
    fill_ghosts(f, p, g);
    // at the east wall: eps*(ghost - interior)/dx + f * T_y(interior line) = 0
    for (int k = 0; k < g.nz; ++k)
        for (int j = 1; j < g.ny - 1; ++j) {
            const double fj = p.coriolis(g.y(j));
            const double tn = (f(g.nx, j, k) - f(g.nx - 1, j, k)) / g.dx;
            const double ts = (f(g.nx - 1, j + 1, k) - f(g.nx - 1, j - 1, k)) / (2 * g.dy);
            CHECK(p.epsilon * tn + fj * ts == doctest::Approx(0.0).epsilon(1e-12));
        }
}

TEST_CASE("periodic fill wraps all layers") {
    PhysParams p;
    p.alpha = 0.0;
    p.beta = 0.0;
    Grid g(8, 8, 4, 1, 1, 1, LateralMode::periodic_test);
    ScalarField3 f = oracle::random_field(g, 11);
    fill_ghosts(f, p, g);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j) {
            CHECK(f(-1, j, k) == f(g.nx - 1, j, k));
            CHECK(f(-2, j, k) == f(g.nx - 2, j, k));
            CHECK(f(g.nx + 1, j, k) == f(1, j, k));
        }
}

TEST_CASE("fill is idempotent") {
    PhysParams p;
    Grid g(10, 8, 6, 1, 1, 1);
    ScalarField3 f = oracle::random_field(g, 13);
    fill_ghosts(f, p, g);
    ScalarField3 f2 = f;
    fill_ghosts(f2, p, g);
    for (std::size_t s = 0; s < f.raw().size(); ++s) CHECK(f.raw()[s] == f2.raw()[s]);
}

TEST_CASE("second-layer ghosts satisfy the zero wall-normal flux equation") {
    PhysParams p;
    Grid g(12, 10, 6, 1, 1, 1);
    ScalarField3 T = oracle::random_field(g, 17);
    fill_ghosts(T, p, g);
    // recompute the wall-normal flux at the east wall from the filled field;
    // all the pieces of the fill (one-sided cross terms included) must cancel
    const ScalarField3 s = elliptic_core(T, p, g);
    for (int k = 1; k < g.nz - 1; ++k)
        for (int j = 1; j < g.ny - 1; ++j) {
            const int i = g.nx - 1;
            const double foe = p.coriolis(g.y(j)) / p.epsilon;
            auto tzz = [&](int ii) {
                return (T(ii, j, k + 1) - 2 * T(ii, j, k) + T(ii, j, k - 1)) / (g.dz * g.dz);
            };
            // s at the ghost cell as the fill defines it
            const double cross = s(i, j, k) -
                ((T(i + 1, j, k) - 2 * T(i, j, k) + T(i - 1, j, k)) / (g.dx * g.dx) +
                 (T(i, j + 1, k) - 2 * T(i, j, k) + T(i, j - 1, k)) / (g.dy * g.dy));
            const double sg =
                (T(g.nx + 1, j, k) - 2 * T(g.nx, j, k) + T(g.nx - 1, j, k)) / (g.dx * g.dx) +
                (T(g.nx, j + 1, k) - 2 * T(g.nx, j, k) + T(g.nx, j - 1, k)) / (g.dy * g.dy) +
                cross;
            const double sy = (s(i, j + 1, k) - s(i, j - 1, k)) / (2 * g.dy);
            const double qn = p.lambda * ((sg - s(i, j, k)) / g.dx - foe * sy) -
                              p.K_h * (T(g.nx, j, k) - T(i, j, k)) / g.dx +
                              p.mu * (tzz(g.nx) - tzz(i)) / g.dx;
            CHECK(qn == doctest::Approx(0.0).epsilon(1e-10));
        }
}
