#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "pghd/config.hpp"
#include "pghd/integrals.hpp"
#include "pghd/profiles.hpp"
#include "pghd/snapshot_io.hpp"
#include "oracles.hpp"

using namespace pghd;

TEST_CASE("coriolis parameter") {
    PhysParams p;
    p.f0 = 1.0; p.beta = 0.0;
    CHECK(coriolis_at(p, 0.7) == 1.0);
    p.f0 = 0.0; p.beta = 1.0;
    CHECK(coriolis_at(p, 0.0) == 0.0);
    p.f0 = 1.0; p.beta = 0.5;
    CHECK(coriolis_at(p, 0.5) == doctest::Approx(1.25).epsilon(1e-15));
}

TEST_CASE("params validation") {
    PhysParams p;
    CHECK_NOTHROW(p.validate());
    p.epsilon = -1.0;
    CHECK_THROWS(p.validate());
    p = PhysParams{};
    p.lambda = 0.0;
    CHECK_THROWS(p.validate());
    CHECK_NOTHROW(p.validate(/*allow_zero_lambda=*/true));
}

TEST_CASE("grid geometry") {
    Grid g(8, 8, 4, 2.0, 1.0, 0.5);
    CHECK(g.dx == doctest::Approx(0.25));
    CHECK(g.x(0) == doctest::Approx(0.125));
    CHECK(g.z(0) == doctest::Approx(-0.5 + 0.0625));
    CHECK(g.z_face(0) == doctest::Approx(-0.5));
    CHECK(g.z_face(4) == doctest::Approx(0.0));
    CHECK_THROWS(Grid(2, 8, 4, 1, 1, 1));
}

TEST_CASE("inner_l2 midpoint quadrature") {
    Grid g(8, 8, 8, 1, 1, 1);
    ScalarField3 a(g), b(g);
    a.fill(0.0); b.fill(0.0);
    for (int k = 0; k < 8; ++k)
        for (int j = 0; j < 8; ++j)
            for (int i = 0; i < 8; ++i) a(i, j, k) = 1.0;
    CHECK(inner_l2(a, a, g) == doctest::Approx(1.0).epsilon(1e-14));  // unit volume
    CHECK(inner_l2(a, b, g) == 0.0);

    Grid g64(64, 64, 64, 1, 1, 1);
    ScalarField3 s(g64);
    for (int k = 0; k < 64; ++k)
        for (int j = 0; j < 64; ++j)
            for (int i = 0; i < 64; ++i) s(i, j, k) = std::sin(2 * M_PI * g64.x(i));
    CHECK(inner_l2(s, s, g64) == doctest::Approx(0.5).epsilon(1e-3));

    Grid g2(8, 4, 4, 1, 1, 1);
    ScalarField3 c(g2);
    CHECK_THROWS(inner_l2(a, c, g));
}

TEST_CASE("depth_integral") {
    Grid g(4, 4, 16, 1, 1, 1);
    ScalarField3 f(g);
    SUBCASE("constant integrand") {
        for (int k = 0; k < g.nz; ++k)
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i) f(i, j, k) = 3.0;
        const ScalarField3 I = depth_integral(f, g);
        // at the top cell center the integral covers h - dz/2
        CHECK(I(0, 0, g.nz - 1) == doctest::Approx(3.0 * (g.h - 0.5 * g.dz)).epsilon(1e-14));
    }
    SUBCASE("zero integrand") {
        const ScalarField3 I = depth_integral(f, g);
        CHECK(max_abs(I) == 0.0);
    }
    SUBCASE("linear integrand f = z: O(dz^2) at centers, exact full column") {
        for (int k = 0; k < g.nz; ++k)
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i) f(i, j, k) = g.z(k);
        const ScalarField3 I = depth_integral(f, g);
        double worst = 0.0;
        for (int k = 0; k < g.nz; ++k) {
            const double z = g.z(k);
            worst = std::max(worst, std::abs(I(1, 2, k) - 0.5 * (z * z - 1.0)));
        }
        CHECK(worst < g.dz * g.dz);  // half-cell midpoint error is O(dz^2)
        // the full-column midpoint sum of z over (-1, 0) is exactly -1/2
        double full = 0.0;
        for (int k = 0; k < g.nz; ++k) full += g.z(k) * g.dz;
        CHECK(full == doctest::Approx(-0.5).epsilon(1e-14));
    }
    SUBCASE("linearity") {
        ScalarField3 a = oracle::random_field(g, 1), b = oracle::random_field(g, 2);
        ScalarField3 ab = a;
        axpy_interior(ab, 2.0, b);
        ScalarField3 I = depth_integral(ab, g);
        axpy_interior(I, -1.0, depth_integral(a, g));
        axpy_interior(I, -2.0, depth_integral(b, g));
        CHECK(max_abs(I) < 1e-14);
    }
}

TEST_CASE("profiles parse and render") {
    CHECK(ProfileSpec::parse("zero").kind == ProfileSpec::Kind::zero);
    CHECK(ProfileSpec::parse("file:/tmp/x.pghd").path == "/tmp/x.pghd");
    const auto m = ProfileSpec::parse("mode(1,2,3,0.5)");
    CHECK(m.k == 1);
    CHECK(m.l == 2);
    CHECK(m.m == 3);
    CHECK(m.amplitude == 0.5);
    const auto r = ProfileSpec::parse("random(42,0.1,3)");
    CHECK(r.seed == 42);
    CHECK(r.smooth_passes == 3);
    CHECK_THROWS_WITH(ProfileSpec::parse("random()"), doctest::Contains("seed"));
    CHECK_THROWS(ProfileSpec::parse("bogus(1)"));

    Grid g(8, 8, 4, 1, 1, 1);
    const auto gy = make_profile2(ProfileSpec::parse("gyre(2)"), g);
    CHECK(gy(0, 0) == doctest::Approx(2 * std::cos(M_PI * g.y(0))));
    // determinism
    const auto r1 = make_profile3(ProfileSpec::parse("random(9,1,2)"), g);
    const auto r2 = make_profile3(ProfileSpec::parse("random(9,1,2)"), g);
    for (int i = 0; i < 8; ++i) CHECK(r1(i, 3, 2) == r2(i, 3, 2));
}

TEST_CASE("config parsing") {
    SUBCASE("defaults from minimal text") {
        const auto r = parse_config("");
        REQUIRE(r.config.has_value());
        CHECK(r.config->nx == 16);
        CHECK(r.config->phys.alpha == doctest::Approx(0.1));
        CHECK(r.config->dt == doctest::Approx(1e-3));
        CHECK(r.config->directory == "out");
    }
    SUBCASE("negative epsilon names the key") {
        const auto r = parse_config("[physics]\nepsilon = -1\n");
        REQUIRE(!r.config.has_value());
        bool found = false;
        for (const auto& e : r.errors)
            if (e.find("[physics].epsilon") != std::string::npos) found = true;
        CHECK(found);
    }
    SUBCASE("periodic_test forbids alpha > 0") {
        const auto r = parse_config("[domain]\nlateral_mode = periodic_test\n[physics]\nalpha = 0.5\n");
        CHECK(!r.config.has_value());
    }
    SUBCASE("periodic_test with alpha = beta = 0 is fine") {
        const auto r =
            parse_config("[domain]\nlateral_mode = periodic_test\n[physics]\nalpha = 0\nbeta = 0\n");
        CHECK(r.config.has_value());
    }
    SUBCASE("unknown key is an error") {
        const auto r = parse_config("[physics]\nepsilonn = 1\n");
        REQUIRE(!r.config.has_value());
        CHECK(r.errors[0].find("unknown key") != std::string::npos);
    }
    SUBCASE("render round-trips") {
        auto r = parse_config("[init]\nT0 = random(3,0.25,1)\n[time]\ndt = 0.005\n");
        REQUIRE(r.config.has_value());
        const auto r2 = parse_config(render_config(*r.config));
        REQUIRE(r2.config.has_value());
        CHECK(r2.config->dt == r.config->dt);
        CHECK(r2.config->t0.seed == 3);
    }
}

TEST_CASE("snapshot io") {
    Grid g(8, 6, 4, 1, 1, 1);
    const ScalarField3 f = oracle::random_field(g, 77);
    const std::string path = std::filesystem::temp_directory_path() / "pghd_test_snap.pghd";
    write_snapshot(f, g, path);
    SUBCASE("round trip is bit exact") {
        const Snapshot s = read_snapshot(path);
        CHECK(s.grid.nx == 8);
        CHECK(s.grid.Ly == 1.0);
        for (int k = 0; k < g.nz; ++k)
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i) CHECK(s.field(i, j, k) == f(i, j, k));
    }
    SUBCASE("truncated file errors") {
        std::filesystem::resize_file(path, std::filesystem::file_size(path) - 16);
        CHECK_THROWS_WITH(read_snapshot(path), doctest::Contains("size mismatch"));
    }
    SUBCASE("bad magic errors") {
        std::ofstream o(path, std::ios::binary);
        o << "NOPE 1 2 3\n";
        o.close();
        CHECK_THROWS_WITH(read_snapshot(path), doctest::Contains("magic"));
    }
    std::filesystem::remove(path);
}

TEST_CASE("h1 norm of sections") {
    Grid g(32, 32, 4, 1, 1, 1);
    ScalarField2 t(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) t(i, j) = 1.0;
    // constant: |t|^2_H1 = |M| = 1
    CHECK(h1_norm_sq_2d(t, g) == doctest::Approx(1.0).epsilon(1e-12));
}
