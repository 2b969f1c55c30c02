#include "pghd/simulation.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include "pghd/advection.hpp"
#include "pghd/boundary.hpp"
#include "pghd/diagnostics.hpp"
#include "pghd/diffusion.hpp"
#include "pghd/integrals.hpp"
#include "pghd/mms.hpp"
#include "pghd/snapshot_io.hpp"
#include "pghd/spectral.hpp"
#include "pghd/stepper.hpp"
#include "pghd/velocity.hpp"

namespace fs = std::filesystem;

namespace pghd {

namespace {

ScalarField3 build_field3(const ProfileSpec& spec, const Grid& g) {
    if (spec.kind == ProfileSpec::Kind::file) {
        Snapshot snap = read_snapshot(spec.path);
        if (snap.grid.nx != g.nx || snap.grid.ny != g.ny || snap.grid.nz != g.nz ||
            snap.grid.Lx != g.Lx || snap.grid.Ly != g.Ly || snap.grid.h != g.h)
            throw std::runtime_error("snapshot '" + spec.path +
                                     "' does not match the configured domain");
        ScalarField3 f(g);
        for (int k = 0; k < g.nz; ++k)
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i) f(i, j, k) = snap.field(i, j, k);
        return f;
    }
    return make_profile3(spec, g);
}

ScalarField2 build_field2(const ProfileSpec& spec, const Grid& g) {
    if (spec.kind == ProfileSpec::Kind::file) return read_snapshot_2d(spec.path, g);
    return make_profile2(spec, g);
}

}  // namespace

// ---------------------------------------------------------------------------
// run
// ---------------------------------------------------------------------------

int run_simulation(const RunConfig& cfg, std::ostream& log) {
    const Grid g = cfg.make_grid();
    const PhysParams& p = cfg.phys;

    fs::create_directories(cfg.directory);
    {
        std::ofstream c(cfg.directory + "/config.ini");
        c << render_config(cfg);
    }

    ScalarField2 tstar = build_field2(cfg.tstar, g);
    fill_ghosts_2d(tstar, p, g);
    const ScalarField3 Q = build_field3(cfg.q, g);
    std::string warn;
    const ScalarField3 Qstar = effective_source(Q, tstar, p, g, &warn);
    if (!warn.empty()) log << "warning: " << warn << "\n";

    DiffusionOperator op = assemble(g, p, cfg.assemble_cap);
    Stepper stepper(op, cfg.make_step_config());

    SimState st;
    st.Ttilde = build_field3(cfg.t0, g);

    // CFL guard on the initial diagnosed velocity
    {
        const VelocityField vel0 = stepper.diagnose(st, tstar);
        const double bound = cfl_dt(vel0, g, cfg.cfl_safety,
                                    std::numeric_limits<double>::infinity());
        if (cfg.dt > bound && !cfg.cfl_override) {
            log << "error: dt = " << cfg.dt << " violates the CFL bound " << bound
                << " (set cfl_override = true to proceed)\n";
            return kExitUsage;
        }
    }

    DiagnosticsCsv csv(cfg.directory + "/diagnostics.csv");
    const long nsteps = std::lround(cfg.t_end / cfg.dt);
    auto emit_diag = [&](const VelocityField& vel) {
        const EnergyReport r = energy_report(st.Ttilde, st.t, p, g, vel, Qstar);
        const double bl = g.periodic() ? 0.0 : boundary_layer_monitor(st.Ttilde, g, 2);
        csv.row(r.t, r.l2_sq, r.v2_sq, r.surface_l2, r.advective_energy, r.source_power, bl);
    };

    try {
        {
            const VelocityField vel = stepper.diagnose(st, tstar);
            emit_diag(vel);
        }
        for (long n = 0; n < nsteps; ++n) {
            stepper.step(st, tstar, Qstar);
            if (cfg.diag_every > 0 && st.step_index % cfg.diag_every == 0) {
                const VelocityField vel = stepper.diagnose(st, tstar);
                emit_diag(vel);
                const double bound = cfl_dt(vel, g, cfg.cfl_safety,
                                            std::numeric_limits<double>::infinity());
                if (cfg.dt > bound && !cfg.cfl_override) {
                    log << "error: CFL bound " << bound << " crossed at t = " << st.t << "\n";
                    return kExitUsage;
                }
            }
            if (cfg.snapshot_every > 0 && st.step_index % cfg.snapshot_every == 0) {
                char name[64];
                std::snprintf(name, sizeof(name), "/snap_%06ld.pghd", st.step_index);
                write_snapshot(st.Ttilde, g, cfg.directory + name);
            }
        }
    } catch (const NumericalError& e) {
        log << "numerical failure at t = " << st.t << ": " << e.what() << "\n";
        return kExitNumerical;
    }
    write_snapshot(st.Ttilde, g, cfg.directory + "/final.pghd");
    log << "run finished: " << nsteps << " steps to t = " << st.t << ", |T~|^2 = "
        << l2_norm_sq(st.Ttilde, g) << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

namespace {

class CheckTable {
public:
    explicit CheckTable(std::ostream& log) : log_(log) {}
    void check(const std::string& name, bool ok, double value, const std::string& bound) {
        log_ << (ok ? "[PASS] " : "[FAIL] ") << std::left << std::setw(34) << name
             << " value = " << std::scientific << std::setprecision(3) << value
             << "  bound: " << bound << "\n";
        all_ok_ = all_ok_ && ok;
    }
    bool all_ok() const { return all_ok_; }

private:
    std::ostream& log_;
    bool all_ok_ = true;
};

}  // namespace

int run_verify(const RunConfig& cfg, std::ostream& log, const std::string& export_path) {
    const Grid g = cfg.make_grid();
    const PhysParams& p = cfg.phys;
    CheckTable tab(log);
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> ud(-1.0, 1.0);
    auto rnd = [&]() {
        ScalarField3 f(g);
        for (int k = 0; k < g.nz; ++k)
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i) f(i, j, k) = ud(rng);
        return f;
    };

    // H identity
    {
        double worst = 0.0;
        HMatrix H{p};
        for (int j = 0; j < g.ny; ++j) {
            const double y = g.y(j);
            const double fac = H.identity_factor(y);
            const double d11 = H.a11(y) * H.a11(y) + H.a12(y) * H.a12(y) - fac;
            const double d12 = H.a11(y) * H.a21(y) + H.a12(y) * H.a22(y);
            const double d22 = H.a21(y) * H.a21(y) + H.a22(y) * H.a22(y) - fac;
            worst = std::max({worst, std::abs(d11), std::abs(d12), std::abs(d22)});
        }
        tab.check("H * H^T identity", worst <= 1e-14, worst, "<= 1e-14");
    }
    // ghost fill idempotency
    {
        ScalarField3 f = rnd();
        fill_ghosts(f, p, g);
        ScalarField3 f2 = f;
        fill_ghosts(f2, p, g);
        double d = 0.0;
        for (std::size_t s = 0; s < f.raw().size(); ++s)
            d = std::max(d, std::abs(f.raw()[s] - f2.raw()[s]));
        tab.check("ghost fill idempotent", d == 0.0, d, "= 0");
    }
    // constants at alpha = 0 reproduce themselves in every ghost
    {
        PhysParams p0 = p;
        p0.alpha = 0.0;
        ScalarField3 f(g);
        f.fill(0.0);
        for (int k = 0; k < g.nz; ++k)
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i) f(i, j, k) = 3.25;
        fill_ghosts(f, p0, g);
        double d = 0.0;
        for (double v : f.raw()) d = std::max(d, std::abs(v - 3.25));
        tab.check("constant ghosts (alpha=0)", d <= 1e-13, d, "<= 1e-13");
    }
    // elliptic core closed form (interior cells, refinement order)
    {
        auto err_on = [&](const Grid& gg) {
            ScalarField3 f(gg);
            for (int k = 0; k < gg.nz; ++k)
                for (int j = 0; j < gg.ny; ++j)
                    for (int i = 0; i < gg.nx; ++i)
                        f(i, j, k) = std::sin(2 * M_PI * gg.x(i) / gg.Lx) *
                                     std::cos(2 * M_PI * gg.y(j) / gg.Ly);
            fill_ghosts(f, p, gg);
            const ScalarField3 s = elliptic_core(f, p, gg);
            double worst = 0.0;
            for (int k = 0; k < gg.nz; ++k)
                for (int j = 2; j < gg.ny - 2; ++j)
                    for (int i = 2; i < gg.nx - 2; ++i) {
                        const double kx = 2 * M_PI / gg.Lx, ky = 2 * M_PI / gg.Ly;
                        const double T = f(i, j, k);
                        const double tx = kx * std::cos(kx * gg.x(i)) *
                                          std::cos(ky * gg.y(j));
                        const double exact = -(kx * kx + ky * ky) * T - (p.beta / p.epsilon) * tx;
                        worst = std::max(worst, std::abs(s(i, j, k) - exact));
                    }
            return worst;
        };
        const double e1 = err_on(g);
        Grid g2(2 * g.nx, 2 * g.ny, g.nz, g.Lx, g.Ly, g.h, g.lateral_mode);
        const double order = std::log2(e1 / err_on(g2));
        tab.check("elliptic core closed form", order >= 1.7, order, "order >= 1.7");
    }

    DiffusionOperator op = assemble(g, p, cfg.assemble_cap);
    if (!export_path.empty()) {
        std::ofstream os(export_path);
        export_triplets(op, os);
        log << "operator exported to " << export_path << "\n";
    }
    // operator symmetry
    {
        double worst = 0.0;
        for (int t = 0; t < 20; ++t) {
            ScalarField3 r1 = rnd(), r2 = rnd();
            const ScalarField3 a1 = op.apply(r1), a2 = op.apply(r2);
            const double lhs = inner_l2(a1, r2, g), rhs = inner_l2(r1, a2, g);
            const double scale = std::sqrt(l2_norm_sq(a1, g) * l2_norm_sq(r2, g)) +
                                 std::sqrt(l2_norm_sq(r1, g) * l2_norm_sq(a2, g));
            worst = std::max(worst, std::abs(lhs - rhs) / scale);
        }
        tab.check("operator symmetry (SYMM)", worst <= 1e-10, worst, "<= 1e-10");
    }
    // quadratic identity a(R,R) = <A R, R>
    {
        double worst = 0.0;
        for (int t = 0; t < 20; ++t) {
            ScalarField3 r = rnd();
            ScalarField3 rf = r;
            fill_ghosts(rf, p, g);
            const double av = bilinear_a(rf, rf, p, g);
            const double qv = inner_l2(op.apply(r), r, g);
            worst = std::max(worst, std::abs(av - qv) / std::max(std::abs(av), 1e-300));
        }
        tab.check("a(R,R) = <A R, R>", worst <= 1e-8, worst, "<= 1e-8 rel");
    }
    // assembled vs matrix-free
    {
        double worst = 0.0;
        for (int t = 0; t < 20; ++t) {
            ScalarField3 r = rnd();
            ScalarField3 rf = r;
            fill_ghosts(rf, p, g);
            ScalarField3 d = op.apply(r);
            axpy_interior(d, -1.0, apply_A_matfree(rf, p, g));
            worst = std::max(worst,
                             std::sqrt(l2_norm_sq(d, g) / std::max(l2_norm_sq(op.apply(r), g), 1e-300)));
        }
        tab.check("assembled = matrix-free", worst <= 1e-11, worst, "<= 1e-11 rel");
    }
    // assembled operator asymmetry (variational product)
    tab.check("asymmetry after symmetrization", op.asym_post <= 1e-12, op.asym_post, "<= 1e-12");
    // naive flux-divergence fold asymmetry
    if (g.n_cells() <= 20000) {
        const NaiveFold nf = assemble_naive_fold(g, p);
        tab.check("naive fold asymmetry (pre-sym)", nf.rel_asymmetry <= 1e-2,
                  nf.rel_asymmetry, "<= 1e-2");
    }
    // positivity
    if (p.alpha > 0.0) {
        const EigenBasis b = compute_basis(op, 1);
        tab.check("min eigenvalue (alpha>0)", b.lambda[0] > 0.0, b.lambda[0], "> 0");
    }
    // periodic kernel + dispersion spot check on a small companion grid
    {
        Grid gp(16, 16, 8, 1.0, 1.0, 1.0, LateralMode::periodic_test);
        PhysParams pp = p;
        pp.alpha = 0.0;
        pp.beta = 0.0;
        DiffusionOperator opp = assemble(gp, pp, cfg.assemble_cap);
        const EigenBasis b = compute_basis(opp, 4);
        tab.check("periodic kernel dim", b.lambda[0] < 1e-10 && b.lambda[1] > 1e-10,
                  b.lambda[0], "1-dim kernel");
        // lowest nonconstant eigenvalue vs the discrete symbol
        auto k2d = [&](int n, double L, int k) {
            const double dd = L / n;
            const double s = std::sin(M_PI * k * dd / L);
            return (2.0 / dd) * (2.0 / dd) * s * s;
        };
        auto m2d = [&](int m) {
            const double s = std::sin(0.5 * m * M_PI / gp.nz);
            return (2.0 / gp.dz) * (2.0 / gp.dz) * s * s;
        };
        double sigma_min = std::numeric_limits<double>::infinity();
        for (int kx = 0; kx <= 2; ++kx)
            for (int ky = 0; ky <= 2; ++ky)
                for (int m = 0; m <= 2; ++m) {
                    if (kx == 0 && ky == 0 && m == 0) continue;
                    const double kk = k2d(gp.nx, gp.Lx, kx) + k2d(gp.ny, gp.Ly, ky);
                    const double mm = m2d(m);
                    sigma_min = std::min(sigma_min, pp.lambda * kk * kk + pp.K_h * kk +
                                                        pp.mu * kk * mm + pp.K_v * mm);
                }
        const double rel = std::abs(b.lambda[1] - sigma_min) / sigma_min;
        tab.check("dispersion spot (discrete)", rel <= 1e-9, rel, "<= 1e-9 rel");
    }
    // velocity structure
    {
        ScalarField3 T = rnd();
        fill_ghosts(T, p, g);
        ScalarField2 ts = build_field2(cfg.tstar, g);
        fill_ghosts_2d(ts, p, g);
        const VelocityField vel = diagnose_velocity(T, ts, p, g);
        const double vmax = std::max(max_abs(vel), 1e-300);
        double mean_worst = 0.0;
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                double m1 = 0.0, m2 = 0.0;
                for (int k = 0; k < g.nz; ++k) {
                    m1 += vel.v1(i, j, k);
                    m2 += vel.v2(i, j, k);
                }
                mean_worst = std::max({mean_worst, std::abs(m1) / g.nz, std::abs(m2) / g.nz});
            }
        tab.check("velocity depth mean", mean_worst <= 1e-12 * vmax, mean_worst / vmax,
                  "<= 1e-12 * max|v|");
        const double inc = incompressibility_residual(vel, g);
        tab.check("incompressibility", inc <= 1e-12 * vmax, inc / vmax, "<= 1e-12 rel");
        double wtop = 0.0;
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) wtop = std::max(wtop, std::abs(vel.wf(i, j, g.nz)));
        tab.check("w(z=0) rounding zero", wtop <= 1e-12 * vmax, wtop / vmax, "<= 1e-12 rel");
    }
    // advection skew symmetry and plain integral
    {
        double worst_e = 0.0, worst_i = 0.0;
        ScalarField2 ts = build_field2(cfg.tstar, g);
        fill_ghosts_2d(ts, p, g);
        for (int t = 0; t < 20; ++t) {
            ScalarField3 T = rnd();
            fill_ghosts(T, p, g);
            const VelocityField vel = diagnose_velocity(T, ts, p, g);
            const double scale = std::max(1e-300, std::sqrt(l2_norm_sq(T, g)) * max_abs(vel) *
                                                       (g.Lx * g.Ly * g.h));
            worst_e = std::max(worst_e, std::abs(advection_energy(T, vel, g)) / scale);
            worst_i = std::max(worst_i, std::abs(advection_integral(T, vel, g)) / scale);
        }
        tab.check("advective energy (EST-1)", worst_e <= 1e-10, worst_e, "<= 1e-10 rel");
        tab.check("advective integral (E-1)", worst_i <= 1e-10, worst_i, "<= 1e-10 rel");
    }
    // snapshot round trip
    {
        const ScalarField3 f = rnd();
        const std::string tmp = fs::temp_directory_path() / "pghd_verify_snap.pghd";
        write_snapshot(f, g, tmp);
        const Snapshot back = read_snapshot(tmp);
        double d = 0.0;
        bool bit = true;
        for (int k = 0; k < g.nz; ++k)
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i) {
                    if (back.field(i, j, k) != f(i, j, k)) bit = false;
                    d = std::max(d, std::abs(back.field(i, j, k) - f(i, j, k)));
                }
        tab.check("snapshot round trip bit-exact", bit, d, "= 0");
        fs::remove(tmp);
    }

    log << (tab.all_ok() ? "verification PASSED\n" : "verification FAILED\n");
    return tab.all_ok() ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------------------
// eig
// ---------------------------------------------------------------------------

int run_eig(const RunConfig& cfg, int modes, std::ostream& log) {
    const Grid g = cfg.make_grid();
    DiffusionOperator op = assemble(g, cfg.phys, cfg.assemble_cap);
    const EigenBasis basis = compute_basis(op, modes);
    log << "lowest " << modes << " eigenvalues:\n";
    log.precision(10);
    for (int k = 0; k < modes; ++k)
        log << "  " << k << "  lambda = " << basis.lambda[k]
            << "  residual = " << basis.residual[k] << "\n";
    if (modes >= 10 && basis.lambda[0] > 0.0) {
        log << "weyl growth min_k (lambda_k/lambda_1)/k = " << weyl_growth_check(basis) << "\n";
    }
    fs::create_directories(cfg.directory);
    write_basis(basis, g, cfg.directory + "/basis");
    log << "basis written to " << cfg.directory << "/basis\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// mms
// ---------------------------------------------------------------------------

int run_mms(const RunConfig& cfg, int levels, std::ostream& log) {
    if (cfg.lateral_mode != LateralMode::periodic_test) {
        log << "error: the mms study requires lateral_mode = periodic_test\n";
        return kExitUsage;
    }
    log << "spatial study (crank_nicolson_ab2, dt = 1e-3):\n";
    const auto sp = mms_spatial_study(cfg.phys, levels, 0.1, &log);
    log << "temporal study (backward_euler_ab2):\n";
    const auto tb = mms_temporal_study(cfg.phys, Scheme::backward_euler_ab2, 0.1, &log);
    log << "temporal study (crank_nicolson_ab2):\n";
    const auto tc = mms_temporal_study(cfg.phys, Scheme::crank_nicolson_ab2, 0.1, &log);
    const double sp_order = sp.back().order;
    const double tb_order = tb.back().order;
    const double tc_order = tc.back().order;
    log << "observed orders: spatial " << sp_order << ", temporal BE " << tb_order
        << ", temporal CN " << tc_order << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------------

int run_compare(const RunConfig& cfg, std::ostream& log, int bl_width) {
    if (cfg.lateral_mode != LateralMode::physical) {
        log << "error: compare requires lateral_mode = physical\n";
        return kExitUsage;
    }
    const Grid g = cfg.make_grid();
    fs::create_directories(cfg.directory);

    ScalarField2 tstar = build_field2(cfg.tstar, g);
    fill_ghosts_2d(tstar, cfg.phys, g);
    const ScalarField3 Q = build_field3(cfg.q, g);
    const ScalarField3 T0 = build_field3(cfg.t0, g);
    const long nsteps = std::lround(cfg.t_end / cfg.dt);

    struct Series {
        std::vector<double> t, bl;
        bool blew_up = false;
        double t_blowup = 0.0;
    };
    auto run_one = [&](const PhysParams& p) {
        Series s;
        std::string warn;
        const ScalarField3 Qstar = effective_source(Q, tstar, p, g, &warn);
        DiffusionOperator op = assemble(g, p, cfg.assemble_cap, /*allow_zero_lambda=*/true);
        Stepper stepper(op, cfg.make_step_config());
        SimState st;
        st.Ttilde = T0;
        s.t.push_back(0.0);
        s.bl.push_back(boundary_layer_monitor(st.Ttilde, g, bl_width));
        try {
            for (long n = 0; n < nsteps; ++n) {
                stepper.step(st, tstar, Qstar);
                if (st.step_index % std::max(1, cfg.diag_every) == 0) {
                    s.t.push_back(st.t);
                    s.bl.push_back(boundary_layer_monitor(st.Ttilde, g, bl_width));
                }
            }
        } catch (const NumericalError&) {
            s.blew_up = true;
            s.t_blowup = st.t;
        }
        return s;
    };

    log << "compare: lambda = " << cfg.phys.lambda << " vs lambda = 0 (K_h retained), "
        << nsteps << " steps\n";
    const Series hyper = run_one(cfg.phys);
    PhysParams p0 = cfg.phys;
    p0.lambda = 0.0;
    const Series nohyp = run_one(p0);

    std::ofstream csv(cfg.directory + "/compare.csv");
    csv << "t,bl_grad_hyper,bl_grad_nohyper\n";
    csv.precision(16);
    const std::size_t n = std::max(hyper.t.size(), nohyp.t.size());
    for (std::size_t i = 0; i < n; ++i) {
        const double t = i < hyper.t.size() ? hyper.t[i] : nohyp.t[i];
        csv << t << ',';
        if (i < hyper.bl.size()) csv << hyper.bl[i];
        csv << ',';
        if (i < nohyp.bl.size()) csv << nohyp.bl[i];
        else csv << "nan";
        csv << '\n';
    }

    const double base_h = std::max(hyper.bl.front(), 1e-300);
    const double base_n = std::max(nohyp.bl.front(), 1e-300);
    const double max_h = *std::max_element(hyper.bl.begin(), hyper.bl.end());
    const double max_n = *std::max_element(nohyp.bl.begin(), nohyp.bl.end());
    log << "  hyper-diffusion run: max monitor / initial = " << max_h / base_h
        << (hyper.blew_up ? "  (blew up!)" : "") << "\n";
    log << "  no-hyper run:        max monitor / initial = " << max_n / base_n
        << (nohyp.blew_up ? "  (NaN at t = " + std::to_string(nohyp.t_blowup) + ")" : "")
        << "\n";
    log << "monitor series written to " << cfg.directory << "/compare.csv\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// diag
// ---------------------------------------------------------------------------

int run_diag(const std::string& dir, double C0, double C2, double C, std::ostream& log) {
    const RunConfig cfg = load_config_file(dir + "/config.ini");
    const Grid g = cfg.make_grid();
    const ScalarField2 tstar = build_field2(cfg.tstar, g);
    const ScalarField3 Q = build_field3(cfg.q, g);
    const BallEstimate ball = absorbing_radius(cfg.phys, g, tstar, Q, C0, C2);
    log << "absorbing ball (C0 = " << C0 << ", C2 = " << C2 << "):\n"
        << "  |T*|_H1(M)^2 = " << ball.tstar_h1_sq << "  |T*|_L2(M)^2 = " << ball.tstar_l2_sq
        << "  |Q|^2 = " << ball.q_l2_sq << "\n"
        << "  R~_a = " << ball.R_tilde_a << "  R_a = " << ball.R_a << "\n";

    DiffusionOperator op = assemble(g, cfg.phys, cfg.assemble_cap);
    const EigenBasis basis = compute_basis(op, 1);
    log << "  lambda_1 = " << basis.lambda[0] << "\n";
    if (basis.lambda[0] > 0.0)
        log << "  attractor dimension bound (C = " << C << "): "
            << attractor_dim_bound(ball, basis.lambda[0], C) << "\n";

    // containment of the recorded |T~|^2 series in R_a over the last half
    std::ifstream csv(dir + "/diagnostics.csv");
    if (csv) {
        std::string line;
        std::getline(csv, line);  // header
        std::vector<double> l2;
        while (std::getline(csv, line)) {
            std::stringstream ss(line);
            std::string tok;
            std::getline(ss, tok, ',');
            std::getline(ss, tok, ',');
            l2.push_back(std::stod(tok));
        }
        if (!l2.empty()) {
            std::size_t inside = 0;
            const std::size_t start = l2.size() / 2;
            for (std::size_t i = start; i < l2.size(); ++i)
                if (l2[i] <= ball.R_a) ++inside;
            log << "  |T~|^2 <= R_a on " << inside << "/" << (l2.size() - start)
                << " of the last-half samples\n";
        }
    }
    return kExitOk;
}

}  // namespace pghd
