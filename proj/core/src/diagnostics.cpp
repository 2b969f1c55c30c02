#include "pghd/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include "pghd/advection.hpp"
#include "pghd/boundary.hpp"
#include "pghd/diffusion.hpp"
#include "pghd/integrals.hpp"

namespace pghd {

EnergyReport energy_report(const ScalarField3& Ttilde, double t, const PhysParams& p,
                           const Grid& g, const VelocityField& vel,
                           const ScalarField3& Qstar) {
    EnergyReport r;
    r.t = t;
    r.l2_sq = l2_norm_sq(Ttilde, g);

    ScalarField3 T = Ttilde;
    fill_ghosts(T, p, g);
    r.v2_sq = v2_norm_sq(T, p, g);
    double surf = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const double v = Ttilde(i, j, g.nz - 1);
            surf += v * v;
        }
    r.surface_l2 = p.alpha * surf * g.cell_area_xy();
    r.advective_energy = advection_energy(T, vel, g);
    r.source_power = inner_l2(Qstar, Ttilde, g);
    return r;
}

double decay_rate(const std::vector<std::pair<double, double>>& series, bool* monotone_flag) {
    if (series.size() < 10)
        throw std::invalid_argument("decay_rate: need at least 10 samples");
    if (monotone_flag) {
        *monotone_flag = true;
        for (std::size_t i = 1; i < series.size(); ++i)
            if (series[i].second > series[i - 1].second * (1.0 + 1e-12)) {
                *monotone_flag = false;
                break;
            }
    }
    const std::size_t start = series.size() / 2;
    double st = 0, sy = 0, stt = 0, sty = 0;
    std::size_t n = 0;
    for (std::size_t i = start; i < series.size(); ++i) {
        const double v = series[i].second;
        if (!(v > 0.0)) throw std::invalid_argument("decay_rate: nonpositive l2 value");
        const double t = series[i].first, y = std::log(v);
        st += t; sy += y; stt += t * t; sty += t * y;
        ++n;
    }
    const double den = n * stt - st * st;
    if (den == 0.0) return 0.0;
    return (n * sty - st * sy) / den;
}

double energy_inequality_residual(const EnergyReport& a, const EnergyReport& b, double dt) {
    return (b.l2_sq - a.l2_sq) / dt + b.v2_sq - 2.0 * b.source_power;
}

BallEstimate absorbing_radius(const PhysParams& p, const Grid& g, const ScalarField2& Tstar,
                              const ScalarField3& Q, double C0, double C2) {
    if (!(C0 > 0.0) || !(C2 > 0.0))
        throw std::invalid_argument("absorbing_radius: C0, C2 must be > 0");
    BallEstimate b;
    b.C0 = C0;
    b.C2 = C2;
    b.tstar_h1_sq = h1_norm_sq_2d(Tstar, g);
    b.tstar_l2_sq = inner_l2_2d(Tstar, Tstar, g);
    b.q_l2_sq = l2_norm_sq(Q, g);
    const double mk = 1.0 + p.mu / p.K_v;
    b.R_tilde_a = 4.0 * C0 * C2 * p.alpha * p.alpha * mk * mk * b.tstar_h1_sq +
                  8.0 * C0 * C0 * b.q_l2_sq;
    b.R_a = 2.0 * b.R_tilde_a + 2.0 * b.tstar_l2_sq;
    return b;
}

double attractor_dim_bound(const BallEstimate& ball, double lambda1, double C) {
    if (!(lambda1 > 0.0) || !(C > 0.0))
        throw std::invalid_argument("attractor_dim_bound: lambda1, C must be > 0");
    const double ra = ball.R_a;
    const double k4 = C * std::pow(ra, 6) * (1.0 + ball.tstar_h1_sq + ball.q_l2_sq);
    return C * std::sqrt(k4 / lambda1);
}

std::vector<std::pair<double, double>> continuous_dependence_ratio(
    const std::vector<std::pair<double, ScalarField3>>& run_a,
    const std::vector<std::pair<double, ScalarField3>>& run_b, const Grid& g) {
    if (run_a.size() != run_b.size())
        throw std::invalid_argument("continuous_dependence_ratio: length mismatch");
    std::vector<std::pair<double, double>> out;
    out.reserve(run_a.size());
    double chi0 = -1.0;
    for (std::size_t s = 0; s < run_a.size(); ++s) {
        if (run_a[s].first != run_b[s].first)
            throw std::invalid_argument("continuous_dependence_ratio: time mismatch");
        ScalarField3 chi = run_a[s].second;
        axpy_interior(chi, -1.0, run_b[s].second);
        const double nrm = std::sqrt(l2_norm_sq(chi, g));
        if (s == 0) {
            chi0 = nrm;
            out.emplace_back(run_a[s].first, chi0 == 0.0 ? 0.0 : 1.0);
            continue;
        }
        out.emplace_back(run_a[s].first, chi0 == 0.0 ? 0.0 : nrm / chi0);
    }
    return out;
}

double boundary_layer_monitor(const ScalarField3& Ttilde, const Grid& g, int width_cells) {
    if (g.periodic())
        throw std::invalid_argument("boundary_layer_monitor: no lateral boundary in periodic mode");
    double m = 0.0;
    auto grad_mag = [&](int i, int j, int k) {
        // one-sided at the walls; interior centered
        const double tx = (i == 0) ? (Ttilde(1, j, k) - Ttilde(0, j, k)) / g.dx
                        : (i == g.nx - 1) ? (Ttilde(i, j, k) - Ttilde(i - 1, j, k)) / g.dx
                        : (Ttilde(i + 1, j, k) - Ttilde(i - 1, j, k)) / (2.0 * g.dx);
        const double ty = (j == 0) ? (Ttilde(i, 1, k) - Ttilde(i, 0, k)) / g.dy
                        : (j == g.ny - 1) ? (Ttilde(i, j, k) - Ttilde(i, j - 1, k)) / g.dy
                        : (Ttilde(i, j + 1, k) - Ttilde(i, j - 1, k)) / (2.0 * g.dy);
        return std::sqrt(tx * tx + ty * ty);
    };
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const bool near = i < width_cells || i >= g.nx - width_cells ||
                                  j < width_cells || j >= g.ny - width_cells;
                if (near) m = std::max(m, grad_mag(i, j, k));
            }
    return m;
}

}  // namespace pghd
