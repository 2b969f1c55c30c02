#include "pghd/boundary.hpp"

#include <cmath>

namespace pghd {

namespace {

// Oblique edge rule: ghost = mirror - (f*dn/eps) * tangential slope taken
// from the first interior line. tcoord is the tangential index; slope is
// centered inside the wall, one-sided at the two end rows.
void append_tangential(std::vector<std::pair<std::pair<int, int>, double>>& terms,
                       bool x_wall, int line, int t, int tmax, double c) {
    // x_wall: line = interior i, t = j (tangent y). Otherwise line = interior j, t = i.
    auto cell = [&](int tt) {
        return x_wall ? std::make_pair(line, tt) : std::make_pair(tt, line);
    };
    if (t > 0 && t < tmax - 1) {
        terms.push_back({cell(t + 1), -0.5 * c});
        terms.push_back({cell(t - 1), +0.5 * c});
    } else if (t == 0) {
        terms.push_back({cell(1), -c});
        terms.push_back({cell(0), +c});
    } else {
        terms.push_back({cell(tmax - 1), -c});
        terms.push_back({cell(tmax - 2), +c});
    }
}

}  // namespace

LateralFillPlan build_lateral_fill_plan(const PhysParams& p, const Grid& g) {
    LateralFillPlan plan;
    const int nx = g.nx, ny = g.ny;

    if (g.periodic()) {
        for (int j = -1; j <= ny; ++j)
            for (int i = -1; i <= nx; ++i) {
                if (i >= 0 && i < nx && j >= 0 && j < ny) continue;
                const int wi = (i % nx + nx) % nx;
                const int wj = (j % ny + ny) % ny;
                plan.entries.push_back({i, j, {{{wi, wj}, 1.0}}});
            }
        return plan;
    }

    // Edges. The oblique condition on x-walls reads eps*T_x + f*T_y = 0,
    // on y-walls eps*T_y - f*T_x = 0 (e-vector written out for each normal).
    for (int j = 0; j < ny; ++j) {
        const double f = p.coriolis(g.y(j));
        const double c = f * g.dx / (p.epsilon * g.dy);
        {  // x-min: T(-1) = T(0) + (f dx/eps) T_y
            LateralFillPlan::Entry e{-1, j, {{{0, j}, 1.0}}};
            append_tangential(e.terms, true, 0, j, ny, -c);
            plan.entries.push_back(std::move(e));
        }
        {  // x-max: T(nx) = T(nx-1) - (f dx/eps) T_y
            LateralFillPlan::Entry e{nx, j, {{{nx - 1, j}, 1.0}}};
            append_tangential(e.terms, true, nx - 1, j, ny, +c);
            plan.entries.push_back(std::move(e));
        }
    }
    const double f_y0 = p.coriolis(0.0);
    const double f_yL = p.coriolis(g.Ly);
    for (int i = 0; i < nx; ++i) {
        {  // y-min: T(i,-1) = T(i,0) - (f(0) dy/eps) T_x
            const double c = f_y0 * g.dy / (p.epsilon * g.dx);
            LateralFillPlan::Entry e{i, -1, {{{i, 0}, 1.0}}};
            append_tangential(e.terms, false, 0, i, nx, +c);
            plan.entries.push_back(std::move(e));
        }
        {  // y-max: T(i,ny) = T(i,ny-1) + (f(Ly) dy/eps) T_x
            const double c = f_yL * g.dy / (p.epsilon * g.dx);
            LateralFillPlan::Entry e{i, ny, {{{i, ny - 1}, 1.0}}};
            append_tangential(e.terms, false, ny - 1, i, nx, -c);
            plan.entries.push_back(std::move(e));
        }
    }

    // Corners: average of the two mirrored edge ghosts. Expressed directly
    // in interior values by merging the adjacent edge entries.
    auto find_entry = [&](int gi, int gj) -> const LateralFillPlan::Entry& {
        for (const auto& e : plan.entries)
            if (e.gi == gi && e.gj == gj) return e;
        throw std::logic_error("fill plan: missing edge entry");
    };
    const int ci[4] = {-1, nx, -1, nx};
    const int cj[4] = {-1, -1, ny, ny};
    for (int c = 0; c < 4; ++c) {
        const int i = ci[c], j = cj[c];
        const int ei = (i < 0) ? 0 : nx - 1;   // interior row adjacent in x
        const int ej = (j < 0) ? 0 : ny - 1;   // interior row adjacent in y
        LateralFillPlan::Entry e{i, j, {}};
        for (const auto& t : find_entry(i, ej).terms) e.terms.push_back({t.first, 0.5 * t.second});
        for (const auto& t : find_entry(ei, j).terms) e.terms.push_back({t.first, 0.5 * t.second});
        plan.entries.push_back(std::move(e));
    }
    return plan;
}

void fill_lateral1(ScalarField3& T, const LateralFillPlan& plan) {
    const int nz = T.nz();
    for (const auto& e : plan.entries)
        for (int k = 0; k < nz; ++k) {
            double v = 0.0;
            for (const auto& t : e.terms) v += t.second * T(t.first.first, t.first.second, k);
            T(e.gi, e.gj, k) = v;
        }
}

void fill_lateral1_2d(ScalarField2& t2, const LateralFillPlan& plan) {
    for (const auto& e : plan.entries) {
        double v = 0.0;
        for (const auto& t : e.terms) v += t.second * t2(t.first.first, t.first.second);
        t2(e.gi, e.gj) = v;
    }
}

namespace {

// Second-layer lateral fill at one z-level: solve q(T).n = 0 at each wall
// face for the outer ghost. `at(i,j)` accesses the level (ghost1 and interior
// filled); `tzz(i,j)` is the vertical second difference (zero for sections).
// Cross-derivative pieces of s at ghost cells are shifted one cell inward to
// keep the solve explicit.
template <class At, class AtC, class Tzz>
void solve_ghost2_level(At&& set, AtC&& at, Tzz&& tzz, const PhysParams& p, const Grid& g) {
    const int nx = g.nx, ny = g.ny;
    const double dx = g.dx, dy = g.dy;

    auto lap5 = [&](int i, int j) {
        return (at(i + 1, j) - 2.0 * at(i, j) + at(i - 1, j)) / (dx * dx) +
               (at(i, j + 1) - 2.0 * at(i, j) + at(i, j - 1)) / (dy * dy);
    };
    // full s = div(H^T grad T) at a cell whose 3x3 neighborhood is filled
    auto s_full = [&](int i, int j) {
        const double foe_c = p.coriolis(g.y(j)) / p.epsilon;
        auto ux = [&](int ii) {  // x-face ii+1/2
            const double av = (at(ii, j + 1) - at(ii, j - 1) + at(ii + 1, j + 1) -
                               at(ii + 1, j - 1)) / (4.0 * dy);
            return (at(ii + 1, j) - at(ii, j)) / dx + foe_c * av;
        };
        auto uy = [&](int jj) {  // y-face jj+1/2
            const double foe_f = p.coriolis((jj + 1) * dy) / p.epsilon;
            const double av = (at(i + 1, jj) - at(i - 1, jj) + at(i + 1, jj + 1) -
                               at(i - 1, jj + 1)) / (4.0 * dx);
            return (at(i, jj + 1) - at(i, jj)) / dy - foe_f * av;
        };
        return (ux(i) - ux(i - 1)) / dx + (uy(j) - uy(j - 1)) / dy;
    };
    auto cross = [&](int i, int j) { return s_full(i, j) - lap5(i, j); };

    const bool degenerate = p.lambda <= 0.0;

    // tangential derivative of s along a wall from the interior line
    auto s_tan = [&](bool x_wall, int line, int t, int tmax, double dt) {
        auto s_at = [&](int tt) { return x_wall ? s_full(line, tt) : s_full(tt, line); };
        if (t > 0 && t < tmax - 1) return (s_at(t + 1) - s_at(t - 1)) / (2.0 * dt);
        if (t == 0) return (s_at(1) - s_at(0)) / dt;
        return (s_at(tmax - 1) - s_at(tmax - 2)) / dt;
    };

    // x-max wall, ghost2 at i = nx+1
    for (int j = 0; j < ny; ++j) {
        if (degenerate) { set(nx + 1, j, at(nx - 2, j)); continue; }
        const double foe = p.coriolis(g.y(j)) / p.epsilon;
        const double Tx = (at(nx, j) - at(nx - 1, j)) / dx;
        const double Zx = (tzz(nx, j) - tzz(nx - 1, j)) / dx;
        const double sg = s_full(nx - 1, j) +
                          dx * (foe * s_tan(true, nx - 1, j, ny, dy) +
                                (p.K_h * Tx - p.mu * Zx) / p.lambda);
        const double ypart = (at(nx, j + 1) - 2.0 * at(nx, j) + at(nx, j - 1)) / (dy * dy);
        set(nx + 1, j, dx * dx * (sg - ypart - cross(nx - 1, j)) + 2.0 * at(nx, j) - at(nx - 1, j));
    }
    // x-min wall, ghost2 at i = -2
    for (int j = 0; j < ny; ++j) {
        if (degenerate) { set(-2, j, at(1, j)); continue; }
        const double foe = p.coriolis(g.y(j)) / p.epsilon;
        const double Tx = (at(0, j) - at(-1, j)) / dx;
        const double Zx = (tzz(0, j) - tzz(-1, j)) / dx;
        const double sg = s_full(0, j) -
                          dx * (foe * s_tan(true, 0, j, ny, dy) +
                                (p.K_h * Tx - p.mu * Zx) / p.lambda);
        const double ypart = (at(-1, j + 1) - 2.0 * at(-1, j) + at(-1, j - 1)) / (dy * dy);
        set(-2, j, dx * dx * (sg - ypart - cross(0, j)) + 2.0 * at(-1, j) - at(0, j));
    }
    // y-max wall, ghost2 at j = ny+1
    for (int i = 0; i < nx; ++i) {
        if (degenerate) { set(i, ny + 1, at(i, ny - 2)); continue; }
        const double foe = p.coriolis(g.Ly) / p.epsilon;
        const double Ty = (at(i, ny) - at(i, ny - 1)) / dy;
        const double Zy = (tzz(i, ny) - tzz(i, ny - 1)) / dy;
        const double sg = s_full(i, ny - 1) +
                          dy * (-foe * s_tan(false, ny - 1, i, nx, dx) +
                                (p.K_h * Ty - p.mu * Zy) / p.lambda);
        const double xpart = (at(i + 1, ny) - 2.0 * at(i, ny) + at(i - 1, ny)) / (dx * dx);
        set(i, ny + 1, dy * dy * (sg - xpart - cross(i, ny - 1)) + 2.0 * at(i, ny) - at(i, ny - 1));
    }
    // y-min wall, ghost2 at j = -2
    for (int i = 0; i < nx; ++i) {
        if (degenerate) { set(i, -2, at(i, 1)); continue; }
        const double foe = p.coriolis(0.0) / p.epsilon;
        const double Ty = (at(i, 0) - at(i, -1)) / dy;
        const double Zy = (tzz(i, 0) - tzz(i, -1)) / dy;
        const double sg = s_full(i, 0) +
                          dy * (foe * s_tan(false, 0, i, nx, dx) -
                                (p.K_h * Ty - p.mu * Zy) / p.lambda);
        const double xpart = (at(i + 1, -1) - 2.0 * at(i, -1) + at(i - 1, -1)) / (dx * dx);
        set(i, -2, dy * dy * (sg - xpart - cross(i, 0)) + 2.0 * at(i, -1) - at(i, 0));
    }

    // Remaining second-layer cells (corner strips): clamp toward the filled
    // ring. Unused by any stencil; kept finite and constant-preserving.
    auto clampi = [&](int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); };
    for (int j = -2; j <= ny + 1; ++j)
        for (int i = -2; i <= nx + 1; ++i) {
            const bool ring2 = (i == -2 || i == nx + 1 || j == -2 || j == ny + 1);
            if (!ring2) continue;
            const bool edge_done = ((i == -2 || i == nx + 1) && j >= 0 && j < ny) ||
                                   ((j == -2 || j == ny + 1) && i >= 0 && i < nx);
            if (edge_done) continue;
            set(i, j, at(clampi(i, -1, nx), clampi(j, -1, ny)));
        }
}

}  // namespace

void fill_ghosts(ScalarField3& T, const PhysParams& p, const Grid& g, TopBC top) {
    const int nx = g.nx, ny = g.ny, nz = g.nz;
    const LateralFillPlan plan = build_lateral_fill_plan(p, g);
    fill_lateral1(T, plan);

    // Vertical ghosts for interior and first-layer lateral columns.
    const double r1 = (top == TopBC::robin) ? robin_ghost_factor(p, g) : 1.0;
    const double a = p.alpha * g.dz / (2.0 * p.K_v);
    const double r2 = (top == TopBC::robin) ? (1.0 - 3.0 * a) / (1.0 + 3.0 * a) : 1.0;
    for (int j = -1; j <= ny; ++j)
        for (int i = -1; i <= nx; ++i) {
            T(i, j, -1) = T(i, j, 0);
            T(i, j, -2) = T(i, j, 1);
            T(i, j, nz) = r1 * T(i, j, nz - 1);
            T(i, j, nz + 1) = r2 * T(i, j, nz - 2);
        }

    if (g.periodic()) {
        for (int k = -NG; k < nz + NG; ++k)
            for (int j = -NG; j < ny + NG; ++j)
                for (int i = -NG; i < nx + NG; ++i) {
                    if (i >= 0 && i < nx && j >= 0 && j < ny) continue;
                    T(i, j, k) = T((i % nx + nx) % nx, (j % ny + ny) % ny, k);
                }
        return;
    }

    for (int k = 0; k < nz; ++k) {
        auto set = [&](int i, int j, double v) { T(i, j, k) = v; };
        auto at = [&](int i, int j) { return T(i, j, k); };
        auto tzz = [&](int i, int j) {
            return (T(i, j, k + 1) - 2.0 * T(i, j, k) + T(i, j, k - 1)) / (g.dz * g.dz);
        };
        solve_ghost2_level(set, at, tzz, p, g);
    }
    // Vertical ghosts of the second lateral layer: mirror of the adjacent
    // filled level (never consumed by a stencil).
    for (int j = -NG; j < ny + NG; ++j)
        for (int i = -NG; i < nx + NG; ++i) {
            const bool ring2 = (i == -2 || i == nx + 1 || j == -2 || j == ny + 1);
            if (!ring2) continue;
            T(i, j, -1) = T(i, j, 0);
            T(i, j, -2) = T(i, j, 1);
            T(i, j, nz) = r1 * T(i, j, nz - 1);
            T(i, j, nz + 1) = r2 * T(i, j, nz - 2);
        }
}

void fill_ghosts_2d(ScalarField2& t, const PhysParams& p, const Grid& g) {
    const int nx = g.nx, ny = g.ny;
    const LateralFillPlan plan = build_lateral_fill_plan(p, g);
    fill_lateral1_2d(t, plan);
    if (g.periodic()) {
        for (int j = -NG; j < ny + NG; ++j)
            for (int i = -NG; i < nx + NG; ++i) {
                if (i >= 0 && i < nx && j >= 0 && j < ny) continue;
                t(i, j) = t((i % nx + nx) % nx, (j % ny + ny) % ny);
            }
        return;
    }
    auto set = [&](int i, int j, double v) { t(i, j) = v; };
    auto at = [&](int i, int j) { return t(i, j); };
    auto tzz = [](int, int) { return 0.0; };
    solve_ghost2_level(set, at, tzz, p, g);
}

}  // namespace pghd
