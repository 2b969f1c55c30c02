#include "pghd/diffusion.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace pghd {

namespace {

// ---------------------------------------------------------------------------
// s = div(H^T grad T), evaluated pointwise from a ghost-filled field
// ---------------------------------------------------------------------------

// s at one cell from face values of H^T grad T. Valid wherever the 3x3
// horizontal neighborhood (same level) is filled.
inline double s_at(const ScalarField3& T, const PhysParams& p, const Grid& g,
                   int i, int j, int k) {
    const double dx = g.dx, dy = g.dy;
    const double foe_c = p.coriolis(g.y(j)) / p.epsilon;
    auto ux = [&](int ii) {
        const double av = (T(ii, j + 1, k) - T(ii, j - 1, k) + T(ii + 1, j + 1, k) -
                           T(ii + 1, j - 1, k)) / (4.0 * dy);
        return (T(ii + 1, j, k) - T(ii, j, k)) / dx + foe_c * av;
    };
    auto uy = [&](int jj) {
        const double foe_f = p.coriolis((jj + 1) * dy) / p.epsilon;
        const double av = (T(i + 1, jj, k) - T(i - 1, jj, k) + T(i + 1, jj + 1, k) -
                           T(i - 1, jj + 1, k)) / (4.0 * dx);
        return (T(i, jj + 1, k) - T(i, jj, k)) / dy - foe_f * av;
    };
    return (ux(i) - ux(i - 1)) / dx + (uy(j) - uy(j - 1)) / dy;
}

inline double s_at_2d(const ScalarField2& T, const PhysParams& p, const Grid& g,
                      int i, int j) {
    const double dx = g.dx, dy = g.dy;
    const double foe_c = p.coriolis(g.y(j)) / p.epsilon;
    auto ux = [&](int ii) {
        const double av = (T(ii, j + 1) - T(ii, j - 1) + T(ii + 1, j + 1) -
                           T(ii + 1, j - 1)) / (4.0 * dy);
        return (T(ii + 1, j) - T(ii, j)) / dx + foe_c * av;
    };
    auto uy = [&](int jj) {
        const double foe_f = p.coriolis((jj + 1) * dy) / p.epsilon;
        const double av = (T(i + 1, jj) - T(i - 1, jj) + T(i + 1, jj + 1) -
                           T(i - 1, jj + 1)) / (4.0 * dx);
        return (T(i, jj + 1) - T(i, jj)) / dy - foe_f * av;
    };
    return (ux(i) - ux(i - 1)) / dx + (uy(j) - uy(j - 1)) / dy;
}

}  // namespace

ScalarField3 elliptic_core(const ScalarField3& T, const PhysParams& p, const Grid& g) {
    ScalarField3 out(g);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) out(i, j, k) = s_at(T, p, g, i, j, k);
    return out;
}

ScalarField2 elliptic_core_2d(const ScalarField2& t, const PhysParams& p, const Grid& g) {
    ScalarField2 out(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) out(i, j) = s_at_2d(t, p, g, i, j);
    return out;
}

// ---------------------------------------------------------------------------
// Naive flux composition (consistency / diagnostics path)
// ---------------------------------------------------------------------------

namespace {

// s on the extended ring [-1..nx] x [-1..ny] (corner ghosts included: the
// cross-term averages at corner-adjacent faces reference them). Needs both
// ghost layers of T.
ScalarField3 s_extended(const ScalarField3& T, const PhysParams& p, const Grid& g) {
    ScalarField3 s(g);
    for (int k = 0; k < g.nz; ++k)
        for (int j = -1; j <= g.ny; ++j)
            for (int i = -1; i <= g.nx; ++i) s(i, j, k) = s_at(T, p, g, i, j, k);
    return s;
}

inline double tzz_at(const ScalarField3& T, const Grid& g, int i, int j, int k) {
    return (T(i, j, k + 1) - 2.0 * T(i, j, k) + T(i, j, k - 1)) / (g.dz * g.dz);
}

}  // namespace

HorizontalFlux flux_q(const ScalarField3& T, const PhysParams& p, const Grid& g) {
    const int nx = g.nx, ny = g.ny, nz = g.nz;
    HorizontalFlux q;
    q.nx = nx; q.ny = ny; q.nz = nz;
    q.qx.assign(static_cast<std::size_t>(nx + 1) * ny * nz, 0.0);
    q.qy.assign(static_cast<std::size_t>(nx) * (ny + 1) * nz, 0.0);

    const ScalarField3 s = (p.lambda > 0.0) ? s_extended(T, p, g) : ScalarField3(g);
    const bool per = g.periodic();

    for (int k = 0; k < nz; ++k) {
        // x faces: interior faces always; wrap faces in periodic mode; wall
        // faces keep the imposed zero.
        const int if_lo = per ? 0 : 1;
        const int if_hi = per ? nx : nx - 1;
        for (int j = 0; j < ny; ++j) {
            const double foe = p.coriolis(g.y(j)) / p.epsilon;
            for (int f = if_lo; f <= if_hi; ++f) {
                const int iL = f - 1, iR = f;
                double v = -p.K_h * (T(iR, j, k) - T(iL, j, k)) / g.dx +
                           p.mu * (tzz_at(T, g, iR, j, k) - tzz_at(T, g, iL, j, k)) / g.dx;
                if (p.lambda > 0.0) {
                    const double sx = (s(iR, j, k) - s(iL, j, k)) / g.dx;
                    const double sy = (s(iL, j + 1, k) - s(iL, j - 1, k) +
                                       s(iR, j + 1, k) - s(iR, j - 1, k)) / (4.0 * g.dy);
                    v += p.lambda * (sx - foe * sy);
                }
                q.x(f, j, k) = v;
            }
        }
        const int jf_lo = per ? 0 : 1;
        const int jf_hi = per ? ny : ny - 1;
        for (int f = jf_lo; f <= jf_hi; ++f) {
            const int jB = f - 1, jT = f;
            const double foe = p.coriolis(f * g.dy) / p.epsilon;
            for (int i = 0; i < nx; ++i) {
                double v = -p.K_h * (T(i, jT, k) - T(i, jB, k)) / g.dy +
                           p.mu * (tzz_at(T, g, i, jT, k) - tzz_at(T, g, i, jB, k)) / g.dy;
                if (p.lambda > 0.0) {
                    const double sy = (s(i, jT, k) - s(i, jB, k)) / g.dy;
                    const double sx = (s(i + 1, jB, k) - s(i - 1, jB, k) +
                                       s(i + 1, jT, k) - s(i - 1, jT, k)) / (4.0 * g.dx);
                    v += p.lambda * (sy + foe * sx);
                }
                q.y(i, f, k) = v;
            }
        }
        if (per) {  // the wrap face appears at both array ends
            for (int j = 0; j < ny; ++j) q.x(0, j, k) = q.x(nx, j, k);
            for (int i = 0; i < nx; ++i) q.y(i, 0, k) = q.y(i, ny, k);
        }
    }
    return q;
}

ScalarField3 apply_divq_flux(const ScalarField3& T, const PhysParams& p, const Grid& g) {
    const HorizontalFlux q = flux_q(T, p, g);
    ScalarField3 out(g);
    const double rtop = robin_ghost_factor(p, g);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                double v = (q.x(i + 1, j, k) - q.x(i, j, k)) / g.dx +
                           (q.y(i, j + 1, k) - q.y(i, j, k)) / g.dy;
                // -K_v T_zz with the vertical wall fluxes from the ghosts:
                // mirror at the bottom, Robin factor at the surface.
                const double up = (k == g.nz - 1) ? (rtop - 1.0) * T(i, j, k) / g.dz
                                                  : (T(i, j, k + 1) - T(i, j, k)) / g.dz;
                const double dn = (k == 0) ? 0.0 : (T(i, j, k) - T(i, j, k - 1)) / g.dz;
                v -= p.K_v * (up - dn) / g.dz;
                out(i, j, k) = v;
            }
    return out;
}

ScalarField2 apply_divq_flux_2d(const ScalarField2& t, const PhysParams& p, const Grid& g) {
    const int nx = g.nx, ny = g.ny;
    const bool per = g.periodic();
    ScalarField2 s(g);
    if (p.lambda > 0.0) {
        for (int j = -1; j <= ny; ++j)
            for (int i = -1; i <= nx; ++i) s(i, j) = s_at_2d(t, p, g, i, j);
    }
    std::vector<double> qx(static_cast<std::size_t>(nx + 1) * ny, 0.0);
    std::vector<double> qy(static_cast<std::size_t>(nx) * (ny + 1), 0.0);
    auto QX = [&](int f, int j) -> double& { return qx[f + (nx + 1) * static_cast<std::size_t>(j)]; };
    auto QY = [&](int i, int f) -> double& { return qy[i + nx * static_cast<std::size_t>(f)]; };
    for (int j = 0; j < ny; ++j) {
        const double foe = p.coriolis(g.y(j)) / p.epsilon;
        for (int f = (per ? 0 : 1); f <= (per ? nx : nx - 1); ++f) {
            const int iL = f - 1, iR = f;
            double v = -p.K_h * (t(iR, j) - t(iL, j)) / g.dx;
            if (p.lambda > 0.0) {
                const double sx = (s(iR, j) - s(iL, j)) / g.dx;
                const double sy = (s(iL, j + 1) - s(iL, j - 1) + s(iR, j + 1) -
                                   s(iR, j - 1)) / (4.0 * g.dy);
                v += p.lambda * (sx - foe * sy);
            }
            QX(f, j) = v;
        }
    }
    for (int f = (per ? 0 : 1); f <= (per ? ny : ny - 1); ++f) {
        const int jB = f - 1, jT = f;
        const double foe = p.coriolis(f * g.dy) / p.epsilon;
        for (int i = 0; i < nx; ++i) {
            double v = -p.K_h * (t(i, jT) - t(i, jB)) / g.dy;
            if (p.lambda > 0.0) {
                const double sy = (s(i, jT) - s(i, jB)) / g.dy;
                const double sx = (s(i + 1, jB) - s(i - 1, jB) + s(i + 1, jT) -
                                   s(i - 1, jT)) / (4.0 * g.dx);
                v += p.lambda * (sy + foe * sx);
            }
            QY(i, f) = v;
        }
    }
    if (per) {
        for (int j = 0; j < ny; ++j) QX(0, j) = QX(nx, j);
        for (int i = 0; i < nx; ++i) QY(i, 0) = QY(i, ny);
    }
    ScalarField2 out(g);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            out(i, j) = (QX(i + 1, j) - QX(i, j)) / g.dx + (QY(i, j + 1) - QY(i, j)) / g.dy;
    return out;
}

// ---------------------------------------------------------------------------
// Variational quadrature rows (single source of truth for bilinear_a,
// apply_A_matfree, and assemble)
// ---------------------------------------------------------------------------

namespace {

struct RowSpec {
    int n = 0;
    struct E { int i, j, k; double c; } e[16];
    void add(int i, int j, int k, double c) {
        for (int t = 0; t < n; ++t)
            if (e[t].i == i && e[t].j == j && e[t].k == k) { e[t].c += c; return; }
        e[n].i = i; e[n].j = j; e[n].k = k; e[n].c = c; ++n;
    }
};

// Emits every quadrature row with its weight w; the a-form value is
// dV * sum_rows w * (row.R1)(row.R2) and the operator matrix is
// sum_rows w * row^T row.
template <class F>
void for_each_quadratic_row(const PhysParams& p, const Grid& g, F&& emit) {
    const int nx = g.nx, ny = g.ny, nz = g.nz;
    const bool per = g.periodic();
    const double alpha_gw = p.alpha * p.mu / (p.K_v * g.dz);

    // horizontal gradient faces: K_h everywhere, plus the alpha*(mu/K_v)
    // surface gradient on the top cell plane
    for (int k = 0; k < nz; ++k) {
        for (int j = 0; j < ny; ++j)
            for (int i0 = (per ? 0 : -1); i0 <= nx - 1; ++i0) {
                RowSpec r;
                r.add(i0 + 1, j, k, 1.0 / g.dx);
                r.add(i0, j, k, -1.0 / g.dx);
                emit(p.K_h, r);
                if (p.alpha > 0.0 && k == nz - 1) emit(alpha_gw, r);
            }
        for (int j0 = (per ? 0 : -1); j0 <= ny - 1; ++j0)
            for (int i = 0; i < nx; ++i) {
                RowSpec r;
                r.add(i, j0 + 1, k, 1.0 / g.dy);
                r.add(i, j0, k, -1.0 / g.dy);
                emit(p.K_h, r);
                if (p.alpha > 0.0 && k == nz - 1) emit(alpha_gw, r);
            }
    }
    // vertical gradient, interior z-faces only (the Robin physics is carried
    // by the alpha surface terms)
    for (int k0 = 0; k0 <= nz - 2; ++k0)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                RowSpec r;
                r.add(i, j, k0 + 1, 1.0 / g.dz);
                r.add(i, j, k0, -1.0 / g.dz);
                emit(p.K_v, r);
            }
    // lambda s-rows
    if (p.lambda > 0.0) {
        for (int k = 0; k < nz; ++k)
            for (int j = 0; j < ny; ++j) {
                const double foe_c = p.coriolis(g.y(j)) / p.epsilon;
                for (int i = 0; i < nx; ++i) {
                    RowSpec r;
                    for (int sgn = -1; sgn <= 1; sgn += 2) {       // x faces
                        const int ii = (sgn > 0) ? i : i - 1;      // face ii+1/2
                        const double sc = sgn / g.dx;
                        r.add(ii + 1, j, k, sc / g.dx);
                        r.add(ii, j, k, -sc / g.dx);
                        const double cav = sc * foe_c / (4.0 * g.dy);
                        r.add(ii, j + 1, k, cav);
                        r.add(ii, j - 1, k, -cav);
                        r.add(ii + 1, j + 1, k, cav);
                        r.add(ii + 1, j - 1, k, -cav);
                    }
                    for (int sgn = -1; sgn <= 1; sgn += 2) {       // y faces
                        const int jj = (sgn > 0) ? j : j - 1;      // face jj+1/2
                        const double sc = sgn / g.dy;
                        const double foe_f = p.coriolis((jj + 1) * g.dy) / p.epsilon;
                        r.add(i, jj + 1, k, sc / g.dy);
                        r.add(i, jj, k, -sc / g.dy);
                        const double cav = -sc * foe_f / (4.0 * g.dx);
                        r.add(i + 1, jj, k, cav);
                        r.add(i - 1, jj, k, -cav);
                        r.add(i + 1, jj + 1, k, cav);
                        r.add(i - 1, jj + 1, k, -cav);
                    }
                    emit(p.lambda, r);
                }
            }
    }
    // mu mixed gradients: d/dx(dT/dz) and d/dy(dT/dz) at face-edge locations
    for (int k0 = 0; k0 <= nz - 2; ++k0) {
        const double q = 1.0 / (g.dx * g.dz);
        for (int j = 0; j < ny; ++j)
            for (int i0 = (per ? 0 : -1); i0 <= nx - 1; ++i0) {
                RowSpec r;
                r.add(i0 + 1, j, k0 + 1, q);
                r.add(i0, j, k0 + 1, -q);
                r.add(i0 + 1, j, k0, -q);
                r.add(i0, j, k0, q);
                emit(p.mu, r);
            }
        const double qy = 1.0 / (g.dy * g.dz);
        for (int j0 = (per ? 0 : -1); j0 <= ny - 1; ++j0)
            for (int i = 0; i < nx; ++i) {
                RowSpec r;
                r.add(i, j0 + 1, k0 + 1, qy);
                r.add(i, j0, k0 + 1, -qy);
                r.add(i, j0 + 1, k0, -qy);
                r.add(i, j0, k0, qy);
                emit(p.mu, r);
            }
    }
    // alpha surface mass on the top cell plane
    if (p.alpha > 0.0) {
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                RowSpec r;
                r.add(i, j, nz - 1, 1.0);
                emit(p.alpha / g.dz, r);
            }
    }
}

}  // namespace

double bilinear_a(const ScalarField3& R1, const ScalarField3& R2,
                  const PhysParams& p, const Grid& g) {
    if (!R1.same_shape(R2)) throw std::invalid_argument("bilinear_a: grid mismatch");
    double acc = 0.0;
    for_each_quadratic_row(p, g, [&](double w, const RowSpec& r) {
        double v1 = 0.0, v2 = 0.0;
        for (int t = 0; t < r.n; ++t) {
            v1 += r.e[t].c * R1(r.e[t].i, r.e[t].j, r.e[t].k);
            v2 += r.e[t].c * R2(r.e[t].i, r.e[t].j, r.e[t].k);
        }
        acc += w * v1 * v2;
    });
    return acc * g.cell_volume();
}

double v2_norm_sq(const ScalarField3& R, const PhysParams& p, const Grid& g) {
    return bilinear_a(R, R, p, g);
}

ScalarField3 apply_A_matfree(const ScalarField3& T, const PhysParams& p, const Grid& g) {
    ScalarField3 acc(g);  // extended accumulator (ghost slots used)
    for_each_quadratic_row(p, g, [&](double w, const RowSpec& r) {
        double v = 0.0;
        for (int t = 0; t < r.n; ++t) v += r.e[t].c * T(r.e[t].i, r.e[t].j, r.e[t].k);
        v *= w;
        for (int t = 0; t < r.n; ++t) acc(r.e[t].i, r.e[t].j, r.e[t].k) += r.e[t].c * v;
    });
    ScalarField3 out(g);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) out(i, j, k) = acc(i, j, k);
    const LateralFillPlan plan = build_lateral_fill_plan(p, g);
    for (const auto& e : plan.entries)
        for (int k = 0; k < g.nz; ++k) {
            const double gv = acc(e.gi, e.gj, k);
            if (gv == 0.0) continue;
            for (const auto& t : e.terms)
                out(t.first.first, t.first.second, k) += t.second * gv;
        }
    return out;
}

DiffusionOperator assemble(const Grid& g, const PhysParams& p,
                           std::int64_t cap, bool allow_zero_lambda) {
    p.validate(allow_zero_lambda);
    const std::int64_t n = g.n_cells();
    if (n > cap)
        throw std::runtime_error("assemble: " + std::to_string(n) +
                                 " unknowns exceed the cap of " + std::to_string(cap));

    const int nx = g.nx, ny = g.ny, nz = g.nz;
    const int exi = nx + 2, eyj = ny + 2;
    auto ext_id = [&](int i, int j, int k) {
        return (i + 1) + exi * ((j + 1) + static_cast<std::int64_t>(eyj) * k);
    };
    auto int_id = [&](int i, int j, int k) {
        return i + static_cast<std::int64_t>(nx) * (j + static_cast<std::int64_t>(ny) * k);
    };

    // E1: ghost-filled extension of an interior vector
    const LateralFillPlan plan = build_lateral_fill_plan(p, g);
    std::vector<Eigen::Triplet<double>> e1t;
    e1t.reserve(static_cast<std::size_t>(n) + plan.entries.size() * 4 * nz);
    for (int k = 0; k < nz; ++k)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i)
                e1t.emplace_back(ext_id(i, j, k), int_id(i, j, k), 1.0);
    for (const auto& e : plan.entries)
        for (int k = 0; k < nz; ++k)
            for (const auto& t : e.terms)
                e1t.emplace_back(ext_id(e.gi, e.gj, k),
                                 int_id(t.first.first, t.first.second, k), t.second);
    Eigen::SparseMatrix<double> E1(static_cast<std::int64_t>(exi) * eyj * nz, n);
    E1.setFromTriplets(e1t.begin(), e1t.end());

    // B with rows scaled by sqrt(w): A = (B E1)^T (B E1)
    std::vector<Eigen::Triplet<double>> bt;
    std::int64_t nrows = 0;
    for_each_quadratic_row(p, g, [&](double w, const RowSpec& r) {
        const double sw = std::sqrt(w);
        for (int t = 0; t < r.n; ++t)
            bt.emplace_back(nrows, ext_id(r.e[t].i, r.e[t].j, r.e[t].k), sw * r.e[t].c);
        ++nrows;
    });
    Eigen::SparseMatrix<double> B(nrows, E1.rows());
    B.setFromTriplets(bt.begin(), bt.end());
    bt.clear();
    bt.shrink_to_fit();

    Eigen::SparseMatrix<double> C = B * E1;
    B.resize(0, 0);
    Eigen::SparseMatrix<double> Ct = C.transpose();
    DiffusionOperator op;
    op.grid = g;
    op.params = p;
    op.A = Ct * C;

    // symmetry cleanup + report
    Eigen::SparseMatrix<double> At = op.A.transpose();
    double amax = 0.0, dmax = 0.0;
    for (int c = 0; c < op.A.outerSize(); ++c)
        for (Eigen::SparseMatrix<double>::InnerIterator it(op.A, c); it; ++it)
            amax = std::max(amax, std::abs(it.value()));
    {
        Eigen::SparseMatrix<double> D = op.A - At;
        for (int c = 0; c < D.outerSize(); ++c)
            for (Eigen::SparseMatrix<double>::InnerIterator it(D, c); it; ++it)
                dmax = std::max(dmax, std::abs(it.value()));
    }
    op.asym_pre = (amax > 0.0) ? dmax / amax : 0.0;
    op.A = 0.5 * (op.A + At);
    {
        Eigen::SparseMatrix<double> D = op.A - Eigen::SparseMatrix<double>(op.A.transpose());
        double d2 = 0.0;
        for (int c = 0; c < D.outerSize(); ++c)
            for (Eigen::SparseMatrix<double>::InnerIterator it(D, c); it; ++it)
                d2 = std::max(d2, std::abs(it.value()));
        op.asym_post = (amax > 0.0) ? d2 / amax : 0.0;
    }
    op.A.makeCompressed();
    return op;
}

ScalarField3 DiffusionOperator::apply(const ScalarField3& T) const {
    const std::int64_t n = grid.n_cells();
    Eigen::VectorXd x(n);
    for (int k = 0; k < grid.nz; ++k)
        for (int j = 0; j < grid.ny; ++j)
            for (int i = 0; i < grid.nx; ++i)
                x[T.interior_index(i, j, k)] = T(i, j, k);
    Eigen::VectorXd y = A * x;
    ScalarField3 out(grid);
    for (int k = 0; k < grid.nz; ++k)
        for (int j = 0; j < grid.ny; ++j)
            for (int i = 0; i < grid.nx; ++i)
                out(i, j, k) = y[out.interior_index(i, j, k)];
    return out;
}

ScalarField3 apply_A(const ScalarField3& T, const DiffusionOperator& op) {
    return op.apply(T);
}

NaiveFold assemble_naive_fold(const Grid& g, const PhysParams& p, std::int64_t cap) {
    const std::int64_t n = g.n_cells();
    if (n > cap)
        throw std::runtime_error("assemble_naive_fold: grid too large for probing");
    std::vector<Eigen::Triplet<double>> tr;
    ScalarField3 e(g);
    for (int kc = 0; kc < g.nz; ++kc)
        for (int jc = 0; jc < g.ny; ++jc)
            for (int ic = 0; ic < g.nx; ++ic) {
                e.fill(0.0);
                e(ic, jc, kc) = 1.0;
                fill_ghosts(e, p, g);
                const ScalarField3 col = apply_divq_flux(e, p, g);
                const std::int64_t c = e.interior_index(ic, jc, kc);
                for (int k = 0; k < g.nz; ++k)
                    for (int j = 0; j < g.ny; ++j)
                        for (int i = 0; i < g.nx; ++i)
                            if (col(i, j, k) != 0.0)
                                tr.emplace_back(col.interior_index(i, j, k), c, col(i, j, k));
            }
    NaiveFold out;
    out.A.resize(n, n);
    out.A.setFromTriplets(tr.begin(), tr.end());
    Eigen::SparseMatrix<double> D = out.A - Eigen::SparseMatrix<double>(out.A.transpose());
    double amax = 0.0, dmax = 0.0;
    for (int c = 0; c < out.A.outerSize(); ++c)
        for (Eigen::SparseMatrix<double>::InnerIterator it(out.A, c); it; ++it)
            amax = std::max(amax, std::abs(it.value()));
    for (int c = 0; c < D.outerSize(); ++c)
        for (Eigen::SparseMatrix<double>::InnerIterator it(D, c); it; ++it)
            dmax = std::max(dmax, std::abs(it.value()));
    out.rel_asymmetry = (amax > 0.0) ? dmax / amax : 0.0;
    return out;
}

void export_triplets(const DiffusionOperator& op, std::ostream& os) {
    for (int c = 0; c < op.A.outerSize(); ++c)
        for (Eigen::SparseMatrix<double>::InnerIterator it(op.A, c); it; ++it)
            os << it.row() << " " << it.col() << " " << it.value() << "\n";
}

}  // namespace pghd
