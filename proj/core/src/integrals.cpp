#include "pghd/integrals.hpp"

#include <cmath>
#include <stdexcept>

namespace pghd {

double inner_l2(const ScalarField3& a, const ScalarField3& b, const Grid& g) {
    if (!a.same_shape(b)) throw std::invalid_argument("inner_l2: grid mismatch");
    double s = 0.0;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) s += a(i, j, k) * b(i, j, k);
    return s * g.cell_volume();
}

double l2_norm_sq(const ScalarField3& a, const Grid& g) { return inner_l2(a, a, g); }

double inner_l2_2d(const ScalarField2& a, const ScalarField2& b, const Grid& g) {
    if (!a.same_shape(b)) throw std::invalid_argument("inner_l2_2d: grid mismatch");
    double s = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) s += a(i, j) * b(i, j);
    return s * g.cell_area_xy();
}

ScalarField3 depth_integral(const ScalarField3& f, const Grid& g) {
    ScalarField3 out(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double below = 0.0;  // full-cell sum strictly below cell k
            for (int k = 0; k < g.nz; ++k) {
                out(i, j, k) = (below + 0.5 * f(i, j, k)) * g.dz;
                below += f(i, j, k);
            }
        }
    return out;
}

double max_abs(const ScalarField3& f) {
    double m = 0.0;
    for (int k = 0; k < f.nz(); ++k)
        for (int j = 0; j < f.ny(); ++j)
            for (int i = 0; i < f.nx(); ++i) m = std::max(m, std::abs(f(i, j, k)));
    return m;
}

double max_abs(const VelocityField& vel) {
    double m = std::max(max_abs(vel.v1), max_abs(vel.v2));
    for (double v : vel.u_face) m = std::max(m, std::abs(v));
    for (double v : vel.v_face) m = std::max(m, std::abs(v));
    for (double v : vel.w) m = std::max(m, std::abs(v));
    return m;
}

bool has_non_finite(const ScalarField3& f) {
    for (int k = 0; k < f.nz(); ++k)
        for (int j = 0; j < f.ny(); ++j)
            for (int i = 0; i < f.nx(); ++i)
                if (!std::isfinite(f(i, j, k))) return true;
    return false;
}

void axpy_interior(ScalarField3& a, double s, const ScalarField3& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("axpy_interior: grid mismatch");
    for (int k = 0; k < a.nz(); ++k)
        for (int j = 0; j < a.ny(); ++j)
            for (int i = 0; i < a.nx(); ++i) a(i, j, k) += s * b(i, j, k);
}

double h1_norm_sq_2d(const ScalarField2& t, const Grid& g) {
    const int nx = g.nx, ny = g.ny;
    auto at = [&](int i, int j) {
        if (g.periodic()) {
            i = (i % nx + nx) % nx;
            j = (j % ny + ny) % ny;
        } else {  // mirror
            if (i < 0) i = 0;
            if (i >= nx) i = nx - 1;
            if (j < 0) j = 0;
            if (j >= ny) j = ny - 1;
        }
        return t(i, j);
    };
    double s = 0.0;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const double v = t(i, j);
            const double tx = (at(i + 1, j) - at(i - 1, j)) / (2.0 * g.dx);
            const double ty = (at(i, j + 1) - at(i, j - 1)) / (2.0 * g.dy);
            s += v * v + tx * tx + ty * ty;
        }
    return s * g.cell_area_xy();
}

}  // namespace pghd
