#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pghd {

enum class LateralMode {
    physical,       ///< closed basin, oblique + flux lateral conditions
    periodic_test   ///< doubly periodic in x,y; verification mode (alpha = beta = 0)
};

/// Rectangular box Omega = (0,Lx) x (0,Ly) x (-h,0), cell-centered.
/// Cell centers: x_i = (i+1/2)dx, y_j = (j+1/2)dy, z_k = -h + (k+1/2)dz.
struct Grid {
    int nx = 16, ny = 16, nz = 8;
    double Lx = 1.0, Ly = 1.0, h = 1.0;
    double dx = 0.0, dy = 0.0, dz = 0.0;
    LateralMode lateral_mode = LateralMode::physical;

    Grid() { finalize(); }
    Grid(int nx_, int ny_, int nz_, double Lx_, double Ly_, double h_,
         LateralMode mode = LateralMode::physical)
        : nx(nx_), ny(ny_), nz(nz_), Lx(Lx_), Ly(Ly_), h(h_), lateral_mode(mode) {
        finalize();
    }

    void finalize() {
        if (nx < 4 || ny < 4 || nz < 4)
            throw std::invalid_argument("Grid: nx, ny, nz must all be >= 4");
        if (!(Lx > 0.0 && Ly > 0.0 && h > 0.0))
            throw std::invalid_argument("Grid: Lx, Ly, h must be > 0");
        dx = Lx / nx;
        dy = Ly / ny;
        dz = h / nz;
    }

    double x(int i) const { return (i + 0.5) * dx; }
    double y(int j) const { return (j + 0.5) * dy; }
    double z(int k) const { return -h + (k + 0.5) * dz; }
    /// z coordinate of the horizontal interface below cell k (k = 0..nz).
    double z_face(int k) const { return -h + k * dz; }

    bool periodic() const { return lateral_mode == LateralMode::periodic_test; }

    std::int64_t n_cells() const {
        return static_cast<std::int64_t>(nx) * ny * nz;
    }
    double cell_volume() const { return dx * dy * dz; }
    double cell_area_xy() const { return dx * dy; }

    bool same_shape(const Grid& o) const {
        return nx == o.nx && ny == o.ny && nz == o.nz && Lx == o.Lx && Ly == o.Ly &&
               h == o.h && lateral_mode == o.lateral_mode;
    }
};

}  // namespace pghd
