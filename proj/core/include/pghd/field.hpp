#pragma once

#include <vector>

#include "pghd/grid.hpp"

namespace pghd {

/// Number of ghost layers on every face. Two layers: the fourth-order
/// horizontal operator has a 5-wide stencil.
inline constexpr int NG = 2;

/// Cell-centered scalar on Omega with a two-deep ghost layer on every face.
/// Ghost values are only meaningful after an explicit ghost fill; interior
/// mutation invalidates them.
class ScalarField3 {
public:
    ScalarField3() = default;
    explicit ScalarField3(const Grid& g)
        : nx_(g.nx), ny_(g.ny), nz_(g.nz),
          sx_(1), sy_(nx_ + 2 * NG), sz_(static_cast<std::size_t>(nx_ + 2 * NG) * (ny_ + 2 * NG)),
          data_(static_cast<std::size_t>(nx_ + 2 * NG) * (ny_ + 2 * NG) * (nz_ + 2 * NG), 0.0) {}

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int nz() const { return nz_; }

    /// Indices may range over [-NG, n+NG).
    double& operator()(int i, int j, int k) { return data_[idx(i, j, k)]; }
    double operator()(int i, int j, int k) const { return data_[idx(i, j, k)]; }

    std::size_t idx(int i, int j, int k) const {
        return static_cast<std::size_t>(i + NG) * sx_ +
               static_cast<std::size_t>(j + NG) * sy_ +
               static_cast<std::size_t>(k + NG) * sz_;
    }

    /// Linear index over interior cells, x-fastest (io & operator ordering).
    std::size_t interior_index(int i, int j, int k) const {
        return static_cast<std::size_t>(i) +
               static_cast<std::size_t>(nx_) * (static_cast<std::size_t>(j) +
               static_cast<std::size_t>(ny_) * static_cast<std::size_t>(k));
    }

    std::vector<double>& raw() { return data_; }
    const std::vector<double>& raw() const { return data_; }

    void fill(double v) { std::fill(data_.begin(), data_.end(), v); }
    bool same_shape(const ScalarField3& o) const {
        return nx_ == o.nx_ && ny_ == o.ny_ && nz_ == o.nz_;
    }

private:
    int nx_ = 0, ny_ = 0, nz_ = 0;
    std::size_t sx_ = 0, sy_ = 0, sz_ = 0;
    std::vector<double> data_;
};

/// Scalar over the horizontal section M (surface data T*, Q sections,
/// depth means), with the same two-deep lateral ghost ring.
class ScalarField2 {
public:
    ScalarField2() = default;
    explicit ScalarField2(const Grid& g)
        : nx_(g.nx), ny_(g.ny),
          sy_(nx_ + 2 * NG),
          data_(static_cast<std::size_t>(nx_ + 2 * NG) * (ny_ + 2 * NG), 0.0) {}

    int nx() const { return nx_; }
    int ny() const { return ny_; }

    double& operator()(int i, int j) { return data_[idx(i, j)]; }
    double operator()(int i, int j) const { return data_[idx(i, j)]; }

    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i + NG) +
               static_cast<std::size_t>(j + NG) * sy_;
    }

    std::vector<double>& raw() { return data_; }
    const std::vector<double>& raw() const { return data_; }
    void fill(double v) { std::fill(data_.begin(), data_.end(), v); }
    bool same_shape(const ScalarField2& o) const { return nx_ == o.nx_ && ny_ == o.ny_; }

private:
    int nx_ = 0, ny_ = 0;
    std::size_t sy_ = 0;
    std::vector<double> data_;
};

/// Diagnostic velocity. v1, v2 live at cell centers; the advective face
/// velocities u_face/v_face at x/y faces (wall faces included) and w at the
/// nz+1 horizontal interfaces. w is defined by column accumulation of the
/// face divergence, so div_face(v) + delta_z w = 0 holds per cell exactly.
struct VelocityField {
    VelocityField() = default;
    explicit VelocityField(const Grid& g)
        : nx(g.nx), ny(g.ny), nz(g.nz),
          v1(g), v2(g),
          u_face(static_cast<std::size_t>(nx + 1) * ny * nz, 0.0),
          v_face(static_cast<std::size_t>(nx) * (ny + 1) * nz, 0.0),
          w(static_cast<std::size_t>(nx) * ny * (nz + 1), 0.0) {}

    int nx = 0, ny = 0, nz = 0;
    ScalarField3 v1, v2;          // cell centers (ghosts unused)
    std::vector<double> u_face;   // (nx+1, ny, nz), x-fastest
    std::vector<double> v_face;   // (nx, ny+1, nz)
    std::vector<double> w;        // (nx, ny, nz+1), interface k below cell k

    double& uf(int i, int j, int k) {  // i in [0, nx]
        return u_face[static_cast<std::size_t>(i) + (nx + 1) *
                      (static_cast<std::size_t>(j) + static_cast<std::size_t>(ny) * k)];
    }
    double uf(int i, int j, int k) const {
        return u_face[static_cast<std::size_t>(i) + (nx + 1) *
                      (static_cast<std::size_t>(j) + static_cast<std::size_t>(ny) * k)];
    }
    double& vf(int i, int j, int k) {  // j in [0, ny]
        return v_face[static_cast<std::size_t>(i) + nx *
                      (static_cast<std::size_t>(j) + static_cast<std::size_t>(ny + 1) * k)];
    }
    double vf(int i, int j, int k) const {
        return v_face[static_cast<std::size_t>(i) + nx *
                      (static_cast<std::size_t>(j) + static_cast<std::size_t>(ny + 1) * k)];
    }
    double& wf(int i, int j, int k) {  // k in [0, nz]
        return w[static_cast<std::size_t>(i) + nx *
                 (static_cast<std::size_t>(j) + static_cast<std::size_t>(ny) * k)];
    }
    double wf(int i, int j, int k) const {
        return w[static_cast<std::size_t>(i) + nx *
                 (static_cast<std::size_t>(j) + static_cast<std::size_t>(ny) * k)];
    }
};

}  // namespace pghd
