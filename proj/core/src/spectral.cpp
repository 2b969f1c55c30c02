#include "pghd/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <stdexcept>

#include "pghd/advection.hpp"
#include "pghd/boundary.hpp"
#include "pghd/integrals.hpp"
#include "pghd/velocity.hpp"

namespace pghd {

namespace {

ScalarField3 to_field(const Eigen::VectorXd& x, const Grid& g) {
    ScalarField3 f(g);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) f(i, j, k) = x[f.interior_index(i, j, k)];
    return f;
}

void push_mode(EigenBasis& basis, const DiffusionOperator& op, const Eigen::VectorXd& v,
               double lam) {
    const Grid& g = op.grid;
    const double dv = g.cell_volume();
    Eigen::VectorXd u = v / (v.norm() * std::sqrt(dv));  // inner_l2(phi,phi) = 1
    Eigen::VectorXd r = op.A * u - lam * u;
    basis.lambda.push_back(lam);
    basis.residual.push_back(r.norm() * std::sqrt(dv));
    basis.phi.push_back(to_field(u, g));
}

EigenBasis basis_dense(const DiffusionOperator& op, int m) {
    Eigen::MatrixXd Ad(op.A);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Ad);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("compute_basis: dense eigensolver failed");
    EigenBasis basis;
    basis.m = m;
    for (int k = 0; k < m; ++k) push_mode(basis, op, es.eigenvectors().col(k), es.eigenvalues()[k]);
    return basis;
}

// Periodic grids: the assembled operator is block-circulant in (i,j). Probe
// the nz columns over one reference stack, form the per-wavenumber Hermitian
// symbol, and take its eigenpairs. Exact multiplicities come for free.
EigenBasis basis_periodic(const DiffusionOperator& op, int m) {
    const Grid& g = op.grid;
    const int nx = g.nx, ny = g.ny, nz = g.nz;

    std::map<std::pair<int, int>, Eigen::MatrixXd> blocks;
    ScalarField3 e(g);
    for (int kp = 0; kp < nz; ++kp) {
        e.fill(0.0);
        e(0, 0, kp) = 1.0;
        const ScalarField3 col = op.apply(e);
        for (int k = 0; k < nz; ++k)
            for (int j = 0; j < ny; ++j)
                for (int i = 0; i < nx; ++i) {
                    const double v = col(i, j, k);
                    if (v == 0.0) continue;
                    int di = i <= nx / 2 ? i : i - nx;
                    int dj = j <= ny / 2 ? j : j - ny;
                    auto& blk = blocks[{di, dj}];
                    if (blk.size() == 0) blk = Eigen::MatrixXd::Zero(nz, nz);
                    blk(k, kp) = v;
                }
    }

    struct Cand {
        double lam;
        int kx, ky, r;
        bool pair;  // contributes two real modes
    };
    std::vector<Cand> cands;
    std::map<std::pair<int, int>, Eigen::MatrixXcd> vecs;
    for (int ky = 0; ky < ny; ++ky)
        for (int kx = 0; kx < nx; ++kx) {
            const int px = (nx - kx) % nx, py = (ny - ky) % ny;
            const bool self = (px == kx && py == ky);
            if (!self && std::make_pair(kx, ky) > std::make_pair(px, py)) continue;
            Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(nz, nz);
            for (const auto& [off, blk] : blocks) {
                const double th = -2.0 * M_PI * (static_cast<double>(kx) * off.first / nx +
                                                 static_cast<double>(ky) * off.second / ny);
                S += std::polar(1.0, th) * blk;
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (S + S.adjoint()));
            vecs[{kx, ky}] = es.eigenvectors();
            for (int r = 0; r < nz; ++r)
                cands.push_back({es.eigenvalues()[r], kx, ky, r, !self});
        }
    std::sort(cands.begin(), cands.end(),
              [](const Cand& a, const Cand& b) { return a.lam < b.lam; });

    EigenBasis basis;
    basis.m = m;
    const std::int64_t n = g.n_cells();
    for (const Cand& c : cands) {
        if (static_cast<int>(basis.lambda.size()) >= m) break;
        const Eigen::VectorXcd u = vecs[{c.kx, c.ky}].col(c.r);
        Eigen::VectorXd re(n), im(n);
        ScalarField3 tmp(g);
        for (int k = 0; k < nz; ++k)
            for (int j = 0; j < ny; ++j)
                for (int i = 0; i < nx; ++i) {
                    const double th = 2.0 * M_PI * (static_cast<double>(c.kx) * i / nx +
                                                    static_cast<double>(c.ky) * j / ny);
                    const std::complex<double> v = std::polar(1.0, th) * u[k];
                    const auto id = tmp.interior_index(i, j, k);
                    re[id] = v.real();
                    im[id] = v.imag();
                }
        push_mode(basis, op, re, c.lam);
        if (c.pair && static_cast<int>(basis.lambda.size()) < m) {
            // orthogonalize the companion against the first (degenerate pair)
            Eigen::VectorXd w = im - (re.dot(im) / re.squaredNorm()) * re;
            if (w.norm() > 1e-8 * im.norm() + 1e-300) push_mode(basis, op, w, c.lam);
        }
    }
    if (static_cast<int>(basis.lambda.size()) < m)
        throw std::runtime_error("compute_basis: periodic path produced too few modes");
    return basis;
}

// Physical mid-size grids: inverse subspace iteration with Rayleigh-Ritz.
EigenBasis basis_subspace(const DiffusionOperator& op, int m) {
    const std::int64_t n = op.A.rows();
    const int p = m + std::max<int>(8, m / 3);
    if (p >= n) throw std::invalid_argument("compute_basis: m too large for grid");

    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(op.A);
    if (ldlt.info() != Eigen::Success)
        throw std::runtime_error("compute_basis: LDLT factorization failed (operator not SPD?)");

    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::normal_distribution<double> nd;
    Eigen::MatrixXd X(n, p);
    for (std::int64_t i = 0; i < n; ++i)
        for (int c = 0; c < p; ++c) X(i, c) = nd(rng);

    Eigen::VectorXd theta(p);
    const int max_iter = 300;
    for (int it = 0; it < max_iter; ++it) {
        Eigen::MatrixXd Y = ldlt.solve(X);
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(Y);
        Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(n, p);
        Eigen::MatrixXd AQ = op.A * Q;
        Eigen::MatrixXd H = Q.transpose() * AQ;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (H + H.transpose()));
        X = Q * es.eigenvectors();
        theta = es.eigenvalues();
        // converged when the wanted Ritz pairs have small relative residuals
        Eigen::MatrixXd AX = op.A * X.leftCols(m);
        double worst = 0.0;
        for (int c = 0; c < m; ++c) {
            const double r = (AX.col(c) - theta[c] * X.col(c)).norm() /
                             std::max(std::abs(theta[c]), 1e-300);
            worst = std::max(worst, r);
        }
        if (worst < 1e-9) break;
        if (it == max_iter - 1)
            throw std::runtime_error("compute_basis: subspace iteration did not converge");
    }
    EigenBasis basis;
    basis.m = m;
    for (int c = 0; c < m; ++c) push_mode(basis, op, X.col(c), theta[c]);
    return basis;
}

}  // namespace

EigenBasis compute_basis(const DiffusionOperator& op, int m, std::int64_t dense_threshold) {
    if (m < 1 || m > op.A.rows())
        throw std::invalid_argument("compute_basis: m out of range");
    if (op.A.rows() <= dense_threshold) return basis_dense(op, m);
    if (op.grid.periodic()) return basis_periodic(op, m);
    return basis_subspace(op, m);
}

double weyl_growth_check(const EigenBasis& basis) {
    const int m = static_cast<int>(basis.lambda.size());
    if (m < 10) throw std::invalid_argument("weyl_growth_check: need at least 10 modes");
    const double l1 = basis.lambda[0];
    if (!(l1 > 0.0)) throw std::invalid_argument("weyl_growth_check: lambda_1 must be > 0");
    double mn = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= m; ++k)
        mn = std::min(mn, (basis.lambda[k - 1] / l1) / k);
    return mn;
}

std::vector<double> project(const EigenBasis& basis, const ScalarField3& T, const Grid& g) {
    std::vector<double> a(basis.lambda.size());
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = inner_l2(T, basis.phi[k], g);
    return a;
}

ScalarField3 reconstruct(const EigenBasis& basis, const std::vector<double>& coeffs,
                         const Grid& g) {
    if (coeffs.size() > basis.phi.size())
        throw std::invalid_argument("reconstruct: coefficient count exceeds basis size");
    ScalarField3 out(g);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        axpy_interior(out, coeffs[k], basis.phi[k]);
    return out;
}

void galerkin_step(GalerkinState& st, const EigenBasis& basis, const PhysParams& p,
                   const Grid& g, double dt, const ScalarField2& Tstar,
                   const ScalarField3& Qstar, bool advection_on) {
    const std::size_t m = st.a.size();
    if (m > basis.phi.size()) throw std::invalid_argument("galerkin_step: state/basis mismatch");

    std::vector<double> rhs(m, 0.0);
    if (advection_on) {
        ScalarField3 Tm = reconstruct(basis, st.a, g);
        fill_ghosts(Tm, p, g);
        const VelocityField vel = diagnose_velocity(Tm, Tstar, p, g);
        ScalarField3 N = advect_tendency(Tm, vel, g);
        for (int k = 0; k < g.nz; ++k)
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i) {
                    const double sx = (Tstar(i + 1, j) - Tstar(i - 1, j)) / (2.0 * g.dx);
                    const double sy = (Tstar(i, j + 1) - Tstar(i, j - 1)) / (2.0 * g.dy);
                    N(i, j, k) -= vel.v1(i, j, k) * sx + vel.v2(i, j, k) * sy;
                }
        for (std::size_t k = 0; k < m; ++k) rhs[k] = inner_l2(N, basis.phi[k], g);
    }

    for (std::size_t k = 0; k < m; ++k) {
        double e = rhs[k];
        if (st.have_prev) e = 1.5 * rhs[k] - 0.5 * st.prev_rhs[k];
        e += inner_l2(Qstar, basis.phi[k], g);
        st.a[k] = (st.a[k] + dt * e) / (1.0 + dt * basis.lambda[k]);
    }
    st.prev_rhs = rhs;
    st.have_prev = advection_on;
    st.t += dt;
}

}  // namespace pghd
