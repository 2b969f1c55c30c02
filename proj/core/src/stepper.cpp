#include "pghd/stepper.hpp"

#include <cmath>
#include <sstream>

#include "pghd/advection.hpp"
#include "pghd/boundary.hpp"
#include "pghd/integrals.hpp"
#include "pghd/velocity.hpp"

namespace pghd {

ScalarField3 lift_section(const ScalarField2& t, const Grid& g) {
    ScalarField3 out(g);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) out(i, j, k) = t(i, j);
    return out;
}

ScalarField3 effective_source(const ScalarField3& Q, const ScalarField2& Tstar,
                              const PhysParams& p, const Grid& g,
                              std::string* warning, double tol) {
    ScalarField2 ts = Tstar;
    fill_ghosts_2d(ts, p, g);

    if (warning && !g.periodic()) {
        // compatibility residuals from one-sided interior differences
        double oblique = 0.0;
        auto tan_x = [&](int i, int j) {  // T*_y along x-walls
            if (j == 0) return (Tstar(i, 1) - Tstar(i, 0)) / g.dy;
            if (j == g.ny - 1) return (Tstar(i, j) - Tstar(i, j - 1)) / g.dy;
            return (Tstar(i, j + 1) - Tstar(i, j - 1)) / (2.0 * g.dy);
        };
        auto tan_y = [&](int i, int j) {  // T*_x along y-walls
            if (i == 0) return (Tstar(1, j) - Tstar(0, j)) / g.dx;
            if (i == g.nx - 1) return (Tstar(i, j) - Tstar(i - 1, j)) / g.dx;
            return (Tstar(i + 1, j) - Tstar(i - 1, j)) / (2.0 * g.dx);
        };
        for (int j = 0; j < g.ny; ++j) {
            const double f = p.coriolis(g.y(j));
            const double dnW = (Tstar(1, j) - Tstar(0, j)) / g.dx;        // inward
            const double dnE = (Tstar(g.nx - 1, j) - Tstar(g.nx - 2, j)) / g.dx;
            oblique = std::max(oblique, std::abs(p.epsilon * dnW + f * tan_x(0, j)));
            oblique = std::max(oblique, std::abs(p.epsilon * dnE + f * tan_x(g.nx - 1, j)));
        }
        for (int i = 0; i < g.nx; ++i) {
            const double fS = p.coriolis(0.0), fN = p.coriolis(g.Ly);
            const double dnS = (Tstar(i, 1) - Tstar(i, 0)) / g.dy;
            const double dnN = (Tstar(i, g.ny - 1) - Tstar(i, g.ny - 2)) / g.dy;
            oblique = std::max(oblique, std::abs(p.epsilon * dnS - fS * tan_y(i, 0)));
            oblique = std::max(oblique, std::abs(p.epsilon * dnN - fN * tan_y(i, g.ny - 1)));
        }
        if (oblique > tol) {
            std::ostringstream os;
            os << "T* violates the lateral compatibility conditions (max residual "
               << oblique << " > " << tol << "); boundary-layer artifacts possible";
            *warning = os.str();
        }
    }

    const ScalarField2 divq = apply_divq_flux_2d(ts, p, g);
    ScalarField3 out(g);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) out(i, j, k) = Q(i, j, k) - divq(i, j);
    return out;
}

double cfl_dt(const VelocityField& vel, const Grid& g, double safety, double cap) {
    double m1 = 0.0, m2 = 0.0, mw = 0.0;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                m1 = std::max(m1, std::abs(vel.v1(i, j, k)));
                m2 = std::max(m2, std::abs(vel.v2(i, j, k)));
            }
    for (double w : vel.w) mw = std::max(mw, std::abs(w));
    double dt = cap / safety;
    if (m1 > 0.0) dt = std::min(dt, g.dx / m1);
    if (m2 > 0.0) dt = std::min(dt, g.dy / m2);
    if (mw > 0.0) dt = std::min(dt, g.dz / mw);
    return std::min(cap, safety * dt);
}

Stepper::Stepper(const DiffusionOperator& op, const StepConfig& cfg) : op_(op), cfg_(cfg) {
    cfg_.validate();
    const double s = (cfg_.scheme == Scheme::crank_nicolson_ab2) ? 0.5 : 1.0;
    Eigen::SparseMatrix<double> I(op_.A.rows(), op_.A.cols());
    I.setIdentity();
    M_ = I + (s * cfg_.dt) * op_.A;
    M_.makeCompressed();
    cg_.setTolerance(cfg_.solver_tol);
    cg_.setMaxIterations(cfg_.solver_max_iter);
    cg_.compute(M_);
}

VelocityField Stepper::diagnose(const SimState& state, const ScalarField2& Tstar) const {
    ScalarField3 T = state.Ttilde;
    fill_ghosts(T, op_.params, op_.grid);
    return diagnose_velocity(T, Tstar, op_.params, op_.grid);
}

void Stepper::step(SimState& state, const ScalarField2& Tstar, const ScalarField3& Qstar,
                   bool advection_on) {
    const Grid& g = op_.grid;
    const PhysParams& p = op_.params;
    const std::int64_t n = g.n_cells();

    ScalarField3 N(g);
    if (advection_on) {
        ScalarField3 T = state.Ttilde;
        fill_ghosts(T, p, g);
        const VelocityField vel = diagnose_velocity(T, Tstar, p, g);
        N = advect_tendency(T, vel, g);
        for (int k = 0; k < g.nz; ++k)
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i) {
                    const double sx = (Tstar(i + 1, j) - Tstar(i - 1, j)) / (2.0 * g.dx);
                    const double sy = (Tstar(i, j + 1) - Tstar(i, j - 1)) / (2.0 * g.dy);
                    N(i, j, k) -= vel.v1(i, j, k) * sx + vel.v2(i, j, k) * sy;
                }
    }

    Eigen::VectorXd rhs(n), x0(n);
    const double cn = (cfg_.scheme == Scheme::crank_nicolson_ab2) ? 0.5 : 0.0;
    Eigen::VectorXd tn(n);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const auto c = state.Ttilde.interior_index(i, j, k);
                tn[c] = state.Ttilde(i, j, k);
                double e = N(i, j, k);
                if (state.have_prev) e = 1.5 * N(i, j, k) - 0.5 * state.prev_explicit(i, j, k);
                rhs[c] = cfg_.dt * (e + Qstar(i, j, k));
            }
    rhs += tn;
    if (cn > 0.0) rhs -= (cn * cfg_.dt) * (op_.A * tn);
    x0 = tn;

    Eigen::VectorXd x = cg_.solveWithGuess(rhs, x0);
    last_iters_ = static_cast<int>(cg_.iterations());
    last_residual_ = cg_.error();
    if (cg_.info() != Eigen::Success && last_residual_ > cfg_.solver_tol) {
        std::ostringstream os;
        os << "linear solver failed to converge: residual " << last_residual_
           << " after " << last_iters_ << " iterations (tol " << cfg_.solver_tol << ")";
        throw NumericalError(os.str());
    }

    state.prev_explicit = N;
    state.have_prev = advection_on;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                state.Ttilde(i, j, k) = x[state.Ttilde.interior_index(i, j, k)];
    if (has_non_finite(state.Ttilde))
        throw NumericalError("NaN/Inf detected in the temperature field");
    state.t += cfg_.dt;
    ++state.step_index;
}

}  // namespace pghd
