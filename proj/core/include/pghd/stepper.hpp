#pragma once

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>
#include <optional>
#include <string>

#include "pghd/diffusion.hpp"
#include "pghd/field.hpp"

namespace pghd {

enum class Scheme { backward_euler_ab2, crank_nicolson_ab2 };

struct StepConfig {
    double dt = 1e-3;
    Scheme scheme = Scheme::backward_euler_ab2;
    double solver_tol = 1e-10;   // relative linear residual
    int solver_max_iter = 20000;
    double cfl_safety = 0.5;
    double dt_cap = 1.0;         // cfl_dt result for vanishing velocity

    void validate() const {
        if (!(dt > 0.0)) throw std::invalid_argument("StepConfig: dt must be > 0");
        if (!(solver_tol > 0.0)) throw std::invalid_argument("StepConfig: solver_tol must be > 0");
    }
};

struct SimState {
    ScalarField3 Ttilde;
    double t = 0.0;
    long step_index = 0;
    ScalarField3 prev_explicit;  // AB2 history
    bool have_prev = false;
};

/// Thrown on NaN states or linear-solver breakdown (exit code 2 territory).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Effective source Q* = Q - div q(T*). The T* compatibility conditions are
/// checked with one-sided wall differences; a violation beyond tol is
/// reported through `warning` (not fatal).
ScalarField3 effective_source(const ScalarField3& Q, const ScalarField2& Tstar,
                              const PhysParams& p, const Grid& g,
                              std::string* warning = nullptr, double tol = 1e-6);

/// CFL bound safety * min(dx/max|v1|, dy/max|v2|, dz/max|w|), capped.
double cfl_dt(const VelocityField& vel, const Grid& g, double safety = 0.5,
              double cap = 1.0);

/// IMEX integrator for the anomaly equation: the assembled diffusion
/// operator is implicit (backward Euler or Crank-Nicolson), transport and
/// the v.grad T* coupling are explicit (AB2, forward-Euler bootstrap).
/// The linear systems are solved by diagonally preconditioned conjugate
/// gradients to config.solver_tol.
class Stepper {
public:
    Stepper(const DiffusionOperator& op, const StepConfig& cfg);

    /// Advances one step. Tstar must be ghost-filled; Qstar is the effective
    /// source at whatever time level the scheme needs (constant forcing in
    /// production runs; the MMS driver refreshes it each step).
    void step(SimState& state, const ScalarField2& Tstar, const ScalarField3& Qstar,
              bool advection_on = true);

    /// Velocity diagnosed from the current state (also used for CFL checks).
    VelocityField diagnose(const SimState& state, const ScalarField2& Tstar) const;

    const StepConfig& config() const { return cfg_; }
    const DiffusionOperator& op() const { return op_; }
    int last_iterations() const { return last_iters_; }
    double last_residual() const { return last_residual_; }

private:
    DiffusionOperator op_;
    StepConfig cfg_;
    Eigen::SparseMatrix<double> M_;  // I + dt A (BE) or I + dt/2 A (CN)
    Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper>
        cg_;
    int last_iters_ = 0;
    double last_residual_ = 0.0;
};

/// T* broadcast over depth (total temperature helpers).
ScalarField3 lift_section(const ScalarField2& t, const Grid& g);

}  // namespace pghd
