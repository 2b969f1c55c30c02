#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pghd/grid.hpp"
#include "pghd/params.hpp"
#include "pghd/profiles.hpp"
#include "pghd/stepper.hpp"

namespace pghd {

/// Fully resolved run configuration (INI-style text form; every key has a
/// documented default, unknown keys are errors).
struct RunConfig {
    // [domain]
    int nx = 16, ny = 16, nz = 8;
    double Lx = 1.0, Ly = 1.0, h = 1.0;
    LateralMode lateral_mode = LateralMode::physical;
    std::int64_t assemble_cap = 200000;
    // [physics]
    PhysParams phys;
    // [forcing]
    ProfileSpec tstar, q;
    // [init]
    ProfileSpec t0;
    // [time]
    double dt = 1e-3;
    double t_end = 0.1;
    Scheme scheme = Scheme::backward_euler_ab2;
    double solver_tol = 1e-10;
    int solver_max_iter = 20000;
    double cfl_safety = 0.5;
    bool cfl_override = false;
    // [output]
    std::string directory = "out";
    int snapshot_every = 0;  // 0: final snapshot only
    int diag_every = 1;

    Grid make_grid() const { return Grid(nx, ny, nz, Lx, Ly, h, lateral_mode); }
    StepConfig make_step_config() const {
        StepConfig s;
        s.dt = dt;
        s.scheme = scheme;
        s.solver_tol = solver_tol;
        s.solver_max_iter = solver_max_iter;
        s.cfl_safety = cfl_safety;
        return s;
    }
};

struct ConfigParse {
    std::optional<RunConfig> config;  // set iff errors is empty
    std::vector<std::string> errors;  // "[section].key: message"
};

/// Total parser: never throws on malformed input, collects every error.
ConfigParse parse_config(const std::string& text);

/// Loads and parses, throwing std::runtime_error with the joined error list.
RunConfig load_config_file(const std::string& path);

/// Resolved round-trippable text form (written into the output directory).
std::string render_config(const RunConfig& cfg);

}  // namespace pghd
