#include "pghd/config.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace pghd {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

ConfigParse parse_config(const std::string& text) {
    ConfigParse out;
    RunConfig cfg;
    std::vector<std::string>& errs = out.errors;

    // key handlers keyed by "section.key"
    using Handler = std::function<void(const std::string&, const std::string&)>;
    std::map<std::string, Handler> handlers;
    auto num = [&errs](double& dst, double lo, bool strict, const std::string& where) {
        return [&dst, lo, strict, where, &errs](const std::string& key, const std::string& v) {
            (void)key;
            try {
                std::size_t pos = 0;
                const double x = std::stod(v, &pos);
                if (pos != v.size()) throw std::invalid_argument(v);
                if (strict ? !(x > lo) : !(x >= lo)) {
                    std::ostringstream os;
                    os << where << ": value " << v << (strict ? " must be > " : " must be >= ")
                       << lo;
                    errs.push_back(os.str());
                    return;
                }
                dst = x;
            } catch (const std::exception&) {
                errs.push_back(where + ": not a number: '" + v + "'");
            }
        };
    };
    auto integer = [&errs](int& dst, int lo, const std::string& where) {
        return [&dst, lo, where, &errs](const std::string&, const std::string& v) {
            try {
                std::size_t pos = 0;
                const long x = std::stol(v, &pos);
                if (pos != v.size()) throw std::invalid_argument(v);
                if (x < lo) {
                    errs.push_back(where + ": must be >= " + std::to_string(lo));
                    return;
                }
                dst = static_cast<int>(x);
            } catch (const std::exception&) {
                errs.push_back(where + ": not an integer: '" + v + "'");
            }
        };
    };
    auto profile = [&errs](ProfileSpec& dst, const std::string& where) {
        return [&dst, where, &errs](const std::string&, const std::string& v) {
            try {
                dst = ProfileSpec::parse(v);
            } catch (const std::exception& e) {
                errs.push_back(where + ": " + e.what());
            }
        };
    };

    handlers["domain.nx"] = integer(cfg.nx, 4, "[domain].nx");
    handlers["domain.ny"] = integer(cfg.ny, 4, "[domain].ny");
    handlers["domain.nz"] = integer(cfg.nz, 4, "[domain].nz");
    handlers["domain.Lx"] = num(cfg.Lx, 0.0, true, "[domain].Lx");
    handlers["domain.Ly"] = num(cfg.Ly, 0.0, true, "[domain].Ly");
    handlers["domain.h"] = num(cfg.h, 0.0, true, "[domain].h");
    handlers["domain.lateral_mode"] = [&](const std::string&, const std::string& v) {
        if (v == "physical") cfg.lateral_mode = LateralMode::physical;
        else if (v == "periodic_test") cfg.lateral_mode = LateralMode::periodic_test;
        else errs.push_back("[domain].lateral_mode: expected physical|periodic_test, got '" + v + "'");
    };
    handlers["domain.assemble_cap"] = [&](const std::string&, const std::string& v) {
        try {
            cfg.assemble_cap = std::stoll(v);
            if (cfg.assemble_cap < 64) errs.push_back("[domain].assemble_cap: too small");
        } catch (const std::exception&) {
            errs.push_back("[domain].assemble_cap: not an integer: '" + v + "'");
        }
    };
    handlers["physics.epsilon"] = num(cfg.phys.epsilon, 0.0, true, "[physics].epsilon");
    handlers["physics.f0"] = [&](const std::string&, const std::string& v) {
        try { cfg.phys.f0 = std::stod(v); } catch (...) { errs.push_back("[physics].f0: not a number"); }
    };
    handlers["physics.beta"] = [&](const std::string&, const std::string& v) {
        try { cfg.phys.beta = std::stod(v); } catch (...) { errs.push_back("[physics].beta: not a number"); }
    };
    handlers["physics.K_v"] = num(cfg.phys.K_v, 0.0, true, "[physics].K_v");
    handlers["physics.K_h"] = num(cfg.phys.K_h, 0.0, true, "[physics].K_h");
    handlers["physics.lambda"] = num(cfg.phys.lambda, 0.0, true, "[physics].lambda");
    handlers["physics.mu"] = num(cfg.phys.mu, 0.0, true, "[physics].mu");
    handlers["physics.alpha"] = num(cfg.phys.alpha, 0.0, false, "[physics].alpha");
    handlers["forcing.Tstar"] = profile(cfg.tstar, "[forcing].Tstar");
    handlers["forcing.Q"] = profile(cfg.q, "[forcing].Q");
    handlers["init.T0"] = profile(cfg.t0, "[init].T0");
    handlers["time.dt"] = num(cfg.dt, 0.0, true, "[time].dt");
    handlers["time.t_end"] = num(cfg.t_end, 0.0, true, "[time].t_end");
    handlers["time.scheme"] = [&](const std::string&, const std::string& v) {
        if (v == "backward_euler_ab2") cfg.scheme = Scheme::backward_euler_ab2;
        else if (v == "crank_nicolson_ab2") cfg.scheme = Scheme::crank_nicolson_ab2;
        else errs.push_back("[time].scheme: expected backward_euler_ab2|crank_nicolson_ab2");
    };
    handlers["time.solver_tol"] = num(cfg.solver_tol, 0.0, true, "[time].solver_tol");
    handlers["time.solver_max_iter"] = integer(cfg.solver_max_iter, 1, "[time].solver_max_iter");
    handlers["time.cfl_safety"] = num(cfg.cfl_safety, 0.0, true, "[time].cfl_safety");
    handlers["time.cfl_override"] = [&](const std::string&, const std::string& v) {
        if (v == "true" || v == "1") cfg.cfl_override = true;
        else if (v == "false" || v == "0") cfg.cfl_override = false;
        else errs.push_back("[time].cfl_override: expected true|false");
    };
    handlers["output.directory"] = [&](const std::string&, const std::string& v) {
        if (v.empty()) errs.push_back("[output].directory: empty");
        else cfg.directory = v;
    };
    handlers["output.snapshot_every"] = integer(cfg.snapshot_every, 0, "[output].snapshot_every");
    handlers["output.diag_every"] = integer(cfg.diag_every, 1, "[output].diag_every");

    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                errs.push_back("line " + std::to_string(lineno) + ": malformed section header");
                continue;
            }
            section = trim(line.substr(1, line.size() - 2));
            if (section != "domain" && section != "physics" && section != "forcing" &&
                section != "init" && section != "time" && section != "output")
                errs.push_back("line " + std::to_string(lineno) + ": unknown section [" +
                               section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            errs.push_back("line " + std::to_string(lineno) + ": expected key = value");
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty()) {
            errs.push_back("line " + std::to_string(lineno) + ": key '" + key +
                           "' outside any section");
            continue;
        }
        const auto it = handlers.find(section + "." + key);
        if (it == handlers.end()) {
            errs.push_back("[" + section + "]." + key + ": unknown key");
            continue;
        }
        it->second(key, value);
    }

    // cross-field constraints
    if (cfg.lateral_mode == LateralMode::periodic_test) {
        if (cfg.phys.alpha != 0.0)
            errs.push_back("[physics].alpha: periodic_test mode requires alpha = 0");
        if (cfg.phys.beta != 0.0)
            errs.push_back("[physics].beta: periodic_test mode requires beta = 0");
    }
    try {
        PhysParams ph = cfg.phys;
        ph.h = cfg.h;
        ph.validate();
        cfg.phys.h = cfg.h;
    } catch (const std::exception& e) {
        errs.push_back(std::string("[physics]: ") + e.what());
    }

    if (errs.empty()) out.config = cfg;
    return out;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    ConfigParse parsed = parse_config(ss.str());
    if (!parsed.config) {
        std::string msg = "config errors in " + path + ":";
        for (const auto& e : parsed.errors) msg += "\n  " + e;
        throw std::runtime_error(msg);
    }
    return *parsed.config;
}

std::string render_config(const RunConfig& cfg) {
    std::ostringstream os;
    os.precision(17);
    os << "[domain]\n"
       << "nx = " << cfg.nx << "\nny = " << cfg.ny << "\nnz = " << cfg.nz << "\n"
       << "Lx = " << cfg.Lx << "\nLy = " << cfg.Ly << "\nh = " << cfg.h << "\n"
       << "lateral_mode = "
       << (cfg.lateral_mode == LateralMode::periodic_test ? "periodic_test" : "physical")
       << "\nassemble_cap = " << cfg.assemble_cap << "\n\n"
       << "[physics]\n"
       << "epsilon = " << cfg.phys.epsilon << "\nf0 = " << cfg.phys.f0
       << "\nbeta = " << cfg.phys.beta << "\nK_v = " << cfg.phys.K_v
       << "\nK_h = " << cfg.phys.K_h << "\nlambda = " << cfg.phys.lambda
       << "\nmu = " << cfg.phys.mu << "\nalpha = " << cfg.phys.alpha << "\n\n"
       << "[forcing]\nTstar = " << cfg.tstar.render() << "\nQ = " << cfg.q.render() << "\n\n"
       << "[init]\nT0 = " << cfg.t0.render() << "\n\n"
       << "[time]\ndt = " << cfg.dt << "\nt_end = " << cfg.t_end << "\nscheme = "
       << (cfg.scheme == Scheme::crank_nicolson_ab2 ? "crank_nicolson_ab2"
                                                    : "backward_euler_ab2")
       << "\nsolver_tol = " << cfg.solver_tol
       << "\nsolver_max_iter = " << cfg.solver_max_iter
       << "\ncfl_safety = " << cfg.cfl_safety
       << "\ncfl_override = " << (cfg.cfl_override ? "true" : "false") << "\n\n"
       << "[output]\ndirectory = " << cfg.directory
       << "\nsnapshot_every = " << cfg.snapshot_every
       << "\ndiag_every = " << cfg.diag_every << "\n";
    return os.str();
}

}  // namespace pghd
