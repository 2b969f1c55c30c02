// pghd — planetary geostrophic thermocline simulator with "horizontal"
// hyper-diffusion. Subcommands: run, verify, eig, mms, compare, diag.
#include <cstring>
#include <iostream>
#include <string>

#include "pghd/config.hpp"
#include "pghd/simulation.hpp"
#include "pghd/stepper.hpp"

namespace {

void usage(std::ostream& os) {
    os << "usage: pghd <subcommand> [args]\n"
          "  run <config>                     time integration; snapshots + diagnostics.csv\n"
          "  verify <config> [--export-operator <path>]\n"
          "                                   structural-identity suite (pass/fail table)\n"
          "  eig <config> --modes <m>         eigenbasis + growth report\n"
          "  mms <config> [--levels <k>]      manufactured-solution convergence tables\n"
          "  compare <config> [--bl-width <w>]\n"
          "                                   paired run with/without hyper-diffusion\n"
          "  diag <dir> [--C0 x] [--C2 x] [--C x]\n"
          "                                   ball/dimension bounds for a finished run\n"
          "exit codes: 0 ok, 1 usage/config, 2 numerical failure, 3 verification failure\n";
}

bool get_flag(int argc, char** argv, const char* name, std::string& out) {
    for (int i = 3; i + 1 < argc; ++i)
        if (std::strcmp(argv[i], name) == 0) {
            out = argv[i + 1];
            return true;
        }
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace pghd;
    if (argc < 2) {
        usage(std::cerr);
        return kExitUsage;
    }
    const std::string cmd = argv[1];
    try {
        if (cmd == "diag") {
            if (argc < 3) {
                usage(std::cerr);
                return kExitUsage;
            }
            std::string v;
            const double C0 = get_flag(argc, argv, "--C0", v) ? std::stod(v) : 1.0;
            const double C2 = get_flag(argc, argv, "--C2", v) ? std::stod(v) : 1.0;
            const double C = get_flag(argc, argv, "--C", v) ? std::stod(v) : 1.0;
            return run_diag(argv[2], C0, C2, C, std::cout);
        }
        if (argc < 3) {
            usage(std::cerr);
            return kExitUsage;
        }
        const RunConfig cfg = load_config_file(argv[2]);
        if (cmd == "run") return run_simulation(cfg, std::cout);
        if (cmd == "verify") {
            std::string path;
            get_flag(argc, argv, "--export-operator", path);
            return run_verify(cfg, std::cout, path);
        }
        if (cmd == "eig") {
            std::string v;
            if (!get_flag(argc, argv, "--modes", v)) {
                std::cerr << "eig: --modes <m> is required\n";
                return kExitUsage;
            }
            return run_eig(cfg, std::stoi(v), std::cout);
        }
        if (cmd == "mms") {
            std::string v;
            const int levels = get_flag(argc, argv, "--levels", v) ? std::stoi(v) : 3;
            return run_mms(cfg, levels, std::cout);
        }
        if (cmd == "compare") {
            std::string v;
            const int w = get_flag(argc, argv, "--bl-width", v) ? std::stoi(v) : 2;
            return run_compare(cfg, std::cout, w);
        }
        std::cerr << "unknown subcommand '" << cmd << "'\n";
        usage(std::cerr);
        return kExitUsage;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
