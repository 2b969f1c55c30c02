#include "pghd/profiles.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace pghd {

namespace {

std::vector<double> parse_args(const std::string& text, const std::string& name) {
    const auto open = text.find('(');
    std::vector<double> args;
    if (open == std::string::npos) return args;
    if (text.back() != ')')
        throw std::invalid_argument(name + ": missing closing parenthesis in '" + text + "'");
    std::string inner = text.substr(open + 1, text.size() - open - 2);
    std::stringstream ss(inner);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t pos = 0;
            args.push_back(std::stod(tok, &pos));
            while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument(name + ": bad numeric argument '" + tok + "'");
        }
    }
    return args;
}

}  // namespace

ProfileSpec ProfileSpec::parse(const std::string& text) {
    ProfileSpec s;
    if (text == "zero" || text.empty()) {
        s.kind = Kind::zero;
        return s;
    }
    if (text.rfind("file:", 0) == 0) {
        s.kind = Kind::file;
        s.path = text.substr(5);
        if (s.path.empty()) throw std::invalid_argument("file: profile needs a path");
        return s;
    }
    const std::string name = text.substr(0, text.find('('));
    const auto args = parse_args(text, name);
    if (name == "gyre") {
        s.kind = Kind::gyre;
        if (args.size() > 1) throw std::invalid_argument("gyre takes at most one argument");
        if (!args.empty()) s.amplitude = args[0];
        return s;
    }
    if (name == "mode") {
        s.kind = Kind::mode;
        if (args.size() < 2 || args.size() > 4)
            throw std::invalid_argument("mode(k,l[,m][,amplitude]) takes 2-4 arguments");
        s.k = static_cast<int>(args[0]);
        s.l = static_cast<int>(args[1]);
        s.m = args.size() > 2 ? static_cast<int>(args[2]) : 0;
        s.amplitude = args.size() > 3 ? args[3] : 1.0;
        return s;
    }
    if (name == "random") {
        s.kind = Kind::random;
        if (args.empty())
            throw std::invalid_argument("random(seed,amplitude,passes): seed is required");
        if (args.size() > 3)
            throw std::invalid_argument("random(seed,amplitude,passes) takes 1-3 arguments");
        s.seed = static_cast<std::uint64_t>(args[0]);
        s.amplitude = args.size() > 1 ? args[1] : 1.0;
        s.smooth_passes = args.size() > 2 ? static_cast<int>(args[2]) : 0;
        return s;
    }
    throw std::invalid_argument("unknown profile '" + text + "'");
}

std::string ProfileSpec::render() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::zero: return "zero";
        case Kind::file: return "file:" + path;
        case Kind::gyre:
            os << "gyre(" << amplitude << ")";
            return os.str();
        case Kind::mode:
            os << "mode(" << k << "," << l << "," << m << "," << amplitude << ")";
            return os.str();
        case Kind::random:
            os << "random(" << seed << "," << amplitude << "," << smooth_passes << ")";
            return os.str();
    }
    return "zero";
}

namespace {

template <class At>
void smooth_pass_3d(const Grid& g, At&& at, ScalarField3& f) {
    ScalarField3 out = f;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                out(i, j, k) = (at(f, i, j, k) + at(f, i - 1, j, k) + at(f, i + 1, j, k) +
                                at(f, i, j - 1, k) + at(f, i, j + 1, k) +
                                at(f, i, j, k - 1) + at(f, i, j, k + 1)) / 7.0;
    f = out;
}

}  // namespace

ScalarField3 make_profile3(const ProfileSpec& spec, const Grid& g) {
    ScalarField3 f(g);
    switch (spec.kind) {
        case ProfileSpec::Kind::zero:
            return f;
        case ProfileSpec::Kind::file:
            throw std::logic_error("make_profile3: file profiles load through snapshot io");
        case ProfileSpec::Kind::gyre:
            for (int k = 0; k < g.nz; ++k)
                for (int j = 0; j < g.ny; ++j)
                    for (int i = 0; i < g.nx; ++i)
                        f(i, j, k) = spec.amplitude * std::cos(M_PI * g.y(j) / g.Ly);
            return f;
        case ProfileSpec::Kind::mode:
            for (int k = 0; k < g.nz; ++k)
                for (int j = 0; j < g.ny; ++j)
                    for (int i = 0; i < g.nx; ++i)
                        f(i, j, k) = spec.amplitude *
                                     std::cos(2.0 * M_PI * spec.k * g.x(i) / g.Lx) *
                                     std::cos(2.0 * M_PI * spec.l * g.y(j) / g.Ly) *
                                     std::cos(spec.m * M_PI * (g.z(k) + g.h) / g.h);
            return f;
        case ProfileSpec::Kind::random: {
            std::mt19937_64 rng(spec.seed);
            std::uniform_real_distribution<double> ud(-spec.amplitude, spec.amplitude);
            for (int k = 0; k < g.nz; ++k)
                for (int j = 0; j < g.ny; ++j)
                    for (int i = 0; i < g.nx; ++i) f(i, j, k) = ud(rng);
            auto at = [&](const ScalarField3& u, int i, int j, int k) {
                if (g.periodic()) {
                    i = (i % g.nx + g.nx) % g.nx;
                    j = (j % g.ny + g.ny) % g.ny;
                } else {
                    i = std::clamp(i, 0, g.nx - 1);
                    j = std::clamp(j, 0, g.ny - 1);
                }
                k = std::clamp(k, 0, g.nz - 1);
                return u(i, j, k);
            };
            for (int pass = 0; pass < spec.smooth_passes; ++pass) smooth_pass_3d(g, at, f);
            return f;
        }
    }
    return f;
}

ScalarField2 make_profile2(const ProfileSpec& spec, const Grid& g) {
    ScalarField2 f(g);
    switch (spec.kind) {
        case ProfileSpec::Kind::zero:
            return f;
        case ProfileSpec::Kind::file:
            throw std::logic_error("make_profile2: file profiles load through snapshot io");
        case ProfileSpec::Kind::gyre:
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i)
                    f(i, j) = spec.amplitude * std::cos(M_PI * g.y(j) / g.Ly);
            return f;
        case ProfileSpec::Kind::mode:
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i)
                    f(i, j) = spec.amplitude *
                              std::cos(2.0 * M_PI * spec.k * g.x(i) / g.Lx) *
                              std::cos(2.0 * M_PI * spec.l * g.y(j) / g.Ly);
            return f;
        case ProfileSpec::Kind::random: {
            std::mt19937_64 rng(spec.seed);
            std::uniform_real_distribution<double> ud(-spec.amplitude, spec.amplitude);
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i) f(i, j) = ud(rng);
            auto at = [&](const ScalarField2& u, int i, int j) {
                if (g.periodic()) {
                    i = (i % g.nx + g.nx) % g.nx;
                    j = (j % g.ny + g.ny) % g.ny;
                } else {
                    i = std::clamp(i, 0, g.nx - 1);
                    j = std::clamp(j, 0, g.ny - 1);
                }
                return u(i, j);
            };
            for (int pass = 0; pass < spec.smooth_passes; ++pass) {
                ScalarField2 out = f;
                for (int j = 0; j < g.ny; ++j)
                    for (int i = 0; i < g.nx; ++i)
                        out(i, j) = (at(f, i, j) + at(f, i - 1, j) + at(f, i + 1, j) +
                                     at(f, i, j - 1) + at(f, i, j + 1)) / 5.0;
                f = out;
            }
            return f;
        }
    }
    return f;
}

}  // namespace pghd
