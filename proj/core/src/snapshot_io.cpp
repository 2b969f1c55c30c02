#include "pghd/snapshot_io.hpp"

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <sstream>
#include <stdexcept>

namespace pghd {

namespace {

// interior values, x-fastest
std::vector<double> pack(const ScalarField3& f, const Grid& g) {
    std::vector<double> buf(static_cast<std::size_t>(g.n_cells()));
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) buf[f.interior_index(i, j, k)] = f(i, j, k);
    return buf;
}

}  // namespace

void write_snapshot(const ScalarField3& f, const Grid& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_snapshot: cannot open " + path);
    char header[256];
    std::snprintf(header, sizeof(header), "PGHD1 %d %d %d %.17g %.17g %.17g\n", g.nx, g.ny,
                  g.nz, g.Lx, g.Ly, g.h);
    out << header;
    const std::vector<double> buf = pack(f, g);
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(buf.size() * sizeof(double)));
    if (!out) throw std::runtime_error("write_snapshot: short write to " + path);
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_snapshot: cannot open " + path);
    std::string header;
    std::getline(in, header);
    std::istringstream hs(header);
    std::string magic;
    int nx, ny, nz;
    double Lx, Ly, h;
    hs >> magic >> nx >> ny >> nz >> Lx >> Ly >> h;
    if (magic != "PGHD1" || !hs)
        throw std::runtime_error("read_snapshot: bad magic/header in " + path);
    if (nx < 1 || ny < 1 || nz < 1 || !(Lx > 0) || !(Ly > 0) || !(h > 0))
        throw std::runtime_error("read_snapshot: bad dimensions in " + path);
    // Bypass Grid::finalize: sections are stored with nz = 1.
    Grid g;
    g.nx = nx; g.ny = ny; g.nz = nz;
    g.Lx = Lx; g.Ly = Ly; g.h = h;
    g.dx = Lx / nx; g.dy = Ly / ny; g.dz = h / nz;
    Snapshot snap{g, ScalarField3(g)};
    std::vector<double> buf(static_cast<std::size_t>(nx) * ny * nz);
    in.read(reinterpret_cast<char*>(buf.data()),
            static_cast<std::streamsize>(buf.size() * sizeof(double)));
    if (in.gcount() != static_cast<std::streamsize>(buf.size() * sizeof(double)))
        throw std::runtime_error("read_snapshot: size mismatch (truncated file) in " + path);
    char extra;
    if (in.read(&extra, 1))
        throw std::runtime_error("read_snapshot: size mismatch (trailing bytes) in " + path);
    for (int k = 0; k < nz; ++k)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i)
                snap.field(i, j, k) = buf[snap.field.interior_index(i, j, k)];
    return snap;
}

void write_snapshot_2d(const ScalarField2& f, const Grid& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_snapshot_2d: cannot open " + path);
    char header[256];
    std::snprintf(header, sizeof(header), "PGHD1 %d %d %d %.17g %.17g %.17g\n", g.nx, g.ny, 1,
                  g.Lx, g.Ly, g.h);
    out << header;
    std::vector<double> buf(static_cast<std::size_t>(g.nx) * g.ny);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            buf[static_cast<std::size_t>(j) * g.nx + i] = f(i, j);
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(buf.size() * sizeof(double)));
}

ScalarField2 read_snapshot_2d(const std::string& path, const Grid& g) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_snapshot_2d: cannot open " + path);
    std::string header;
    std::getline(in, header);
    std::istringstream hs(header);
    std::string magic;
    int nx, ny, nz;
    double Lx, Ly, h;
    hs >> magic >> nx >> ny >> nz >> Lx >> Ly >> h;
    if (magic != "PGHD1" || !hs)
        throw std::runtime_error("read_snapshot_2d: bad header in " + path);
    if (nx != g.nx || ny != g.ny || nz != 1)
        throw std::runtime_error("read_snapshot_2d: dimensions do not match the domain");
    ScalarField2 f(g);
    std::vector<double> buf(static_cast<std::size_t>(nx) * ny);
    in.read(reinterpret_cast<char*>(buf.data()),
            static_cast<std::streamsize>(buf.size() * sizeof(double)));
    if (in.gcount() != static_cast<std::streamsize>(buf.size() * sizeof(double)))
        throw std::runtime_error("read_snapshot_2d: size mismatch in " + path);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) f(i, j) = buf[static_cast<std::size_t>(j) * nx + i];
    return f;
}

DiagnosticsCsv::DiagnosticsCsv(const std::string& path) : out_(path) {
    if (!out_) throw std::runtime_error("cannot open diagnostics csv: " + path);
    out_ << "t,l2_sq,v2_sq,surface_l2,adv_energy,source_power,bl_grad\n";
    out_.precision(16);
}

void DiagnosticsCsv::row(double t, double l2_sq, double v2_sq, double surface_l2,
                         double adv_energy, double source_power, double bl_grad) {
    out_ << t << ',' << l2_sq << ',' << v2_sq << ',' << surface_l2 << ',' << adv_energy
         << ',' << source_power << ',' << bl_grad << '\n';
    out_.flush();
}

void write_basis(const EigenBasis& basis, const Grid& g, const std::string& dir) {
    std::filesystem::create_directories(dir);
    std::ofstream manifest(dir + "/manifest.txt");
    if (!manifest) throw std::runtime_error("write_basis: cannot open manifest");
    manifest.precision(16);
    for (std::size_t k = 0; k < basis.lambda.size(); ++k) {
        char name[64];
        std::snprintf(name, sizeof(name), "mode_%04zu.pghd", k);
        write_snapshot(basis.phi[k], g, dir + "/" + name);
        manifest << k << " " << basis.lambda[k] << " " << basis.residual[k] << "\n";
    }
}

}  // namespace pghd
