#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "pghd/field.hpp"
#include "pghd/grid.hpp"
#include "pghd/spectral.hpp"

namespace pghd {

/// PGHD1 snapshot: one text header line
///   "PGHD1 nx ny nz Lx Ly h\n"
/// followed by nx*ny*nz little-endian float64 interior values, x-fastest.
/// write/read round-trips are bit exact.
void write_snapshot(const ScalarField3& f, const Grid& g, const std::string& path);

struct Snapshot {
    Grid grid;  // geometry only (lateral mode defaults to physical)
    ScalarField3 field;
};
Snapshot read_snapshot(const std::string& path);

/// Sections are stored as nz = 1 snapshots.
void write_snapshot_2d(const ScalarField2& f, const Grid& g, const std::string& path);
ScalarField2 read_snapshot_2d(const std::string& path, const Grid& g);

/// diagnostics.csv with the fixed schema
/// "t,l2_sq,v2_sq,surface_l2,adv_energy,source_power,bl_grad".
class DiagnosticsCsv {
public:
    explicit DiagnosticsCsv(const std::string& path);
    void row(double t, double l2_sq, double v2_sq, double surface_l2, double adv_energy,
             double source_power, double bl_grad);

private:
    std::ofstream out_;
};

/// Per-mode snapshots plus a text manifest "k lambda_k residual" per line.
void write_basis(const EigenBasis& basis, const Grid& g, const std::string& dir);

}  // namespace pghd
