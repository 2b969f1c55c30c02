#pragma once

#include <cstdint>
#include <string>

#include "pghd/field.hpp"
#include "pghd/grid.hpp"

namespace pghd {

/// Analytic/source specification for T*, Q, and T0. Text forms:
///   zero | file:<path> | gyre[(amplitude)] | mode(k,l[,m][,amplitude])
///   | random(seed,amplitude,smoothing_passes)
struct ProfileSpec {
    enum class Kind { zero, file, gyre, mode, random };
    Kind kind = Kind::zero;
    std::string path;
    double amplitude = 1.0;
    int k = 1, l = 0, m = 0;
    std::uint64_t seed = 0;
    int smooth_passes = 0;

    /// Throws std::invalid_argument with a descriptive message.
    static ProfileSpec parse(const std::string& text);
    std::string render() const;
};

/// Evaluates a non-file profile over Omega. mode: cos(2 pi k x/Lx)
/// cos(2 pi l y/Ly) cos(m pi (z+h)/h); gyre is the z-independent lift.
ScalarField3 make_profile3(const ProfileSpec& spec, const Grid& g);

/// Section version (the m index is ignored). gyre: amplitude * cos(pi y/Ly).
ScalarField2 make_profile2(const ProfileSpec& spec, const Grid& g);

}  // namespace pghd
