#pragma once

#include <utility>
#include <vector>

#include "pghd/field.hpp"
#include "pghd/grid.hpp"
#include "pghd/params.hpp"

namespace pghd {

/// Vertical condition applied at z = 0 during a ghost fill. The temperature
/// anomaly carries the Robin relaxation; lifted sections (T*) and other
/// z-independent fields use plain Neumann.
enum class TopBC { robin, neumann };

/// First-layer lateral ghost fill expressed as linear combinations of
/// interior values. z-independent, so the plan is two-dimensional:
/// one entry per ring cell (i,j) with i in {-1,nx} or j in {-1,ny}.
/// Physical mode encodes the oblique condition eps*dT/dn + f*dT/ds = 0
/// (tangential slope from the first interior line, centered; one-sided at
/// corner-adjacent rows; corners average the two mirrored edge ghosts).
/// Periodic mode encodes wrap.
struct LateralFillPlan {
    struct Entry {
        int gi, gj;  // ghost ring cell
        std::vector<std::pair<std::pair<int, int>, double>> terms;  // ((i,j), coeff)
    };
    std::vector<Entry> entries;
};

LateralFillPlan build_lateral_fill_plan(const PhysParams& p, const Grid& g);

/// Robin ghost factor at z = 0: ghost = factor * top interior value.
/// Derived from (g - t)/dz + (alpha/K_v)*(g + t)/2 = 0.
inline double robin_ghost_factor(const PhysParams& p, const Grid& g) {
    const double a = p.alpha * g.dz / (2.0 * p.K_v);
    return (1.0 - a) / (1.0 + a);
}

/// Fills every ghost layer of T consistently with the boundary conditions:
/// first lateral layer by the oblique condition (or wrap), vertical ghosts
/// (Neumann at z=-h, Robin or Neumann at z=0) for interior and first-layer
/// ghost columns, then the second lateral layer from the zero normal-flux
/// condition q(T).n = 0 solved for the outer ghost. Interior values are
/// never modified; the fill is idempotent.
void fill_ghosts(ScalarField3& T, const PhysParams& p, const Grid& g,
                 TopBC top = TopBC::robin);

/// Lateral-only fill for sections on M (same rules, single level; the
/// normal-flux solve drops the mu*grad(T_zz) term).
void fill_ghosts_2d(ScalarField2& t, const PhysParams& p, const Grid& g);

/// Applies only the first lateral layer (what the assembled operator needs).
void fill_lateral1(ScalarField3& T, const LateralFillPlan& plan);
void fill_lateral1_2d(ScalarField2& t, const LateralFillPlan& plan);

}  // namespace pghd
