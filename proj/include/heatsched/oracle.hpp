#pragma once

#include "heatsched/thermo.hpp"

namespace heatsched {

struct OracleResult {
    PowerSchedule schedule;
    double objective = 0;
    // Lipschitz-based bound on how far `objective` can sit below the true
    // optimum at this grid resolution. For HighSinr the bound is anchored at
    // the best grid point (the log objective is not globally Lipschitz).
    double gap_bound = 0;
};

// Exhaustive search over the feasible grid with step resolution * max(E).
// Only intended for verification at desk scale; throws HorizonTooLarge for
// D > 4.
OracleResult grid_oracle(const Scenario& scenario, ConstraintModel model,
                         ObjectiveKind kind, double resolution);

}  // namespace heatsched
